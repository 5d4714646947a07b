#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cactus/coloring.hpp"
#include "cactus/graph.hpp"

namespace cactus {

// Certificate for a Yes answer: contracting f (a forest of `size` edges)
// turns the input into the cactus `quotient`.
struct ContractionSolution {
    std::vector<Edge> f;
    int size = 0;
    Graph quotient;
};

enum class SolveMode { randomized, deterministic };

struct SolverConfig {
    SolveMode mode = SolveMode::deterministic;
    long trials = 0;  // randomized mode: 0 = auto (3^6k, capped)
    std::uint64_t seed = 1;
    long trial_cap = 100000;
};

struct SolveStats {
    long trials_used = 0;
};

// Partition of V(g) into two cable paths, if one exists. Complete: returns a
// partition whenever the input (2-connected) admits one.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
detect_two_cable_paths(const Graph& g);

// Polynomial special case: when V(g) splits into two cable paths the optimum
// uses at most 3 contractions, found by brute force.
std::optional<ContractionSolution> solve_cycle_special(const Graph& g, int k);

// One trial of the 2-connected pipeline with a fixed {1,2,3}-coloring:
// refine, replace components by minimum connected cores, then test the
// resulting contraction set.
std::optional<ContractionSolution> two_connected_trial(const Graph& g, int k,
                                                       const Coloring& f);

// Decision procedure for 2-connected graphs; one-sided error in randomized
// mode (no false positives).
std::optional<ContractionSolution> solve_two_connected(const Graph& g, int k,
                                                       const SolverConfig& cfg,
                                                       SolveStats* stats = nullptr);

// Full decision procedure for connected graphs via block decomposition.
std::optional<ContractionSolution> solve(const Graph& g, int k,
                                         const SolverConfig& cfg,
                                         SolveStats* stats = nullptr);

}  // namespace cactus
