#pragma once

#include <optional>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {
namespace oracle {

// Exhaustive ground truth for the optimizing subroutines. Everything here is
// deliberately written as plain enumeration so it stays obviously correct;
// only tests and the CLI oracle subcommand should call it.

struct OracleResult {
    // nullopt means no solution within kmax contractions
    std::optional<int> optimum;
    std::vector<Edge> witness;
};

// Minimum spanning-forest size over all F with G/F a cactus, capped at kmax.
OracleResult brute_force_min_contractions(const Graph& g, int kmax);

// Minimum-size connected core containing `required`, smallest-lex among ties.
VertexSet brute_force_core(const Graph& h, const VertexSet& required);

// Minimum-edge tree spanning all terminals, found by enumerating connected
// vertex supersets ascending by size.
std::vector<Edge> brute_force_steiner(const Graph& g, const VertexSet& terminals);

}  // namespace oracle
}  // namespace cactus
