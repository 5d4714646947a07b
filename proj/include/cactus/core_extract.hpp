#pragma once

#include <optional>
#include <vector>

#include "cactus/coloring.hpp"
#include "cactus/graph.hpp"

namespace cactus {

// Minimum-connected-core extraction: the piece of the trial pipeline that
// replaces a monochromatic component by a set at least as good as the big
// witness set hiding inside it.

struct CoreInstance {
    Graph h;
    VertexSet required;
    int budget;  // maximum core size in vertices
};

struct Core {
    VertexSet z;
};

// X together with the components of g - x that are isolated vertices or cable
// paths in g whose both endpoints have a neighbor in x.
VertexSet hat_closure(const Graph& g, const VertexSet& x);

// Marking scheme: vertices of x forced into the big witness set, either by a
// 5-colored neighbor or by an adjacent big component.
VertexSet mark(const Graph& g, const Coloring& f,
               const std::vector<VertexSet>& other_big_parts, const VertexSet& x);
VertexSet mark(const Graph& g, const Coloring& f, const MonoComponents& comps,
               const VertexSet& x);

// Def. 5.1: every component of h - z is an isolated vertex or a cable path in
// h whose both endpoints have a neighbor in z.
bool is_core(const Graph& h, const VertexSet& z);

// Minimum-edge tree spanning all terminals (dynamic programming over terminal
// subsets), or nullopt if the minimum exceeds the edge budget. Ties prefer
// lexicographically smaller vertex sets.
std::optional<std::vector<Edge>> steiner_tree(const Graph& g,
                                              const VertexSet& terminals,
                                              int budget);

// Branching search for a minimum connected core containing inst.required of
// size at most inst.budget.
std::optional<Core> min_connected_core(const CoreInstance& inst);

}  // namespace cactus
