#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

// Total coloring of V(G). Fresh random colorings use {1,2,3}; the recoloring
// rules introduce 4 and 5, and a vertex colored 4 or 5 is final.
struct Coloring {
    std::vector<std::uint8_t> color;

    int at(Vertex v) const { return color[v]; }
    bool operator==(const Coloring& o) const { return color == o.color; }
};

// Small set over the color values 1..5.
struct ColorSet {
    std::uint8_t mask = 0;

    static ColorSet of(std::initializer_list<int> cs) {
        ColorSet s;
        for (int c : cs) s.mask |= std::uint8_t(1u << c);
        return s;
    }
    bool contains(int c) const { return (mask >> c) & 1u; }
};

// Colors 1..3 mark witness-set candidates.
inline ColorSet witness_colors() { return ColorSet::of({1, 2, 3}); }

struct MonoComponent {
    int color;
    VertexSet vertices;
    Vertex min_vertex;
};

// Inclusion-maximal connected same-colored sets, restricted to a color
// filter, ordered by smallest vertex.
struct MonoComponents {
    std::vector<MonoComponent> components;
    ColorSet for_colors;
};

// Each vertex independently uniform over {1,2,3}; deterministic per seed.
Coloring random_coloring(const Graph& g, std::uint64_t seed);

MonoComponents monochromatic_components(const Graph& g, const Coloring& f,
                                        ColorSet colors);

// Compatibility of a coloring with a witness structure whose quotient is a
// cactus: witness sets monochromatic, adjacent big sets differently colored,
// and on every quotient cable path between two big sets through singletons
// the path ends are colored differently from their big-set neighbors.
bool is_compatible(const Graph& g, const WitnessStructure& w, const Coloring& f);

// One batched pass of the first recoloring rule: components of g - X that are
// a single vertex or a cable path in g are recolored to 4. Colors 4 and 5 are
// never overwritten. Returns the new coloring and whether anything changed.
std::pair<Coloring, bool> recolor_rule_1(const Graph& g, const Coloring& f,
                                         const MonoComponents& comps);

// One batched pass of the second rule: for every pair of monochromatic
// components Y,Z, components of g - (Y u Z) that are a single vertex seeing
// both sides or a cable path whose endpoints attach to Y and Z respectively
// are recolored to 5.
std::pair<Coloring, bool> recolor_rule_2(const Graph& g, const Coloring& f,
                                         const MonoComponents& comps);

// Rule 1 to fixpoint, then Rule 2 to fixpoint, repeated until neither rule
// changes the coloring.
Coloring refine(const Graph& g, Coloring f);

// Proper 3-coloring by backtracking; always succeeds on cacti.
std::optional<Coloring> proper_three_coloring(const Graph& g);

// Lift a coloring of the quotient to G through the witness partition.
Coloring pull_back(const Coloring& quotient_coloring, const WitnessStructure& w);

}  // namespace cactus
