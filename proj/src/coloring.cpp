#include "cactus/coloring.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

#include "cactus/errors.hpp"

namespace cactus {

namespace {

constexpr int kFrozenLow = 4;  // colors >= this are final

// Cable path test for an already-ordered component path: every internal
// vertex has degree exactly 2 in g.
bool internals_have_degree_two(const Graph& g, const std::vector<Vertex>& path) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.degree(path[i]) != 2) return false;
    return true;
}

}  // namespace

Coloring random_coloring(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Coloring f;
    f.color.resize(g.vertex_count());
    for (auto& c : f.color) c = static_cast<std::uint8_t>(1 + rng() % 3);
    return f;
}

MonoComponents monochromatic_components(const Graph& g, const Coloring& f,
                                        ColorSet colors) {
    const int n = g.vertex_count();
    MonoComponents out;
    out.for_colors = colors;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || !colors.contains(f.at(s))) continue;
        const int c = f.at(s);
        VertexSet comp(n);
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.set(u);
            for (Vertex v : g.neighbors(u))
                if (!seen[v] && f.at(v) == c) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        out.components.push_back({c, std::move(comp), s});
    }
    return out;
}

bool is_compatible(const Graph& g, const WitnessStructure& w, const Coloring& f) {
    assert(w.part_of.size() == static_cast<std::size_t>(g.vertex_count()));
    (void)g;
    if (!is_cactus(w.quotient)) throw QuotientNotCactusError();
    const Graph& t = w.quotient;
    const int parts = t.vertex_count();

    // (1) every witness set monochromatic
    std::vector<int> part_color(parts);
    for (int p = 0; p < parts; ++p) {
        part_color[p] = f.at(w.parts[p][0]);
        for (Vertex v : w.parts[p])
            if (f.at(v) != part_color[p]) return false;
    }

    // (2) adjacent big witness sets differently colored
    for (int p = 0; p < parts; ++p)
        for (int q : t.neighbors(p))
            if (p < q && w.is_big(p) && w.is_big(q) && part_color[p] == part_color[q])
                return false;

    // (3) walk every chain of degree-2 singleton parts leaving a big part; if
    // it reaches another big part it is a quotient cable path, and the
    // internal vertex next to the starting big part must differ in color.
    for (int tx = 0; tx < parts; ++tx) {
        if (!w.is_big(tx)) continue;
        for (int first : t.neighbors(tx)) {
            if (w.is_big(first) || t.degree(first) != 2) continue;
            int prev = tx, cur = first;
            while (true) {
                int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                                       : t.neighbors(cur)[0];
                if (next == tx) break;  // pendant cycle back to tx: no constraint
                if (w.is_big(next)) {
                    if (part_color[first] == part_color[tx]) return false;
                    break;
                }
                if (t.degree(next) != 2) break;  // chain stops being a cable path
                prev = cur;
                cur = next;
            }
        }
    }
    return true;
}

std::pair<Coloring, bool> recolor_rule_1(const Graph& g, const Coloring& f,
                                         const MonoComponents& comps) {
    const int n = g.vertex_count();
    VertexSet to_recolor(n);
    for (const auto& mc : comps.components) {
        for (const VertexSet& comp : components_after_removal(g, mc.vertices)) {
            auto path = component_as_path(g, comp);
            if (!path || !internals_have_degree_two(g, *path)) continue;
            to_recolor |= comp;
        }
    }
    Coloring out = f;
    bool changed = false;
    for (Vertex v : to_recolor.to_vector())
        if (out.color[v] < kFrozenLow) {
            out.color[v] = 4;
            changed = true;
        }
    return {std::move(out), changed};
}

std::pair<Coloring, bool> recolor_rule_2(const Graph& g, const Coloring& f,
                                         const MonoComponents& comps) {
    const int n = g.vertex_count();
    const auto& cs = comps.components;
    VertexSet to_recolor(n);
    for (std::size_t yi = 0; yi < cs.size(); ++yi) {
        for (std::size_t zi = yi + 1; zi < cs.size(); ++zi) {
            const VertexSet& y = cs[yi].vertices;
            const VertexSet& z = cs[zi].vertices;
            VertexSet removed = y | z;
            for (const VertexSet& comp : components_after_removal(g, removed)) {
                auto path = component_as_path(g, comp);
                if (!path || !internals_have_degree_two(g, *path)) continue;
                if (path->size() == 1) {
                    // single vertex: must see both sides
                    Vertex v = (*path)[0];
                    bool seen_y = false, seen_z = false;
                    for (Vertex u : g.neighbors(v)) {
                        seen_y |= y.test(u);
                        seen_z |= z.test(u);
                    }
                    if (seen_y && seen_z) to_recolor |= comp;
                    continue;
                }
                // endpoints' outside neighbors split across Y and Z
                auto outside_in = [&](Vertex v, const VertexSet& side) {
                    bool any = false;
                    for (Vertex u : g.neighbors(v)) {
                        if (comp.test(u)) continue;
                        if (!side.test(u)) return false;
                        any = true;
                    }
                    return any;
                };
                Vertex a = path->front(), b = path->back();
                if ((outside_in(a, y) && outside_in(b, z)) ||
                    (outside_in(a, z) && outside_in(b, y)))
                    to_recolor |= comp;
            }
        }
    }
    Coloring out = f;
    bool changed = false;
    for (Vertex v : to_recolor.to_vector())
        if (out.color[v] < kFrozenLow) {
            out.color[v] = 5;
            changed = true;
        }
    return {std::move(out), changed};
}

Coloring refine(const Graph& g, Coloring f) {
    const int cap = g.vertex_count() + 2;
    for (int iter = 0; iter <= cap; ++iter) {
        bool outer_changed = false;
        while (true) {
            auto comps = monochromatic_components(g, f, witness_colors());
            auto [next, changed] = recolor_rule_1(g, f, comps);
            f = std::move(next);
            if (!changed) break;
            outer_changed = true;
        }
        while (true) {
            auto comps = monochromatic_components(g, f, witness_colors());
            auto [next, changed] = recolor_rule_2(g, f, comps);
            f = std::move(next);
            if (!changed) break;
            outer_changed = true;
        }
        if (!outer_changed) return f;
    }
    throw std::logic_error("refine failed to reach a fixpoint within the iteration cap");
}

std::optional<Coloring> proper_three_coloring(const Graph& g) {
    const int n = g.vertex_count();
    Coloring f;
    f.color.assign(n, 0);

    // BFS order keeps each vertex adjacent to an already-colored one, which
    // keeps the backtracking shallow on cacti.
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (std::size_t qi = order.size() - 1; qi < order.size(); ++qi)
            for (Vertex v : g.neighbors(order[qi]))
                if (!seen[v]) {
                    seen[v] = 1;
                    order.push_back(v);
                }
    }

    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

    std::size_t i = 0;
    while (i < order.size()) {
        Vertex v = order[i];
        int c = f.color[v] + 1;
        bool placed = false;
        for (; c <= 3; ++c) {
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (pos[u] < i && f.color[u] == c) ok = false;
            if (ok) {
                f.color[v] = static_cast<std::uint8_t>(c);
                placed = true;
                break;
            }
        }
        if (placed) {
            ++i;
        } else {
            f.color[v] = 0;
            if (i == 0) return std::nullopt;
            --i;
        }
    }
    return f;
}

Coloring pull_back(const Coloring& quotient_coloring, const WitnessStructure& w) {
    Coloring f;
    f.color.resize(w.part_of.size());
    for (std::size_t v = 0; v < w.part_of.size(); ++v)
        f.color[v] = quotient_coloring.color[w.part_of[v]];
    return f;
}

}  // namespace cactus
