#include "cactus/core_extract.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cactus {

VertexSet hat_closure(const Graph& g, const VertexSet& x) {
    VertexSet hat = x;
    for (const VertexSet& comp : components_after_removal(g, x)) {
        auto path = component_as_path(g, comp);
        if (!path) continue;
        if (path->size() == 1) {
            hat |= comp;  // isolated vertex; its whole neighborhood is in x
            continue;
        }
        bool cable = true;
        for (std::size_t i = 1; i + 1 < path->size(); ++i)
            if (g.degree((*path)[i]) != 2) cable = false;
        if (!cable) continue;
        auto anchored = [&](Vertex v) {
            for (Vertex w : g.neighbors(v))
                if (x.test(w)) return true;
            return false;
        };
        if (anchored(path->front()) && anchored(path->back())) hat |= comp;
    }
    return hat;
}

VertexSet mark(const Graph& g, const Coloring& f,
               const std::vector<VertexSet>& other_big_parts, const VertexSet& x) {
    const int n = g.vertex_count();
    VertexSet marked(n);

    // (i) neighbors of x colored 5 force their x-neighborhood
    for (Vertex v = 0; v < n; ++v) {
        if (x.test(v) || f.at(v) != 5) continue;
        bool touches = false;
        for (Vertex w : g.neighbors(v))
            if (x.test(w)) touches = true;
        if (!touches) continue;
        for (Vertex w : g.neighbors(v))
            if (x.test(w)) marked.set(w);
    }

    // (ii) every other big component forces its x-neighborhood
    for (const VertexSet& y : other_big_parts) {
        if (y == x) continue;
        for (Vertex v : y.to_vector())
            for (Vertex w : g.neighbors(v))
                if (x.test(w)) marked.set(w);
    }
    return marked;
}

VertexSet mark(const Graph& g, const Coloring& f, const MonoComponents& comps,
               const VertexSet& x) {
    std::vector<VertexSet> big;
    for (const auto& mc : comps.components)
        if (mc.vertices.count() >= 2) big.push_back(mc.vertices);
    return mark(g, f, big, x);
}

bool is_core(const Graph& h, const VertexSet& z) {
    for (const VertexSet& comp : components_after_removal(h, z)) {
        auto path = component_as_path(h, comp);
        if (!path) return false;
        if (path->size() == 1) continue;
        for (std::size_t i = 1; i + 1 < path->size(); ++i)
            if (h.degree((*path)[i]) != 2) return false;
        auto anchored = [&](Vertex v) {
            for (Vertex w : h.neighbors(v))
                if (z.test(w)) return true;
            return false;
        };
        if (!anchored(path->front()) || !anchored(path->back())) return false;
    }
    return true;
}

namespace {

struct DpEntry {
    int cost = -1;  // -1 = unreached
    VertexSet vertices;

    bool better_than(const DpEntry& o) const {
        if (o.cost < 0) return cost >= 0;
        if (cost < 0) return false;
        if (cost != o.cost) return cost < o.cost;
        return vertices.lex_less(o.vertices);
    }
};

}  // namespace

std::optional<std::vector<Edge>> steiner_tree(const Graph& g,
                                              const VertexSet& terminals,
                                              int budget) {
    const int n = g.vertex_count();
    std::vector<Vertex> terms = terminals.to_vector();
    const int t = static_cast<int>(terms.size());
    assert(t >= 1 && "terminals must be nonempty");

    if (t == 1) {
        if (budget < 0) return std::nullopt;
        return std::vector<Edge>{};
    }

    // dp[mask][v]: cheapest tree containing terminals of mask and vertex v,
    // with its vertex set carried for deterministic tie-breaking.
    const unsigned full = (1u << t) - 1u;
    std::vector<std::vector<DpEntry>> dp(full + 1, std::vector<DpEntry>(n));
    for (int i = 0; i < t; ++i) {
        VertexSet s(n);
        s.set(terms[i]);
        dp[1u << i][terms[i]] = {0, s};
    }

    for (unsigned mask = 1; mask <= full; ++mask) {
        auto& cur = dp[mask];
        // combine two sub-trees meeting at v
        for (unsigned sub = (mask - 1u) & mask; sub; sub = (sub - 1u) & mask) {
            unsigned rest = mask ^ sub;
            if (sub < rest) continue;  // each split once
            const auto& a = dp[sub];
            const auto& b = dp[rest];
            for (Vertex v = 0; v < n; ++v) {
                if (a[v].cost < 0 || b[v].cost < 0) continue;
                DpEntry cand{a[v].cost + b[v].cost, a[v].vertices | b[v].vertices};
                if (cand.better_than(cur[v])) cur[v] = std::move(cand);
            }
        }
        // grow along edges until stable (unit weights, so this is a
        // Bellman-Ford style relaxation; it terminates because entries only
        // improve in a well-founded order)
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex u = 0; u < n; ++u) {
                if (cur[u].cost < 0) continue;
                for (Vertex v : g.neighbors(u)) {
                    DpEntry cand{cur[u].cost + 1, cur[u].vertices};
                    cand.vertices.set(v);
                    if (cand.better_than(cur[v])) {
                        cur[v] = std::move(cand);
                        changed = true;
                    }
                }
            }
        }
    }

    DpEntry best;
    for (Vertex v = 0; v < n; ++v)
        if (dp[full][v].better_than(best)) best = dp[full][v];
    if (best.cost < 0 || best.cost > budget) return std::nullopt;
    assert(best.vertices.count() == best.cost + 1);
    return spanning_tree_edges(g, best.vertices.to_vector());
}

namespace {

long pow3_capped(int e, long cap) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / 3) return cap;
        r *= 3;
    }
    return r;
}

struct CoreSearch {
    const Graph& h;
    int budget;
    long leaves = 0;
    long leaf_cap = 0;
    std::optional<VertexSet> best;

    void offer(const VertexSet& z) {
        if (z.count() > budget) return;
        if (!best || z.count() < best->count() ||
            (z.count() == best->count() && z.lex_less(*best)))
            best = z;
    }

    void count_leaf() {
        if (++leaves > leaf_cap)
            throw std::logic_error("core search exceeded its 3^budget leaf bound");
    }

    void finish_leaf(VertexSet z) {
        count_leaf();
        if (z.empty()) {
            // No rule fires on an empty partial solution only when h is a
            // single vertex or an induced cycle; a single vertex is then a
            // minimum connected core.
            z.set(0);
            if (z.count() > budget) return;
        }
        if (!is_core(h, z)) return;  // aborted leaf
        auto tree = steiner_tree(h, z, budget - 1);
        if (!tree) return;
        VertexSet connected = z;
        for (const auto& [u, v] : *tree) {
            connected.set(u);
            connected.set(v);
        }
        assert(is_core(h, connected));
        offer(connected);
    }

    void search(VertexSet z, int depth) {
        assert(depth <= budget && "branching depth is bounded by the budget");
        if (z.count() > budget) {
            count_leaf();
            return;
        }

        // Reduction: a degree-1 vertex outside z can never anchor its cable
        // path, so its neighbor joins z.
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (Vertex v = 0; v < h.vertex_count(); ++v) {
                if (z.test(v) || h.degree(v) != 1) continue;
                Vertex u = h.neighbors(v)[0];
                if (!z.test(u)) {
                    z.set(u);
                    reduced = true;
                    if (z.count() > budget) {
                        count_leaf();
                        return;
                    }
                }
            }
        }

        // Branching: a path (u,v,w) outside z whose middle vertex has degree
        // at least 3 in h cannot survive in any core complement.
        for (Vertex u = 0; u < h.vertex_count(); ++u) {
            if (z.test(u)) continue;
            for (Vertex v : h.neighbors(u)) {
                if (z.test(v) || h.degree(v) < 3) continue;
                for (Vertex w : h.neighbors(v)) {
                    if (w == u || z.test(w)) continue;
                    for (Vertex add : {u, v, w}) {
                        VertexSet next = z;
                        next.set(add);
                        if (next.count() <= budget) search(std::move(next), depth + 1);
                    }
                    return;
                }
            }
        }

        finish_leaf(std::move(z));
    }
};

}  // namespace

std::optional<Core> min_connected_core(const CoreInstance& inst) {
    assert(inst.required.universe() == inst.h.vertex_count());
    assert(inst.budget >= 0);
    CoreSearch s{inst.h, inst.budget, 0, 0, std::nullopt};
    s.leaf_cap = pow3_capped(std::min(inst.budget, 36), 1L << 40);
    s.search(inst.required, 0);
    if (!s.best) return std::nullopt;
    return Core{*s.best};
}

}  // namespace cactus
