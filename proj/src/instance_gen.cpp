#include "cactus/instance_gen.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "cactus/rng.hpp"

namespace cactus {

Graph random_cactus(int n, std::uint64_t seed) {
    assert(n >= 1);
    std::mt19937_64 rng(derive_seed(seed, 0xcac705ULL));
    std::vector<Edge> es;
    int cur = 1;
    while (cur < n) {
        int remaining = n - cur;
        Vertex attach = static_cast<Vertex>(rng() % cur);
        bool make_edge_block = remaining == 1 || (rng() % 2 == 0);
        if (make_edge_block) {
            es.emplace_back(attach, cur);
            cur += 1;
        } else {
            int len = 3 + static_cast<int>(rng() % 4);  // cycle length 3..6
            len = std::min(len, remaining + 1);
            // attach -> cur -> cur+1 -> ... -> cur+len-2 -> attach
            es.emplace_back(attach, cur);
            for (int i = 0; i + 1 < len - 1; ++i) es.emplace_back(cur + i, cur + i + 1);
            es.emplace_back(attach, cur + len - 2);
            cur += len - 1;
        }
    }
    Graph g = build_graph(es, n);
    assert(is_cactus(g));
    return g;
}

PlantedInstance plant_contractible(const Graph& target, int k, std::uint64_t seed) {
    assert(k >= 1);
    assert(is_cactus(target));
    const int tn = target.vertex_count();
    std::mt19937_64 rng(derive_seed(seed, 0x91a47edULL));

    // Blow-up sites are non-cut vertices, so each planted big set stays inside
    // a single block of the result.
    VertexSet cuts = blocks(target).cut_vertices;
    std::vector<Vertex> sites;
    for (Vertex v = 0; v < tn; ++v)
        if (!cuts.test(v)) sites.push_back(v);
    assert(!sites.empty());

    std::vector<int> extra(tn, 0);  // blob spanning-tree edges per target vertex
    for (int i = 0; i < k; ++i) ++extra[sites[rng() % sites.size()]];

    // Allocate blob vertex ids in target order so the canonical quotient
    // labels coincide with the target's labels.
    std::vector<int> base(tn);
    int total = 0;
    for (Vertex v = 0; v < tn; ++v) {
        base[v] = total;
        total += 1 + extra[v];
    }

    std::vector<Edge> edges;
    std::vector<Edge> planted_forest;
    for (Vertex v = 0; v < tn; ++v) {
        // random tree over the blob
        for (int i = 1; i <= extra[v]; ++i) {
            Edge e = make_edge(base[v] + i, base[v] + static_cast<int>(rng() % i));
            edges.push_back(e);
            planted_forest.push_back(e);
        }
        // occasional extra internal edges beyond the spanning tree
        if (extra[v] >= 2) {
            int attempts = static_cast<int>(rng() % 2);
            for (int a = 0; a < attempts; ++a) {
                int i = static_cast<int>(rng() % (extra[v] + 1));
                int j = static_cast<int>(rng() % (extra[v] + 1));
                if (i != j) edges.push_back(make_edge(base[v] + i, base[v] + j));
            }
        }
    }
    for (const auto& [u, v] : target.edges()) {
        Vertex gu = base[u] + static_cast<Vertex>(rng() % (extra[u] + 1));
        Vertex gv = base[v] + static_cast<Vertex>(rng() % (extra[v] + 1));
        edges.push_back(make_edge(gu, gv));
    }

    PlantedInstance out;
    out.g = build_graph(edges, total);
    out.k = k;
    out.planted = contract_edges(out.g, planted_forest);
    out.target = target;
    assert(out.planted.quotient == target);
    assert(spanning_forest_size(planted_forest) == k);
    return out;
}

}  // namespace cactus
