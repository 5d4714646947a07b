#include "cactus/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "cactus/errors.hpp"

namespace cactus {
namespace oracle {

namespace {

// Masks keep the enumeration simple; all oracle guards keep n small enough.
bool mask_connected(const Graph& g, unsigned mask) {
    if (mask == 0) return false;
    unsigned start = mask & (~mask + 1);
    int s = __builtin_ctz(start);
    unsigned seen = start;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            unsigned bit = 1u << v;
            if ((mask & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(v);
            }
        }
    }
    return seen == mask;
}

// Def. 5.1 checked directly: every component of h - z is a single vertex or
// an induced path whose internal vertices have degree 2 in h and whose both
// endpoints have a neighbor in z.
bool mask_is_core(const Graph& h, unsigned z) {
    const int n = h.vertex_count();
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || (z >> s & 1u)) continue;
        // collect the component of s in h - z
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex v : h.neighbors(u))
                if (!seen[v] && !(z >> v & 1u)) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        if (comp.size() == 1) continue;

        // count inside-degrees; a simple path has exactly two endpoints
        int endpoints = 0;
        bool path = true;
        for (Vertex v : comp) {
            int inside = 0;
            for (Vertex w : h.neighbors(v))
                if (!(z >> w & 1u)) ++inside;
            if (inside > 2) path = false;
            if (inside == 1) ++endpoints;
        }
        if (!path || endpoints != 2) return false;
        for (Vertex v : comp) {
            int inside = 0;
            bool anchored = false;
            for (Vertex w : h.neighbors(v)) {
                if (!(z >> w & 1u))
                    ++inside;
                else
                    anchored = true;
            }
            if (inside == 2 && h.degree(v) != 2) return false;  // internal
            if (inside == 1 && !anchored) return false;         // endpoint
        }
    }
    return true;
}

VertexSet mask_to_set(int n, unsigned mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.set(v);
    return s;
}

}  // namespace

OracleResult brute_force_min_contractions(const Graph& g, int kmax) {
    if (!is_connected(g)) throw DisconnectedError();
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());

    // guard: sum of C(m, i) for i <= kmax must stay enumerable
    double work = 0;
    double binom = 1;
    for (int i = 0; i <= std::min(kmax, m); ++i) {
        work += binom;
        binom = binom * (m - i) / (i + 1);
        if (work > 1e7) throw TooLargeError("contraction enumeration too large");
    }

    for (int size = 0; size <= std::min(kmax, m); ++size) {
        // lexicographic combinations of edge indices
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<Edge> f;
            f.reserve(size);
            for (int i : idx) f.push_back(es[i]);
            WitnessStructure w = contract_edges(g, f);
            if (is_cactus(w.quotient)) {
                // the first hit over ascending sizes is a forest
                assert(spanning_forest_size(f) == size || size == 0);
                return {size, f};
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {std::nullopt, {}};
}

VertexSet brute_force_core(const Graph& h, const VertexSet& required) {
    const int n = h.vertex_count();
    if (n > 15) throw TooLargeError("core enumeration limited to n <= 15");
    unsigned req = 0;
    for (Vertex v : required.to_vector()) req |= 1u << v;

    for (int size = required.count(); size <= n; ++size) {
        bool found = false;
        unsigned best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            if ((mask & req) != req) continue;
            if (!mask_connected(h, mask)) continue;
            if (!mask_is_core(h, mask)) continue;
            VertexSet cand = mask_to_set(n, mask);
            if (!found || cand.lex_less(mask_to_set(n, best))) {
                found = true;
                best = mask;
            }
        }
        if (found) return mask_to_set(n, best);
    }
    throw NoCoreError();  // unreachable: V(h) is always a connected core
}

std::vector<Edge> brute_force_steiner(const Graph& g, const VertexSet& terminals) {
    const int n = g.vertex_count();
    if (n > 12) throw TooLargeError("steiner enumeration limited to n <= 12");
    assert(!terminals.empty());
    unsigned term = 0;
    for (Vertex v : terminals.to_vector()) term |= 1u << v;

    for (int size = terminals.count(); size <= n; ++size) {
        bool found = false;
        unsigned best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            if ((mask & term) != term) continue;
            if (!mask_connected(g, mask)) continue;
            VertexSet cand = mask_to_set(n, mask);
            if (!found || cand.lex_less(mask_to_set(n, best))) {
                found = true;
                best = mask;
            }
        }
        if (found)
            return spanning_tree_edges(g, mask_to_set(n, best).to_vector());
    }
    throw TooLargeError("unreachable: terminals not connected in g");
}

}  // namespace oracle
}  // namespace cactus
