#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cactus/errors.hpp"

namespace cactus {

using Vertex = int;

// Edges are stored normalized with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Subset of {0,...,n-1} with bitset semantics and ascending iteration order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<Vertex> vs) {
        VertexSet s(n);
        for (Vertex v : vs) s.set(v);
        return s;
    }
    static VertexSet of(int n, const std::vector<Vertex>& vs) {
        VertexSet s(n);
        for (Vertex v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }
    bool test(Vertex v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    // smallest member; -1 when empty
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for (int v = 0; v < n_; ++v)
            if (test(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic order on the ascending element lists: the set owning the
    // smallest element where the two differ is the smaller set.
    bool lex_less(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ o.words_[i];
            if (diff) return (words_[i] >> __builtin_ctzll(diff)) & 1u;
        }
        return false;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Neighbor lists are kept sorted ascending so every iteration order in the
// library is deterministic.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    // All edges normalized (u < v), sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    friend Graph build_graph(const std::vector<Edge>& edge_list, int n);

private:
    explicit Graph(int n) : adj_(n) {}
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

// Canonical construction: duplicates collapsed, self-loops rejected.
Graph build_graph(const std::vector<Edge>& edge_list, int n);

// Partition of V(G) into connected parts with the induced quotient graph.
// Parts are sorted by their smallest member; the quotient vertex i is the
// part parts[i], so quotient labels are canonical under this ordering.
struct WitnessStructure {
    std::vector<std::vector<Vertex>> parts;
    std::vector<int> part_of;
    Graph quotient;

    bool is_big(int part) const { return parts[part].size() >= 2; }
};

// Quotient by the components of the subgraph (V(f), f); contracting any
// spanning forest of f yields the identical quotient.
WitnessStructure contract_edges(const Graph& g, const std::vector<Edge>& f);

// Block/cut-vertex decomposition. Blocks are listed by smallest contained
// vertex; cuts_in_block gives the bipartite block-cut incidence.
struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;
    VertexSet cut_vertices;
    std::vector<std::vector<Vertex>> cuts_in_block;
};

BlockDecomposition blocks(const Graph& g);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

// True iff every block of g is an edge or an induced cycle.
bool is_cactus(const Graph& g);

// True iff every internal vertex of p has exactly its two path neighbors.
bool is_cable_path(const Graph& g, const std::vector<Vertex>& p);

// Connected components of g - removed, smallest vertex first.
std::vector<VertexSet> components_after_removal(const Graph& g,
                                                const VertexSet& removed);

// Orders a connected vertex set into a simple path if its induced subgraph is
// one (singletons included); nullopt otherwise. The returned order starts at
// the endpoint with the smaller vertex id.
std::optional<std::vector<Vertex>> component_as_path(const Graph& g,
                                                     const VertexSet& comp);

// Induced subgraph plus the original id of each new vertex (ascending).
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const VertexSet& s);

// BFS spanning tree of g[part] rooted at the smallest vertex; edges normalized
// and sorted. The part must induce a connected subgraph.
std::vector<Edge> spanning_tree_edges(const Graph& g,
                                      const std::vector<Vertex>& part);

// Number of edges in a spanning forest of (V(f), f).
int spanning_forest_size(const std::vector<Edge>& f);

}  // namespace cactus
