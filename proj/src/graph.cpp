#include "cactus/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cactus {

namespace {

// Small union-find used by contraction and forest-size computations.
struct Dsu {
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smallest id as representative
        parent[b] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(const std::vector<Edge>& edge_list, int n) {
    Graph g(n);
    for (const auto& [a, b] : edge_list) {
        if (a == b) throw SelfLoopError(a);
        if (a < 0 || a >= n) throw OutOfRangeError(a, n);
        if (b < 0 || b >= n) throw OutOfRangeError(b, n);
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

WitnessStructure contract_edges(const Graph& g, const std::vector<Edge>& f) {
    const int n = g.vertex_count();
    Dsu dsu(n);
    for (const auto& [u, v] : f) {
        if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v))
            throw EdgeNotInGraphError(u, v);
        dsu.unite(u, v);
    }

    WitnessStructure w;
    w.part_of.assign(n, -1);
    // Representatives are the smallest vertex of each part, so scanning
    // vertices ascending yields parts sorted by smallest member.
    for (Vertex v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (w.part_of[r] == -1) {
            w.part_of[r] = static_cast<int>(w.parts.size());
            w.parts.push_back({});
        }
        w.part_of[v] = w.part_of[r];
        w.parts[w.part_of[v]].push_back(v);
    }

    std::vector<Edge> quotient_edges;
    for (const auto& [u, v] : g.edges()) {
        int pu = w.part_of[u], pv = w.part_of[v];
        if (pu != pv) quotient_edges.push_back(make_edge(pu, pv));
    }
    w.quotient = build_graph(quotient_edges, static_cast<int>(w.parts.size()));
    return w;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

BlockDecomposition blocks(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    const int n = g.vertex_count();

    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);
    if (n == 1) {
        out.blocks = {{0}};
        out.cuts_in_block = {{}};
        return out;
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    // Iterative DFS; frames track the neighbor index to resume at.
    struct Frame {
        Vertex u;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> frames;
    frames.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;

    auto pop_block = [&](const Edge& until) {
        VertexSet members(n);
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            members.set(e.first);
            members.set(e.second);
            if (e == until) break;
        }
        out.blocks.push_back(members.to_vector());
    };

    while (!frames.empty()) {
        Frame& fr = frames.back();
        Vertex u = fr.u;
        bool descended = false;
        while (fr.next < g.neighbors(u).size()) {
            Vertex v = g.neighbors(u)[fr.next++];
            if (v == fr.parent) continue;
            if (disc[v] == -1) {
                edge_stack.push_back(make_edge(u, v));
                disc[v] = low[v] = timer++;
                frames.push_back({v, u, 0});
                descended = true;
                break;
            }
            if (disc[v] < disc[u]) {
                edge_stack.push_back(make_edge(u, v));
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (descended) continue;

        // u finished; propagate to parent and close the block if u's subtree
        // cannot reach above the parent.
        frames.pop_back();
        if (!frames.empty()) {
            Vertex p = frames.back().u;
            low[p] = std::min(low[p], low[u]);
            if (low[u] >= disc[p]) pop_block(make_edge(p, u));
        }
    }
    assert(edge_stack.empty());

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    // A cut vertex is exactly a vertex lying in two or more blocks.
    std::vector<int> block_count(n, 0);
    for (const auto& blk : out.blocks)
        for (Vertex v : blk) ++block_count[v];
    out.cut_vertices = VertexSet(n);
    for (Vertex v = 0; v < n; ++v)
        if (block_count[v] >= 2) out.cut_vertices.set(v);

    out.cuts_in_block.resize(out.blocks.size());
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (Vertex v : out.blocks[b])
            if (out.cut_vertices.test(v)) out.cuts_in_block[b].push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.vertex_count() <= 2) return true;
    return blocks(g).blocks.size() == 1;
}

bool is_cactus(const Graph& g) {
    BlockDecomposition bd = blocks(g);  // throws if disconnected
    for (const auto& blk : bd.blocks) {
        const int b = static_cast<int>(blk.size());
        if (b <= 2) continue;  // single vertex (n=1) or an edge
        // A 2-connected block is an induced cycle iff every member has
        // exactly two neighbors inside the block.
        VertexSet members = VertexSet::of(g.vertex_count(), blk);
        for (Vertex v : blk) {
            int inside = 0;
            for (Vertex w : g.neighbors(v))
                if (members.test(w)) ++inside;
            if (inside != 2) return false;
        }
    }
    return true;
}

bool is_cable_path(const Graph& g, const std::vector<Vertex>& p) {
    if (p.empty()) throw NotAPathError();
    VertexSet seen(g.vertex_count());
    for (Vertex v : p) {
        if (v < 0 || v >= g.vertex_count() || seen.test(v)) throw NotAPathError();
        seen.set(v);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) throw NotAPathError();

    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        const auto& nb = g.neighbors(p[i]);
        if (nb.size() != 2) return false;
        if (make_edge(nb[0], nb[1]) != make_edge(p[i - 1], p[i + 1])) return false;
    }
    return true;
}

std::vector<VertexSet> components_after_removal(const Graph& g,
                                                const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || removed.test(s)) continue;
        VertexSet comp(n);
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.set(u);
            for (Vertex v : g.neighbors(u))
                if (!seen[v] && !removed.test(v)) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::vector<Vertex>> component_as_path(const Graph& g,
                                                     const VertexSet& comp) {
    std::vector<Vertex> vs = comp.to_vector();
    if (vs.empty()) return std::nullopt;
    if (vs.size() == 1) return vs;

    Vertex endpoint = -1;
    for (Vertex v : vs) {
        int inside = 0;
        for (Vertex w : g.neighbors(v))
            if (comp.test(w)) ++inside;
        if (inside > 2) return std::nullopt;
        if (inside == 0) return std::nullopt;  // comp not connected
        if (inside == 1 && endpoint == -1) endpoint = v;
    }
    if (endpoint == -1) return std::nullopt;  // induced cycle

    std::vector<Vertex> order{endpoint};
    Vertex prev = -1, cur = endpoint;
    while (order.size() < vs.size()) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
            if (comp.test(w) && w != prev) next = w;
        if (next == -1) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (order.front() > order.back()) std::reverse(order.begin(), order.end());
    return order;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                       const VertexSet& s) {
    std::vector<Vertex> ids = s.to_vector();
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (Vertex u : ids)
        for (Vertex v : g.neighbors(u))
            if (u < v && local[v] != -1) es.emplace_back(local[u], local[v]);
    return {build_graph(es, static_cast<int>(ids.size())), std::move(ids)};
}

std::vector<Edge> spanning_tree_edges(const Graph& g,
                                      const std::vector<Vertex>& part) {
    if (part.size() <= 1) return {};
    VertexSet members = VertexSet::of(g.vertex_count(), part);
    Vertex root = *std::min_element(part.begin(), part.end());
    VertexSet seen(g.vertex_count());
    seen.set(root);
    std::vector<Vertex> queue{root};
    std::vector<Edge> tree;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex u = queue[qi];
        for (Vertex v : g.neighbors(u)) {
            if (!members.test(v) || seen.test(v)) continue;
            seen.set(v);
            tree.push_back(make_edge(u, v));
            queue.push_back(v);
        }
    }
    assert(tree.size() + 1 == part.size() && "part must induce a connected subgraph");
    std::sort(tree.begin(), tree.end());
    return tree;
}

int spanning_forest_size(const std::vector<Edge>& f) {
    int max_v = -1;
    for (const auto& [u, v] : f) max_v = std::max({max_v, u, v});
    Dsu dsu(max_v + 1);
    int size = 0;
    for (const auto& [u, v] : f)
        if (dsu.unite(u, v)) ++size;
    return size;
}

}  // namespace cactus
