#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cactus/graph.hpp"
#include "test_util.hpp"

using namespace cactus;

TEST_CASE("build_graph canonical form") {
    Graph tri = build_graph({{0, 1}, {1, 2}, {2, 0}}, 3);
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.neighbors(0) == std::vector<Vertex>{1, 2});

    Graph dup = build_graph({{0, 1}, {1, 0}}, 2);
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(build_graph({{0, 0}}, 1), SelfLoopError);
    CHECK_THROWS_AS(build_graph({{0, 3}}, 3), OutOfRangeError);
}

TEST_CASE("contract_edges basics") {
    Graph tri = build_graph({{0, 1}, {1, 2}, {2, 0}}, 3);
    WitnessStructure w = contract_edges(tri, {{0, 1}});
    CHECK(w.quotient.vertex_count() == 2);
    CHECK(w.quotient.edge_count() == 1);
    CHECK(w.parts == std::vector<std::vector<Vertex>>{{0, 1}, {2}});

    // diamond {ab,ac,bc,bd,cd}, contract bc -> path a-w-d
    Graph dia = build_graph({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, 4);
    WitnessStructure wd = contract_edges(dia, {{1, 2}});
    CHECK(wd.quotient.vertex_count() == 3);
    CHECK(wd.quotient.edge_count() == 2);
    // part {1,2} is quotient vertex 1; endpoints 'a'=0 and 'd'=3 not adjacent
    CHECK(wd.quotient.has_edge(0, 1));
    CHECK(wd.quotient.has_edge(1, 2));
    CHECK_FALSE(wd.quotient.has_edge(0, 2));

    WitnessStructure wid = contract_edges(tri, {});
    CHECK(wid.quotient == tri);
    for (const auto& part : wid.parts) CHECK(part.size() == 1);

    CHECK_THROWS_AS(contract_edges(tri, {{0, 0}}), EdgeNotInGraphError);
    Graph path = build_graph({{0, 1}, {1, 2}}, 3);
    CHECK_THROWS_AS(contract_edges(path, {{0, 2}}), EdgeNotInGraphError);
}

TEST_CASE("contract_edges merges only through contracted edges") {
    // f = {ab, cd} on path a-b-c-d must give 2 quotient vertices even though
    // b-c is an edge of g.
    Graph p4 = build_graph({{0, 1}, {1, 2}, {2, 3}}, 4);
    WitnessStructure w = contract_edges(p4, {{0, 1}, {2, 3}});
    CHECK(w.quotient.vertex_count() == 2);
    CHECK(w.quotient.edge_count() == 1);
}

TEST_CASE("is_cactus") {
    CHECK(is_cactus(test_util::cycle(5)));
    CHECK_FALSE(is_cactus(test_util::complete(4)));
    CHECK(is_cactus(test_util::bowtie()));
    CHECK(is_cactus(build_graph({}, 1)));
    CHECK(is_cactus(test_util::path(4)));
    CHECK_FALSE(is_cactus(test_util::diamond()));
    CHECK_THROWS_AS(is_cactus(build_graph({{0, 1}}, 3)), DisconnectedError);
}

TEST_CASE("blocks decomposition") {
    // bowtie on {0,1,2}+{2,3,4}
    BlockDecomposition bd = blocks(test_util::bowtie());
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(bd.blocks[1] == std::vector<Vertex>{2, 3, 4});
    CHECK(bd.cut_vertices.to_vector() == std::vector<Vertex>{2});
    CHECK(bd.cuts_in_block[0] == std::vector<Vertex>{2});

    BlockDecomposition bp = blocks(test_util::path(3));
    REQUIRE(bp.blocks.size() == 2);
    CHECK(bp.blocks[0] == std::vector<Vertex>{0, 1});
    CHECK(bp.blocks[1] == std::vector<Vertex>{1, 2});
    CHECK(bp.cut_vertices.to_vector() == std::vector<Vertex>{1});

    BlockDecomposition bc = blocks(test_util::cycle(4));
    REQUIRE(bc.blocks.size() == 1);
    CHECK(bc.blocks[0] == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(bc.cut_vertices.empty());
}

TEST_CASE("blocks cover edges exactly once") {
    // Property over random graphs: every edge in exactly one block, and cut
    // vertices are the vertices in >= 2 blocks.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = test_util::random_connected_graph(2 + seed % 9, seed);
        BlockDecomposition bd = blocks(g);
        std::multiset<Edge> covered;
        for (const auto& blk : bd.blocks) {
            VertexSet members = VertexSet::of(g.vertex_count(), blk);
            for (Vertex u : blk)
                for (Vertex v : g.neighbors(u))
                    if (u < v && members.test(v)) covered.insert({u, v});
        }
        auto es = g.edges();
        CHECK(covered.size() == es.size());
        for (const auto& e : es) CHECK(covered.count(e) == 1);
    }
}

TEST_CASE("is_cable_path") {
    Graph c4 = test_util::cycle(4);
    CHECK(is_cable_path(c4, {0, 1, 2}));
    Graph k4 = test_util::complete(4);
    CHECK_FALSE(is_cable_path(k4, {0, 1, 2}));
    CHECK(is_cable_path(k4, {0, 1}));
    CHECK(is_cable_path(c4, {2}));
    CHECK_THROWS_AS(is_cable_path(c4, {0, 2}), NotAPathError);
    CHECK_THROWS_AS(is_cable_path(c4, {0, 1, 0}), NotAPathError);
    CHECK_THROWS_AS(is_cable_path(c4, {}), NotAPathError);
}

TEST_CASE("components_after_removal") {
    Graph c4 = test_util::cycle(4);
    auto one = components_after_removal(c4, VertexSet::of(4, {0}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].to_vector() == std::vector<Vertex>{1, 2, 3});

    auto two = components_after_removal(c4, VertexSet::of(4, {0, 2}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_vector() == std::vector<Vertex>{1});
    CHECK(two[1].to_vector() == std::vector<Vertex>{3});

    auto all = components_after_removal(c4, VertexSet(4));
    REQUIRE(all.size() == 1);
    CHECK(all[0].count() == 4);
}

TEST_CASE("cactus iff every edge in at most one cycle (n<=8)") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = test_util::random_connected_graph(2 + seed % 7, seed * 31 + 7);
        CHECK(is_cactus(g) == test_util::every_edge_in_at_most_one_cycle(g));
    }
    CHECK(test_util::every_edge_in_at_most_one_cycle(test_util::cycle(6)));
    CHECK_FALSE(test_util::every_edge_in_at_most_one_cycle(test_util::complete(4)));
}

TEST_CASE("contraction properties on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = test_util::random_connected_graph(2 + seed % 8, seed * 977 + 3);
        auto es = g.edges();
        test_util::Rng rng(seed);
        std::vector<Edge> f;
        for (const auto& e : es)
            if (rng.next() % 3 == 0) f.push_back(e);

        WitnessStructure w = contract_edges(g, f);

        // quotient connected, vertex count = n - forest size
        CHECK(is_connected(w.quotient));
        CHECK(w.quotient.vertex_count() ==
              g.vertex_count() - spanning_forest_size(f));

        // contracting a spanning forest of f yields the identical quotient
        std::vector<Edge> forest;
        for (const auto& part : w.parts)
            for (const auto& e : spanning_tree_edges(g, part)) forest.push_back(e);
        WitnessStructure wf = contract_edges(g, forest);
        CHECK(wf.quotient == w.quotient);
        CHECK(wf.parts == w.parts);

        // parts cover V and are disjoint; parts induce connected subgraphs
        int total = 0;
        for (const auto& part : w.parts) {
            total += static_cast<int>(part.size());
            auto [sub, ids] = induced_subgraph(g, VertexSet::of(g.vertex_count(), part));
            CHECK(is_connected(sub));
        }
        CHECK(total == g.vertex_count());

        // quotient adjacency iff an edge crosses the parts
        for (int p = 0; p < w.quotient.vertex_count(); ++p)
            for (int q = p + 1; q < w.quotient.vertex_count(); ++q) {
                bool crossing = false;
                for (Vertex u : w.parts[p])
                    for (Vertex v : w.parts[q])
                        if (g.has_edge(u, v)) crossing = true;
                CHECK(w.quotient.has_edge(p, q) == crossing);
            }
    }
}

TEST_CASE("vertex set lexicographic order") {
    VertexSet a = VertexSet::of(70, {0, 65});
    VertexSet b = VertexSet::of(70, {1, 2});
    CHECK(a.lex_less(b));
    CHECK_FALSE(b.lex_less(a));
    CHECK_FALSE(a.lex_less(a));
    VertexSet c = VertexSet::of(70, {0, 66});
    CHECK(a.lex_less(c));
}
