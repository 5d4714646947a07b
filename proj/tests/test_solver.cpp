#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus/instance_gen.hpp"
#include "cactus/oracle.hpp"
#include "cactus/solver.hpp"
#include "test_util.hpp"

using namespace cactus;

namespace {

SolverConfig det() {
    SolverConfig cfg;
    cfg.mode = SolveMode::deterministic;
    return cfg;
}

SolverConfig rnd(std::uint64_t seed, long cap = 100000) {
    SolverConfig cfg;
    cfg.mode = SolveMode::randomized;
    cfg.seed = seed;
    cfg.trial_cap = cap;
    return cfg;
}

// All connected graphs on exactly n labeled vertices, by edge subsets.
template <typename Fn>
void for_each_connected_graph(int n, Fn&& fn) {
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    const int m = static_cast<int>(all.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) es.push_back(all[i]);
        Graph g = build_graph(es, n);
        if (is_connected(g)) fn(g);
    }
}

}  // namespace

TEST_CASE("detect_two_cable_paths") {
    SUBCASE("induced cycles split") {
        for (int n : {3, 5, 8}) {
            auto split = detect_two_cable_paths(test_util::cycle(n));
            REQUIRE(split.has_value());
            CHECK(split->first.size() + split->second.size() ==
                  static_cast<std::size_t>(n));
        }
    }

    SUBCASE("C6 plus long chord") {
        Graph g = build_graph(
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}, 6);
        auto split = detect_two_cable_paths(g);
        REQUIRE(split.has_value());
        CHECK(split->first == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(split->second == std::vector<Vertex>{4, 5});
    }

    SUBCASE("K4 splits into two vacuous cable paths") {
        // every pair of disjoint edges partitions V(K4); both paths have no
        // internal vertices, so the premise of the polynomial case holds
        auto split = detect_two_cable_paths(test_util::complete(4));
        REQUIRE(split.has_value());
        CHECK(split->first.size() == 2);
        CHECK(split->second.size() == 2);
    }

    SUBCASE("graphs with five branch vertices do not split") {
        Graph k5 = test_util::complete(5);
        CHECK_FALSE(detect_two_cable_paths(k5).has_value());
        // theta graph with three parallel chains
        Graph theta = build_graph(
            {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}, 5);
        CHECK_FALSE(detect_two_cable_paths(theta).has_value());
    }

    SUBCASE("detection is complete on small 2-connected graphs") {
        // reference: exhaustive search over all ordered vertex sequences
        auto reference_split = [](const Graph& g) {
            const int n = g.vertex_count();
            std::vector<Vertex> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::sort(perm.begin(), perm.end());
            do {
                for (int cut = 1; cut < n; ++cut) {
                    std::vector<Vertex> p(perm.begin(), perm.begin() + cut);
                    std::vector<Vertex> q(perm.begin() + cut, perm.end());
                    auto is_path = [&](const std::vector<Vertex>& s) {
                        for (std::size_t i = 0; i + 1 < s.size(); ++i)
                            if (!g.has_edge(s[i], s[i + 1])) return false;
                        return true;
                    };
                    if (!is_path(p) || !is_path(q)) continue;
                    if (is_cable_path(g, p) && is_cable_path(g, q)) return true;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        for (int n = 3; n <= 6; ++n) {
            for_each_connected_graph(n, [&](const Graph& g) {
                if (!is_two_connected(g)) return;
                CHECK(detect_two_cable_paths(g).has_value() == reference_split(g));
            });
        }
    }
}

TEST_CASE("solve_cycle_special") {
    SUBCASE("induced cycle needs nothing") {
        auto sol = solve_cycle_special(test_util::cycle(6), 0);
        REQUIRE(sol.has_value());
        CHECK(sol->size == 0);
    }

    SUBCASE("C6 plus chord needs one contraction") {
        Graph g = build_graph(
            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}, 6);
        auto sol = solve_cycle_special(g, 3);
        REQUIRE(sol.has_value());
        CHECK(sol->size == 1);
        CHECK_FALSE(solve_cycle_special(g, 0).has_value());
    }

    SUBCASE("premise enforced") {
        CHECK_THROWS_AS(solve_cycle_special(test_util::complete(5), 2),
                        PremiseViolatedError);
    }

    SUBCASE("matches the oracle on all splittable 2-connected graphs, n<=6") {
        for (int n = 3; n <= 6; ++n) {
            for_each_connected_graph(n, [&](const Graph& g) {
                if (!is_two_connected(g)) return;
                if (!detect_two_cable_paths(g)) return;
                auto ref = oracle::brute_force_min_contractions(g, 3);
                REQUIRE(ref.optimum.has_value());  // the lemma bounds it by 3
                auto sol = solve_cycle_special(g, 3);
                REQUIRE(sol.has_value());
                CHECK(sol->size == *ref.optimum);
            });
        }
    }
}

TEST_CASE("two_connected_trial basics") {
    SUBCASE("planted instance with its compatible coloring succeeds") {
        // cycle targets give 2-connected instances often enough
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 400 && hits < 60; ++seed) {
            Graph t = test_util::cycle(3 + static_cast<int>(seed % 6));
            PlantedInstance p = plant_contractible(t, 1 + seed % 2, seed);
            if (!is_two_connected(p.g)) continue;
            ++hits;
            auto qc = proper_three_coloring(p.planted.quotient);
            REQUIRE(qc.has_value());
            auto sol = two_connected_trial(p.g, p.k, pull_back(*qc, p.planted));
            REQUIRE(sol.has_value());
            CHECK(sol->size <= p.k);
            CHECK(is_cactus(sol->quotient));
        }
        CHECK(hits == 60);
    }

    SUBCASE("adversarial single-color trial fails when the core is too big") {
        Graph k6 = test_util::complete(6);
        Coloring all1{std::vector<std::uint8_t>(6, 1)};
        CHECK_FALSE(two_connected_trial(k6, 1, all1).has_value());
    }
}

TEST_CASE("solve_two_connected examples") {
    CHECK(solve_two_connected(test_util::cycle(5), 0, det()).has_value());

    auto k4_det = solve_two_connected(test_util::complete(4), 1, det());
    REQUIRE(k4_det.has_value());
    CHECK(k4_det->size == 1);

    CHECK_FALSE(solve_two_connected(test_util::complete(4), 0, det()).has_value());
    CHECK_FALSE(solve_two_connected(test_util::complete(4), 0, rnd(5)).has_value());

    auto k4_rand = solve_two_connected(test_util::complete(4), 1, rnd(7));
    REQUIRE(k4_rand.has_value());
    CHECK(k4_rand->size == 1);
}

TEST_CASE("solve on multi-block graphs") {
    // two K4s sharing vertex 0
    std::vector<Edge> es;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) es.emplace_back(i, j);
    int map2[4] = {0, 4, 5, 6};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) es.push_back(make_edge(map2[i], map2[j]));
    Graph two_k4 = build_graph(es, 7);

    auto yes = solve(two_k4, 2, det());
    REQUIRE(yes.has_value());
    CHECK(yes->size == 2);
    CHECK(is_cactus(yes->quotient));

    CHECK_FALSE(solve(two_k4, 1, det()).has_value());

    // trees are already cacti
    Graph tree = build_graph({{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 5);
    auto t = solve(tree, 0, det());
    REQUIRE(t.has_value());
    CHECK(t->size == 0);

    CHECK_THROWS_AS(solve(build_graph({{0, 1}}, 3), 1, det()), DisconnectedError);
}

TEST_CASE("deterministic solve matches the oracle on all graphs n<=5") {
    for (int n = 1; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            auto ref = oracle::brute_force_min_contractions(g, 3);
            for (int k = 0; k <= 3; ++k) {
                bool expect = ref.optimum.has_value() && *ref.optimum <= k;
                auto sol = solve(g, k, det());
                CAPTURE(g.edges());
                CAPTURE(k);
                CHECK(sol.has_value() == expect);
                if (sol) {
                    CHECK(sol->size <= k);
                    CHECK(is_cactus(sol->quotient));
                }
            }
        });
    }
}

TEST_CASE("randomized mode never answers yes on no-instances") {
    int runs = 0;
    for (int n = 4; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            auto ref = oracle::brute_force_min_contractions(g, 1);
            if (ref.optimum.has_value()) return;  // yes-instance at k=1
            ++runs;
            auto sol = solve(g, 1, rnd(runs, 60));
            CHECK_FALSE(sol.has_value());
        });
    }
    CHECK(runs > 30);
}

TEST_CASE("monotonicity in k (deterministic)") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = test_util::random_connected_graph(4 + seed % 4, seed * 7 + 3);
        bool prev = false;
        for (int k = 0; k <= 3; ++k) {
            bool now = solve(g, k, det()).has_value();
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("planted instances are solved deterministically") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph t = random_cactus(2 + seed % 8, seed * 13 + 2);
        int k = 1 + static_cast<int>(seed % 3);
        PlantedInstance p = plant_contractible(t, k, seed + 77);
        auto sol = solve(p.g, p.k, det());
        REQUIRE(sol.has_value());
        CHECK(sol->size <= p.k);
        CHECK(is_cactus(sol->quotient));
    }
}
