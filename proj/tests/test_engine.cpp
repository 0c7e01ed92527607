#include <random>

#include "doctest.h"
#include "indpoly/engine.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/family.hpp"
#include "support.hpp"

using namespace indpoly;

namespace {

Graph cycle(int n) { return generate(CycleSpec{n}); }
Graph path(int n) { return generate(PathSpec{n}); }

void check_profile_consistency(const IndependenceProfile& profile, const Graph& g) {
    CHECK(profile.s.front() == 1);
    if (g.vertex_count() > 0) CHECK(profile.s[1] == g.vertex_count());
    CHECK(profile.alpha == profile.poly.degree());
    CHECK(profile.poly.coeffs() == profile.s);
    CHECK(testsupport::from_taylor(profile.taylor) == profile.poly);
}

}  // namespace

TEST_CASE("brute force on known small graphs") {
    CHECK(indpoly_bruteforce(Graph::build(3, {{0, 1}, {1, 2}, {2, 0}})).poly == IntPoly{1, 3});
    CHECK(indpoly_bruteforce(path(3)).poly == IntPoly{1, 3, 1});
    // Star: (1+t)^n + t.
    CHECK(indpoly_bruteforce(generate(StarSpec{4})).poly == IntPoly{1, 5, 6, 4, 1});
    CHECK(indpoly_bruteforce(Graph{}).poly == IntPoly{1});

    EngineOptions tight;
    tight.bruteforce_cap = 4;
    CHECK_THROWS_AS(indpoly_bruteforce(path(5), tight), GuardExceededError);
}

TEST_CASE("brute force agrees with the all-subsets scan") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g = testsupport::random_graph(rng, n, 0.1 + 0.08 * static_cast<double>(trial % 10));
        CHECK(indpoly_bruteforce(g).poly == testsupport::naive_indpoly(g));
    }
}

TEST_CASE("recursive engine on known graphs") {
    CHECK(indpoly_recursive(cycle(5)).poly == IntPoly{1, 5, 5});
    // K_{2,3}: (1+t)^2 + (1+t)^3 - 1.
    CHECK(indpoly_recursive(generate(CompleteMultipartiteSpec{{3, 2}})).poly ==
          IntPoly{1, 5, 4, 1});
    Graph two_edges = disjoint_union(path(2), path(2));
    CHECK(indpoly_recursive(two_edges).poly == IntPoly{1, 4, 4});
}

TEST_CASE("forest engine") {
    CHECK(indpoly_forest(path(4)).poly == IntPoly{1, 4, 3});
    CHECK(indpoly_forest(Graph::build(1, {})).poly == IntPoly{1, 1});
    // Perfect binary tree of depth 2; frozen from the brute-force oracle.
    Graph t22 = generate(MAryTreeSpec{2, 2});
    CHECK(indpoly_bruteforce(t22).poly == IntPoly{1, 7, 15, 12, 5, 1});
    CHECK(indpoly_forest(t22).poly == IntPoly{1, 7, 15, 12, 5, 1});
    CHECK_THROWS_AS(indpoly_forest(cycle(4)), std::invalid_argument);
}

TEST_CASE("dispatcher picks the route") {
    CHECK(independence_profile(path(6)).method == Method::ForestDP);
    CHECK(independence_profile(cycle(4)).method == Method::Recursive);
    CHECK(independence_profile(disjoint_union(path(3), path(2))).method == Method::ForestDP);
    CHECK(indpoly_bruteforce(path(3)).method == Method::BruteForce);
}

TEST_CASE("zykov composition") {
    IndependenceProfile e2 = independence_profile(Graph::build(2, {}));
    IndependenceProfile e3 = independence_profile(Graph::build(3, {}));
    std::vector<IndependenceProfile> parts{e2, e3};
    IndependenceProfile sum = zykov_indpoly(parts);
    CHECK(sum.poly == IntPoly{1, 5, 4, 1});  // K_{2,3}
    CHECK(sum.method == Method::Composed);
    CHECK(sum.alpha == 3);

    std::vector<IndependenceProfile> single{e2};
    CHECK(zykov_indpoly(single).poly == e2.poly);

    IndependenceProfile k1 = independence_profile(Graph::build(1, {}));
    std::vector<IndependenceProfile> pair{k1, k1};
    CHECK(zykov_indpoly(pair).poly == IntPoly{1, 2});

    CHECK_THROWS_AS(zykov_indpoly({}), std::invalid_argument);
}

TEST_CASE("node budget is a hard error") {
    Graph g = generate(CompleteBipartiteMinusSpec{6, 6, {{0, 0}, {1, 1}, {2, 2}}});
    EngineOptions tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(indpoly_recursive(g, tiny), BudgetExceededError);
}

TEST_CASE("oracle equivalence on exhaustive small graphs") {
    for (const Graph& g : testsupport::all_connected_graphs_upto(5)) {
        IndependenceProfile brute = indpoly_bruteforce(g);
        IndependenceProfile rec = indpoly_recursive(g);
        CHECK(rec.poly == brute.poly);
        check_profile_consistency(rec, g);
    }
}

TEST_CASE("oracle equivalence and deletion identities on random graphs") {
    std::mt19937_64 rng(2024);
    const IntPoly t{0, 1};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 6);
        Graph g = testsupport::random_graph(rng, n, 0.15 + 0.1 * static_cast<double>(trial % 7));
        IndependenceProfile brute = indpoly_bruteforce(g);
        IndependenceProfile rec = indpoly_recursive(g);
        CHECK(rec.poly == brute.poly);
        check_profile_consistency(rec, g);

        // s_2 = C(n,2) - |E|.
        mpz_class expected_s2 =
            mpz_class(n) * (n - 1) / 2 - static_cast<long>(g.edge_count());
        if (brute.alpha >= 2) CHECK(brute.s[2] == expected_s2);

        // I(G) = I(G-v) + t I(G-N[v]) for every vertex.
        for (Vertex v = 0; v < n; ++v) {
            IntPoly without = indpoly_bruteforce(induced_delete(g, {v}).graph).poly;
            IntPoly closed =
                indpoly_bruteforce(induced_delete(g, closed_neighborhood(g, v)).graph).poly;
            CHECK(brute.poly == without + t * closed);
        }
        // I(G) = I(G-e) - t^2 I(G - (N(u) u N(v))) for every edge.
        for (const auto& [u, v] : g.edges()) {
            IntPoly without = indpoly_bruteforce(delete_edge(g, u, v)).poly;
            VertexSet both = open_neighborhood(g, u);
            for (Vertex w : open_neighborhood(g, v)) both.push_back(w);
            std::sort(both.begin(), both.end());
            both.erase(std::unique(both.begin(), both.end()), both.end());
            IntPoly rest = indpoly_bruteforce(induced_delete(g, both).graph).poly;
            CHECK(brute.poly == without - t * t * rest);
        }
    }
}

TEST_CASE("multiplicativity over disjoint unions") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        Graph a = testsupport::random_graph(rng, 5 + static_cast<int>(rng() % 4), 0.4);
        Graph b = testsupport::random_graph(rng, 5 + static_cast<int>(rng() % 4), 0.4);
        CHECK(independence_profile(disjoint_union(a, b)).poly == independence_profile(a).poly * independence_profile(b).poly);
    }
}

TEST_CASE("three engines agree on random trees up to 20 vertices") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        Graph t = testsupport::random_tree(rng, n);
        IntPoly expect = indpoly_bruteforce(t).poly;
        CHECK(indpoly_forest(t).poly == expect);
        CHECK(indpoly_recursive(t).poly == expect);
    }
}
