#include <random>

#include "doctest.h"
#include "indpoly/errors.hpp"
#include "indpoly/family.hpp"
#include "indpoly/hilbert.hpp"
#include "support.hpp"

using namespace indpoly;

TEST_CASE("degree reports on known graphs") {
    DegreeReport p4 = degree_report(independence_profile(generate(PathSpec{4})));
    CHECK(p4.alpha == 2);
    CHECK(p4.i_at_minus_one == 0);
    CHECK(p4.k == 1);
    CHECK(p4.deg_h == 1);
    CHECK(p4.h_poly == IntPoly{1, 2});
    CHECK(p4.a_invariant == -1);

    DegreeReport c5 = degree_report(independence_profile(generate(CycleSpec{5})));
    CHECK(c5.alpha == 2);
    CHECK(c5.i_at_minus_one == 1);
    CHECK(c5.k == 0);
    CHECK(c5.deg_h == 2);

    DegreeReport k1 = degree_report(independence_profile(Graph::build(1, {})));
    CHECK(k1.alpha == 1);
    CHECK(k1.i_at_minus_one == 0);
    CHECK(k1.k == 1);
    CHECK(k1.deg_h == 0);
    CHECK(k1.h_poly == IntPoly{1});

    // Empty graph convention: I = 1, everything trivial.
    DegreeReport empty = degree_report(independence_profile(Graph{}));
    CHECK(empty.alpha == 0);
    CHECK(empty.deg_h == 0);
    CHECK(empty.h_poly == IntPoly{1});
}

TEST_CASE("h_direct expansions") {
    CHECK(h_direct(independence_profile(generate(PathSpec{3}))) == IntPoly{1, 1, -1});
    CHECK(h_direct(independence_profile(generate(PathSpec{4}))) == IntPoly{1, 2});
    for (int n = 1; n <= 6; ++n)
        CHECK(h_direct(independence_profile(Graph::build(n, {}))) == IntPoly{1});
}

TEST_CASE("hilbert function prefixes") {
    auto prefix = [](const Graph& g, int cutoff) {
        return hilbert_prefix(degree_report(independence_profile(g)), cutoff).values;
    };
    CHECK(prefix(generate(PathSpec{3}), 3) == std::vector<mpz_class>{1, 3, 4, 5});
    CHECK(prefix(Graph::build(2, {}), 2) == std::vector<mpz_class>{1, 2, 3});
    CHECK(prefix(generate(PathSpec{2}), 3) == std::vector<mpz_class>{1, 2, 2, 2});
    CHECK_THROWS_AS(hilbert_prefix(degree_report(independence_profile(Graph{})), -1), std::invalid_argument);
}

TEST_CASE("standard monomial counts") {
    CHECK(monomial_oracle(generate(PathSpec{2}), 2) == 2);
    CHECK(monomial_oracle(Graph::build(2, {}), 2) == 3);
    CHECK(monomial_oracle(generate(PathSpec{3}), 2) == 4);
    CHECK(monomial_oracle(Graph::build(3, {}), 0) == 1);
    CHECK_THROWS_AS(monomial_oracle(Graph::build(11, {}), 2), GuardExceededError);
    CHECK_THROWS_AS(monomial_oracle(Graph::build(2, {}), 9), GuardExceededError);
}

TEST_CASE("assembled h equals the f-vector route everywhere") {
    for (const Graph& g : testsupport::all_connected_graphs_upto(5)) {
        IndependenceProfile profile = independence_profile(g);
        DegreeReport report = degree_report(profile);
        CHECK(report.h_poly == h_direct(profile));
        CHECK(report.h_poly.degree() <= report.alpha);
        CHECK(report.h_poly.coeff(0) == 1);
        CHECK(report.h_poly.eval(1) == profile.s.back());  // count of maximum sets
        CHECK(report.a_invariant <= 0);
        CHECK(report.k >= 0);
        CHECK(report.k <= report.alpha);
    }
}

TEST_CASE("hilbert prefix matches the monomial oracle") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Graph g = testsupport::random_graph(rng, n, 0.15 + 0.1 * static_cast<double>(trial % 7));
        DegreeReport report = degree_report(independence_profile(g));
        HilbertPrefix prefix = hilbert_prefix(report, 6);
        for (int d = 0; d <= 6; ++d)
            CHECK(prefix.values[static_cast<size_t>(d)] == monomial_oracle(g, d));
        CHECK(prefix.values[0] == 1);
        if (n >= 1) CHECK(prefix.values[1] == n);
    }
}

TEST_CASE("degree additivity over disjoint unions") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        Graph a = testsupport::random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.4);
        Graph b = testsupport::random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.4);
        DegreeReport ra = degree_report(independence_profile(a));
        DegreeReport rb = degree_report(independence_profile(b));
        DegreeReport ru = degree_report(independence_profile(disjoint_union(a, b)));
        const bool parts_full =
            ra.deg_h == ra.alpha && rb.deg_h == rb.alpha;
        CHECK((ru.deg_h == ru.alpha) == parts_full);
    }
}
