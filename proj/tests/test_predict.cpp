#include <random>

#include "doctest.h"
#include "indpoly/elimination.hpp"
#include "indpoly/predict.hpp"
#include "indpoly/verify.hpp"
#include "support.hpp"

using namespace indpoly;

namespace {

PredictionCheck checked(const FamilySpec& spec) {
    Graph g = generate(spec);
    IndependenceProfile profile = independence_profile(g);
    return check_prediction(predict(spec), degree_report(profile), profile);
}

}  // namespace

TEST_CASE("path predictions") {
    FamilyPrediction p4 = predict_path(4);
    CHECK(*p4.i_at_minus_one == 0);
    CHECK(*p4.i_prime_at_minus_one == -2);
    CHECK(*p4.deg_h == 1);
    FamilyPrediction p6 = predict_path(6);
    CHECK(*p6.i_at_minus_one == 1);
    CHECK(*p6.deg_h == 3);
    CHECK(*p6.alpha == 3);
    FamilyPrediction p5 = predict_path(5);
    CHECK(*p5.i_at_minus_one == 1);
    CHECK(*p5.deg_h == 3);
    for (int n = 1; n <= 30; ++n) CHECK(checked(PathSpec{n}).matches);
}

TEST_CASE("cycle predictions") {
    CHECK(*predict_cycle(6).i_at_minus_one == 2);
    CHECK(*predict_cycle(5).i_at_minus_one == 1);
    CHECK(*predict_cycle(3).i_at_minus_one == -2);
    CHECK(independence_profile(generate(CycleSpec{3})).value_at_minus_one() == -2);
    for (int n = 3; n <= 30; ++n) CHECK(checked(CycleSpec{n}).matches);
}

TEST_CASE("multipartite predictions") {
    CHECK(*predict_multipartite({3, 2}).deg_h == 3);
    FamilyPrediction k222 = predict_multipartite({2, 2, 2});
    CHECK(*k222.deg_h == 2);
    CHECK(*k222.i_at_minus_one == -2);
    CHECK(independence_profile(generate(CompleteMultipartiteSpec{{2, 2, 2}})).value_at_minus_one() == -2);
    FamilyPrediction edgeless = predict_multipartite({4});
    CHECK(*edgeless.deg_h == 0);
    CHECK(checked(CompleteMultipartiteSpec{{4}}).matches);
    CHECK(checked(CompleteMultipartiteSpec{{4, 3, 2, 1}}).matches);
}

TEST_CASE("tree predictions") {
    CHECK(*predict_mary_tree(2, 1).deg_equals_alpha);
    CHECK(!*predict_mary_tree(2, 3).deg_equals_alpha);
    CHECK(*predict_mary_tree(3, 2).deg_equals_alpha);
    CHECK(checked(MAryTreeSpec{2, 1}).matches);
    CHECK(checked(MAryTreeSpec{2, 3}).matches);
    CHECK(checked(MAryTreeSpec{3, 2}).matches);

    // Mixed child counts, all leaves at level 2 (3 + 2 + 1 + 2 leaves... 9 vertices).
    Graph mixed = Graph::build(
        9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {3, 8}});
    DegreeReport report = degree_report(independence_profile(mixed));
    CHECK(report.deg_h == report.alpha);
}

TEST_CASE("star and star triangle predictions") {
    CHECK(*predict_star(5).i_at_minus_one == -1);
    CHECK(checked(StarSpec{5}).matches);
    FamilyPrediction st2 = predict_star_triangle(2);
    CHECK(*st2.i_at_minus_one == 0);
    CHECK(*st2.a_invariant == -1);
    FamilyPrediction st3 = predict_star_triangle(3);
    CHECK(*st3.i_at_minus_one == -2);
    for (int m = 1; m <= 8; ++m) CHECK(checked(StarTriangleSpec{m}).matches);
}

TEST_CASE("cameron-walker predictions") {
    std::mt19937_64 rng(515);
    for (int i = 0; i < 25; ++i) {
        CameronWalkerSpec spec = random_cameron_walker(rng(), 6, 6, 3, 3);
        CHECK(checked(spec).matches);
    }
}

TEST_CASE("antiregular predictions") {
    CHECK(*predict_antiregular(4, true).i_at_minus_one == -1);
    CHECK(*predict_antiregular(2, true).i_at_minus_one == -1);
    FamilyPrediction d3 = predict_antiregular(3, false);
    CHECK(*d3.i_at_minus_one == 0);
    CHECK(*d3.k == 1);
    // The disconnected 3-vertex graph is a lone vertex plus an edge.
    IndependenceProfile profile = independence_profile(generate(AntiregularSpec{3, false}));
    CHECK(profile.poly == IntPoly{1, 3, 2});
    DegreeReport report = degree_report(profile);
    CHECK(report.deg_h == 1);
    CHECK(report.alpha == 2);
    for (int n = 2; n <= 14; ++n) CHECK(checked(AntiregularSpec{n, true}).matches);
    for (int n = 3; n <= 14; ++n) CHECK(checked(AntiregularSpec{n, false}).matches);
    CHECK_THROWS_AS(predict_antiregular(2, false), std::invalid_argument);
}

TEST_CASE("bipartite setup sums") {
    // Matching removals leave nothing after deleting both neighborhoods.
    BipartiteSetupSum matching3 = bipartite_setup_sum(4, 4, std::vector<Edge>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(matching3.sum == 3);
    CHECK(matching3.predicate);
    CHECK(matching3.min_degree_ok);

    BipartiteSetupSum single = bipartite_setup_sum(3, 3, std::vector<Edge>{{0, 0}});
    CHECK(single.sum == 1);
    CHECK(!single.predicate);
    CHECK(independence_profile(generate(CompleteBipartiteMinusSpec{3, 3, {{0, 0}}})).value_at_minus_one() == 0);

    // Six-cycle removal from K_{5,4}, consecutive edges paired.
    std::vector<Edge> hexagon{{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 0}};
    BipartiteSetupSum cycle6 = bipartite_setup_sum(5, 4, hexagon);
    CHECK(cycle6.sum == 0);
    CHECK(cycle6.predicate);
    CHECK(cycle6.min_degree_ok);
}

TEST_CASE("whiskered bipartite graphs keep full degree") {
    // Connected bipartite graph with a leaf on every vertex of one side:
    // elimination must confirm deg h = alpha.
    std::mt19937_64 rng(2299);
    for (int trial = 0; trial < 25; ++trial) {
        CameronWalkerSpec spec = random_cameron_walker(rng(), 5, 5, 2, 0);
        CHECK(deg_equals_alpha(generate(spec)).answer);
    }
}

TEST_CASE("verify suites pass on a reduced grid") {
    SuiteOptions opts;
    opts.max_path = 25;
    opts.max_cycle = 25;
    opts.tree_random_instances = 8;
    opts.cw_random_instances = 10;
    opts.antiregular_max = 10;
    opts.bipartite_minus_max_side = 4;
    for (const std::string& name : suite_names()) {
        SuiteResult result = run_suite(name, opts);
        CHECK(result.all_pass);
        CHECK(!result.instances.empty());
        CHECK(std::is_sorted(result.instances.begin(), result.instances.end(),
                             [](const SuiteInstance& a, const SuiteInstance& b) {
                                 return a.key < b.key;
                             }));
    }
}
