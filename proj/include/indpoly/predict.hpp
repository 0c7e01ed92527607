#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indpoly/family.hpp"
#include "indpoly/hilbert.hpp"

namespace indpoly {

/// Closed-form expectations for one family instance. Populated fields are
/// compared against an engine-computed report; absent fields claim nothing.
/// Predictions are data only -- the engines never consult them.
struct FamilyPrediction {
    FamilySpec spec;
    std::optional<mpz_class> i_at_minus_one;
    std::optional<mpz_class> i_prime_at_minus_one;
    std::optional<int> alpha;
    std::optional<int> deg_h;
    std::optional<int> a_invariant;
    std::optional<int> k;
    std::optional<bool> deg_equals_alpha;
    std::string notes;
};

FamilyPrediction predict_path(int n);
FamilyPrediction predict_cycle(int n);
FamilyPrediction predict_star(int leaves);
FamilyPrediction predict_star_triangle(int triangles);
FamilyPrediction predict_multipartite(const std::vector<int>& parts);
FamilyPrediction predict_mary_tree(int arity, int depth);
FamilyPrediction predict_cameron_walker(const CameronWalkerSpec& spec);
FamilyPrediction predict_antiregular(int n, bool connected);

/// Prediction for any family spec. Bipartite-minus predictions derive the
/// boolean from the edge-removal chain, so an engine options object applies.
FamilyPrediction predict(const FamilySpec& spec, const EngineOptions& opts = {});

struct PredictionCheck {
    bool matches;
    std::vector<std::string> mismatches;
};

/// Exact comparison of every populated prediction field against the report.
PredictionCheck check_prediction(const FamilyPrediction& prediction, const DegreeReport& report,
                                 const IndependenceProfile& profile);

/// The edge-removal chain sum for K_{m,n} minus the given edges: for each
/// removed edge, the value at -1 of the graph left after deleting both
/// endpoint neighborhoods. deg h == alpha exactly when the sum is not 1.
struct BipartiteSetupSum {
    mpz_class sum;
    bool predicate;      // sum != 1
    bool min_degree_ok;  // final graph keeps min degree >= 2
};
BipartiteSetupSum bipartite_setup_sum(int m, int n, std::span<const Edge> removed,
                                      const EngineOptions& opts = {});

}  // namespace indpoly
