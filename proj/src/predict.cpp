#include "indpoly/predict.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace indpoly {

FamilyPrediction predict_path(int n) {
    if (n < 1) throw std::invalid_argument("predict_path: need n >= 1");
    FamilyPrediction p;
    p.spec = PathSpec{n};
    p.alpha = (n + 1) / 2;
    const int r = n % 3;
    const long sign_n = n % 2 == 0 ? 1 : -1;  // (-1)^n
    if (r == 0) {
        p.i_at_minus_one = sign_n;
    } else if (r == 2) {
        p.i_at_minus_one = -sign_n;
    } else {
        p.i_at_minus_one = 0;
        p.i_prime_at_minus_one = mpz_class((n + 2) / 3) * (-sign_n);
    }
    p.k = r == 1 ? 1 : 0;
    p.a_invariant = r == 1 ? -1 : 0;
    p.deg_h = *p.alpha + *p.a_invariant;
    p.deg_equals_alpha = r != 1;
    p.notes = "path parity rule";
    return p;
}

FamilyPrediction predict_cycle(int n) {
    if (n < 3) throw std::invalid_argument("predict_cycle: need n >= 3");
    FamilyPrediction p;
    p.spec = CycleSpec{n};
    p.alpha = n / 2;
    const long sign_n = n % 2 == 0 ? 1 : -1;
    p.i_at_minus_one = n % 3 == 0 ? 2 * sign_n : -sign_n;
    p.k = 0;
    p.a_invariant = 0;
    p.deg_h = *p.alpha;
    p.deg_equals_alpha = true;
    p.notes = "cycle parity rule";
    return p;
}

FamilyPrediction predict_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("predict_star: need at least one leaf");
    FamilyPrediction p;
    p.spec = StarSpec{leaves};
    p.alpha = leaves;
    p.i_at_minus_one = -1;  // I(S_n,t) = (1+t)^n + t
    p.k = 0;
    p.a_invariant = 0;
    p.deg_h = leaves;
    p.deg_equals_alpha = true;
    p.notes = "star closed form";
    return p;
}

FamilyPrediction predict_star_triangle(int triangles) {
    if (triangles < 1) throw std::invalid_argument("predict_star_triangle: need m >= 1");
    FamilyPrediction p;
    p.spec = StarTriangleSpec{triangles};
    const bool even = triangles % 2 == 0;
    // I = (1+2t)^m + t, so the value at -1 alternates between -2 and 0.
    p.alpha = triangles;
    p.i_at_minus_one = even ? 0 : -2;
    p.k = even ? 1 : 0;
    p.a_invariant = even ? -1 : 0;
    p.deg_h = triangles - (even ? 1 : 0);
    p.deg_equals_alpha = !even;
    p.notes = "star triangle closed form";
    return p;
}

FamilyPrediction predict_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("predict_multipartite: no parts");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("predict_multipartite: bad part size");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("predict_multipartite: parts must be non-increasing");
    }
    FamilyPrediction p;
    p.spec = CompleteMultipartiteSpec{parts};
    const int q = static_cast<int>(parts.size());
    p.alpha = parts[0];
    if (q == 1) {
        // Edgeless graph: I = (1+t)^m, everything collapses to h = 1.
        p.i_at_minus_one = 0;
        p.k = parts[0];
        p.deg_h = 0;
        p.a_invariant = -parts[0];
        p.deg_equals_alpha = false;
        p.notes = "edgeless graph";
    } else {
        p.i_at_minus_one = 1 - q;
        p.k = 0;
        p.deg_h = parts[0];
        p.a_invariant = 0;
        p.deg_equals_alpha = true;
        p.notes = "largest part rule";
    }
    return p;
}

FamilyPrediction predict_mary_tree(int arity, int depth) {
    if (arity < 1 || depth < 0) throw std::invalid_argument("predict_mary_tree: bad parameters");
    FamilyPrediction p;
    p.spec = MAryTreeSpec{arity, depth};
    p.deg_equals_alpha = depth % 3 != 0;
    p.notes = "leaf level mod 3";
    return p;
}

FamilyPrediction predict_cameron_walker(const CameronWalkerSpec& spec) {
    FamilyPrediction p;
    p.spec = spec;
    p.deg_equals_alpha = true;
    p.a_invariant = 0;
    p.notes = "cameron-walker rule (leafed bipartite shape)";
    return p;
}

FamilyPrediction predict_antiregular(int n, bool connected) {
    FamilyPrediction p;
    p.spec = AntiregularSpec{n, connected};
    if (connected) {
        if (n < 2) throw std::invalid_argument("predict_antiregular: connected form needs n >= 2");
        p.i_at_minus_one = -1;
        p.k = 0;
        p.a_invariant = 0;
        p.deg_equals_alpha = true;
    } else {
        if (n < 3)
            throw std::invalid_argument("predict_antiregular: disconnected form needs n >= 3");
        p.i_at_minus_one = 0;
        p.k = 1;
        p.a_invariant = -1;
        p.deg_equals_alpha = false;
    }
    p.notes = "antiregular recurrence";
    return p;
}

FamilyPrediction predict(const FamilySpec& spec, const EngineOptions& opts) {
    return std::visit(
        [&](const auto& s) -> FamilyPrediction {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) {
                return predict_path(s.n);
            } else if constexpr (std::is_same_v<T, CycleSpec>) {
                return predict_cycle(s.n);
            } else if constexpr (std::is_same_v<T, StarSpec>) {
                return predict_star(s.leaves);
            } else if constexpr (std::is_same_v<T, StarTriangleSpec>) {
                return predict_star_triangle(s.triangles);
            } else if constexpr (std::is_same_v<T, CompleteMultipartiteSpec>) {
                return predict_multipartite(s.parts);
            } else if constexpr (std::is_same_v<T, MAryTreeSpec>) {
                return predict_mary_tree(s.arity, s.depth);
            } else if constexpr (std::is_same_v<T, AntiregularSpec>) {
                return predict_antiregular(s.n, s.connected);
            } else if constexpr (std::is_same_v<T, CameronWalkerSpec>) {
                return predict_cameron_walker(s);
            } else {
                BipartiteSetupSum setup = bipartite_setup_sum(s.m, s.n, s.removed, opts);
                FamilyPrediction p;
                p.spec = s;
                p.deg_equals_alpha = setup.predicate;
                std::ostringstream notes;
                notes << "edge-removal chain sum = " << setup.sum.get_str();
                if (!setup.min_degree_ok) notes << " (warning: min degree below 2)";
                p.notes = notes.str();
                return p;
            }
        },
        spec);
}

PredictionCheck check_prediction(const FamilyPrediction& prediction, const DegreeReport& report,
                                 const IndependenceProfile& profile) {
    PredictionCheck check{true, {}};
    auto mismatch = [&](const std::string& field, const std::string& want,
                        const std::string& got) {
        check.matches = false;
        check.mismatches.push_back(field + ": predicted " + want + ", computed " + got);
    };
    if (prediction.alpha && *prediction.alpha != report.alpha)
        mismatch("alpha", std::to_string(*prediction.alpha), std::to_string(report.alpha));
    if (prediction.i_at_minus_one && *prediction.i_at_minus_one != report.i_at_minus_one)
        mismatch("I(-1)", prediction.i_at_minus_one->get_str(), report.i_at_minus_one.get_str());
    if (prediction.i_prime_at_minus_one) {
        mpz_class actual = profile.alpha >= 1 ? profile.taylor.c[1] : mpz_class(0);
        if (*prediction.i_prime_at_minus_one != actual)
            mismatch("I'(-1)", prediction.i_prime_at_minus_one->get_str(), actual.get_str());
    }
    if (prediction.k && *prediction.k != report.k)
        mismatch("k", std::to_string(*prediction.k), std::to_string(report.k));
    if (prediction.deg_h && *prediction.deg_h != report.deg_h)
        mismatch("deg h", std::to_string(*prediction.deg_h), std::to_string(report.deg_h));
    if (prediction.a_invariant && *prediction.a_invariant != report.a_invariant)
        mismatch("a-invariant", std::to_string(*prediction.a_invariant),
                 std::to_string(report.a_invariant));
    if (prediction.deg_equals_alpha &&
        *prediction.deg_equals_alpha != (report.deg_h == report.alpha))
        mismatch("deg h == alpha", *prediction.deg_equals_alpha ? "true" : "false",
                 report.deg_h == report.alpha ? "true" : "false");
    return check;
}

BipartiteSetupSum bipartite_setup_sum(int m, int n, std::span<const Edge> removed,
                                      const EngineOptions& opts) {
    CompleteBipartiteMinusSpec spec{m, n, {removed.begin(), removed.end()}};
    generate(spec);  // range and distinctness validation
    Graph current = generate(CompleteBipartiteMinusSpec{m, n, {}});
    BipartiteSetupSum result{0, false, false};
    for (const auto& [u, v] : spec.removed) {
        const Vertex a = u, b = m + v;
        VertexSet wipe = open_neighborhood(current, a);
        for (Vertex w : open_neighborhood(current, b)) wipe.push_back(w);
        std::sort(wipe.begin(), wipe.end());
        wipe.erase(std::unique(wipe.begin(), wipe.end()), wipe.end());
        InducedSubgraph rest = induced_delete(current, wipe);
        result.sum += independence_profile(rest.graph, opts).value_at_minus_one();
        current = delete_edge(current, a, b);
    }
    result.predicate = result.sum != 1;
    result.min_degree_ok = min_degree(current) >= 2;
    return result;
}

}  // namespace indpoly
