#include "indpoly/report.hpp"

#include <sstream>

namespace indpoly {

namespace {

nlohmann::json decimal_strings(const std::vector<mpz_class>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const mpz_class& z : values) out.push_back(z.get_str());
    return out;
}

nlohmann::json labeled(const VertexSet& vertices, const std::vector<std::string>& labels) {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : vertices)
        out.push_back(v < static_cast<int>(labels.size()) ? labels[static_cast<size_t>(v)]
                                                          : std::to_string(v));
    return out;
}

}  // namespace

nlohmann::json degree_json(const DegreeReport& report, const IndependenceProfile& profile) {
    nlohmann::json j;
    j["alpha"] = report.alpha;
    j["I_at_minus_one"] = report.i_at_minus_one.get_str();
    j["k"] = report.k;
    j["deg_h"] = report.deg_h;
    j["a_invariant"] = report.a_invariant;
    j["h_coeffs"] = decimal_strings(report.h_poly.coeffs());
    j["s"] = decimal_strings(profile.s);
    return j;
}

nlohmann::json elimination_json(const DegAlphaResult& result,
                                const std::vector<std::string>& labels) {
    nlohmann::json j;
    j["deg_equals_alpha"] = result.answer;
    nlohmann::json trace = nlohmann::json::array();
    for (const EliminationStep& step : result.outcome.trace) {
        nlohmann::json entry;
        entry["step"] = step.step_index;
        entry["removed"] = labeled(step.removed, labels);
        entry["leaves_before"] = labeled(step.leaves_before, labels);
        entry["surviving"] = labeled(step.snapshot_vertices, labels);
        trace.push_back(std::move(entry));
    }
    j["trace"] = std::move(trace);

    nlohmann::json verdict;
    if (const auto* zero = std::get_if<ZeroCertificate>(&result.outcome.verdict)) {
        verdict["type"] = "zero-certificate";
        verdict["kind"] = zero->kind == ZeroKind::IsolatedVertex ? "isolated-vertex"
                                                                 : "distance3-leaf-pair";
        verdict["witness"] = labeled(zero->witness, labels);
        verdict["at_step"] = zero->at_step;
    } else {
        const auto& decomposition = std::get<Decomposition>(result.outcome.verdict);
        verdict["type"] = "decomposition";
        nlohmann::json stars = nlohmann::json::array();
        for (const VertexSet& star : decomposition.stars) stars.push_back(labeled(star, labels));
        verdict["stars"] = std::move(stars);
        nlohmann::json cores = nlohmann::json::array();
        for (const VertexSet& core : decomposition.cores) cores.push_back(labeled(core, labels));
        verdict["cores"] = std::move(cores);
        nlohmann::json values = nlohmann::json::array();
        for (const CoreEvaluation& eval : result.core_values)
            values.push_back(eval.i_at_minus_one.get_str());
        verdict["core_values_at_minus_one"] = std::move(values);
    }
    j["verdict"] = std::move(verdict);
    return j;
}

nlohmann::json prediction_json(const FamilyPrediction& prediction, const PredictionCheck& check) {
    nlohmann::json j;
    j["family"] = family_name(prediction.spec);
    j["spec"] = describe(prediction.spec);
    nlohmann::json fields;
    if (prediction.alpha) fields["alpha"] = *prediction.alpha;
    if (prediction.i_at_minus_one) fields["I_at_minus_one"] = prediction.i_at_minus_one->get_str();
    if (prediction.i_prime_at_minus_one)
        fields["I_prime_at_minus_one"] = prediction.i_prime_at_minus_one->get_str();
    if (prediction.k) fields["k"] = *prediction.k;
    if (prediction.deg_h) fields["deg_h"] = *prediction.deg_h;
    if (prediction.a_invariant) fields["a_invariant"] = *prediction.a_invariant;
    if (prediction.deg_equals_alpha) fields["deg_equals_alpha"] = *prediction.deg_equals_alpha;
    j["fields"] = std::move(fields);
    j["notes"] = prediction.notes;
    j["matches"] = check.matches;
    j["mismatches"] = check.mismatches;
    return j;
}

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json j = degree_json(report.degree, report.profile);
    nlohmann::json input;
    input["source"] = report.source;
    input["format"] = report.format;
    input["vertices"] = report.vertices;
    input["edges"] = report.edges;
    bool plain_indices = true;
    for (size_t i = 0; i < report.labels.size() && plain_indices; ++i)
        plain_indices = report.labels[i] == std::to_string(i);
    if (!plain_indices) input["labels"] = report.labels;
    j["input"] = std::move(input);
    j["method"] = method_name(report.profile.method);
    j["poly"] = report.profile.poly.to_string();
    j["h_poly"] = report.degree.h_poly.to_string();
    if (report.elimination) j["elimination"] = elimination_json(*report.elimination, report.labels);
    if (report.prediction)
        j["prediction"] = prediction_json(report.prediction->first, report.prediction->second);
    j["timing_ms"] = report.timing_ms;
    return j;
}

std::string human_text(const RunReport& report) {
    std::ostringstream out;
    out << "input: " << report.source << " (" << report.format << ")\n";
    out << "vertices: " << report.vertices << "   edges: " << report.edges << "\n";
    out << "method: " << method_name(report.profile.method) << "\n";
    out << "I(G,t) = " << report.profile.poly.to_string() << "\n";
    out << "alpha = " << report.degree.alpha << "\n";
    out << "I(G,-1) = " << report.degree.i_at_minus_one.get_str() << "\n";
    out << "k = " << report.degree.k << "\n";
    out << "h(t) = " << report.degree.h_poly.to_string() << "\n";
    out << "deg h = " << report.degree.deg_h << "\n";
    out << "a-invariant = " << report.degree.a_invariant << "\n";
    if (report.elimination) {
        const DegAlphaResult& el = *report.elimination;
        out << "elimination: " << el.outcome.trace.size() << " removal step(s), ";
        if (const auto* zero = std::get_if<ZeroCertificate>(&el.outcome.verdict)) {
            out << "zero certificate ("
                << (zero->kind == ZeroKind::IsolatedVertex ? "isolated vertex"
                                                           : "two leaves at distance 3")
                << " after step " << zero->at_step << ")\n";
        } else {
            const auto& d = std::get<Decomposition>(el.outcome.verdict);
            out << d.stars.size() << " star(s) and " << d.cores.size() << " core(s)\n";
        }
        out << "deg h == alpha: " << (el.answer ? "yes" : "no") << "\n";
    }
    if (report.prediction) {
        out << "prediction (" << describe(report.prediction->first.spec)
            << "): " << (report.prediction->second.matches ? "match" : "MISMATCH") << "\n";
        for (const std::string& m : report.prediction->second.mismatches)
            out << "  " << m << "\n";
    }
    return out.str();
}

}  // namespace indpoly
