#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "indpoly/elimination.hpp"
#include "indpoly/hilbert.hpp"
#include "indpoly/predict.hpp"

namespace indpoly {

/// Everything one CLI run reports. JSON key order is stable (alphabetical)
/// and big integers render as decimal strings; timing_ms is the only
/// platform-dependent field.
struct RunReport {
    std::string source;  // file path or family description
    std::string format;  // "edgelist" | "graph6" | "family"
    int vertices = 0;
    long long edges = 0;
    std::vector<std::string> labels;
    IndependenceProfile profile;
    DegreeReport degree;
    std::optional<DegAlphaResult> elimination;
    std::optional<std::pair<FamilyPrediction, PredictionCheck>> prediction;
    double timing_ms = 0.0;
};

nlohmann::json degree_json(const DegreeReport& report, const IndependenceProfile& profile);
nlohmann::json elimination_json(const DegAlphaResult& result,
                                const std::vector<std::string>& labels);
nlohmann::json prediction_json(const FamilyPrediction& prediction, const PredictionCheck& check);
nlohmann::json to_json(const RunReport& report);

std::string human_text(const RunReport& report);

}  // namespace indpoly
