#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indpoly/engine.hpp"

namespace indpoly {

struct SuiteInstance {
    std::string key;
    bool pass;
    std::string detail;  // empty when passing
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteInstance> instances;  // sorted by key
    bool all_pass;
};

struct SuiteOptions {
    std::uint64_t seed = 20250801;
    int max_path = 60;
    int max_cycle = 60;
    int multipartite_max_parts = 4;
    int multipartite_max_size = 6;
    int tree_random_instances = 50;
    int star_triangle_max = 10;
    int cw_random_instances = 200;
    int antiregular_max = 20;
    int bipartite_minus_max_side = 7;
    EngineOptions engine;
};

/// paths, cycles, multipartite, trees, cameron-walker, antiregular,
/// bipartite-minus.
std::vector<std::string> suite_names();

/// Sweep one named suite over its parameter grid, comparing engine output
/// against the closed-form prediction of every instance.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace indpoly
