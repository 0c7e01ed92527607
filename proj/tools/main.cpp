// Command-line front end: compute, decompose, family, verify.
//
// Exit codes: 0 on success / all-pass, 1 on any prediction or suite
// mismatch, 2 on usage or input errors.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "indpoly/elimination.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/family.hpp"
#include "indpoly/hilbert.hpp"
#include "indpoly/io.hpp"
#include "indpoly/predict.hpp"
#include "indpoly/report.hpp"
#include "indpoly/verify.hpp"

namespace {

using namespace indpoly;

struct CommonArgs {
    std::string engine = "auto";
    std::uint64_t budget = std::uint64_t{1} << 22;
    bool json = false;
};

EngineOptions engine_options(const CommonArgs& args) {
    EngineOptions opts;
    opts.node_budget = args.budget;
    return opts;
}

IndependenceProfile run_engine(const Graph& g, const CommonArgs& args) {
    const EngineOptions opts = engine_options(args);
    if (args.engine == "auto") return indpoly::independence_profile(g, opts);
    if (args.engine == "brute") return indpoly_bruteforce(g, opts);
    if (args.engine == "recursive") return indpoly_recursive(g, opts);
    if (args.engine == "forest") return indpoly_forest(g);
    throw CLI::ValidationError("--engine must be auto, brute, recursive or forest");
}

InputFormat parse_format(const std::string& name) {
    if (name == "edgelist") return InputFormat::EdgeList;
    if (name == "graph6") return InputFormat::Graph6;
    throw CLI::ValidationError("--format must be edgelist or graph6");
}

void emit(const RunReport& report, bool json) {
    if (json)
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << human_text(report);
}

RunReport make_report(std::string source, std::string format, const ParsedGraph& parsed,
                      const CommonArgs& args, bool with_elimination,
                      const std::optional<FamilySpec>& family) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.source = std::move(source);
    report.format = std::move(format);
    report.vertices = parsed.graph.vertex_count();
    report.edges = parsed.graph.edge_count();
    report.labels = parsed.labels;
    report.profile = run_engine(parsed.graph, args);
    report.degree = degree_report(report.profile);
    if (with_elimination)
        report.elimination = deg_equals_alpha(parsed.graph, engine_options(args));
    if (family) {
        FamilyPrediction prediction = predict(*family, engine_options(args));
        PredictionCheck check = check_prediction(prediction, report.degree, report.profile);
        report.prediction = {std::move(prediction), std::move(check)};
    }
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

ParsedGraph labeled_from_graph(const Graph& g) {
    ParsedGraph parsed;
    parsed.graph = g;
    for (int v = 0; v < g.vertex_count(); ++v) parsed.labels.push_back(std::to_string(v));
    return parsed;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    for (std::string piece; std::getline(stream, piece, ',');) out.push_back(std::stoi(piece));
    return out;
}

std::vector<Edge> parse_edge_list_arg(const std::string& text) {
    std::vector<Edge> out;
    if (text.empty()) return out;
    std::stringstream stream(text);
    for (std::string piece; std::getline(stream, piece, ',');) {
        const size_t colon = piece.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--remove expects u:v pairs separated by commas");
        out.emplace_back(std::stoi(piece.substr(0, colon)), std::stoi(piece.substr(colon + 1)));
    }
    return out;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, bool json) {
    std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool all_pass = true;
    nlohmann::json tables = nlohmann::json::array();
    for (const std::string& name : names) {
        SuiteResult result = run_suite(name, opts);
        all_pass = all_pass && result.all_pass;
        if (json) {
            nlohmann::json table;
            table["suite"] = result.suite;
            table["all_pass"] = result.all_pass;
            nlohmann::json rows = nlohmann::json::array();
            for (const SuiteInstance& inst : result.instances) {
                nlohmann::json row;
                row["key"] = inst.key;
                row["pass"] = inst.pass;
                if (!inst.detail.empty()) row["detail"] = inst.detail;
                rows.push_back(std::move(row));
            }
            table["instances"] = std::move(rows);
            tables.push_back(std::move(table));
        } else {
            int passed = 0;
            for (const SuiteInstance& inst : result.instances) {
                passed += inst.pass;
                if (!inst.pass) std::cout << "FAIL  " << inst.key << "  " << inst.detail << "\n";
            }
            std::cout << result.suite << ": " << passed << "/" << result.instances.size()
                      << " instances pass\n";
        }
    }
    if (json) std::cout << tables.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence polynomials and h-polynomial degrees of edge ideals"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string input_path, input_format = "edgelist";

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("--input", input_path, "input graph file")->required();
            cmd->add_option("--format", input_format, "edgelist|graph6");
        }
        cmd->add_option("--engine", common.engine, "auto|brute|recursive|forest");
        cmd->add_option("--budget", common.budget, "recursion node budget");
        cmd->add_flag("--json", common.json, "emit a JSON report");
    };

    CLI::App* compute = app.add_subcommand("compute", "independence polynomial and degree data");
    add_common(compute, true);
    CLI::App* decompose =
        app.add_subcommand("decompose", "elimination trace, certificate and degree test");
    add_common(decompose, true);

    CLI::App* family = app.add_subcommand("family", "generate a family instance and verify it");
    family->require_subcommand(1);
    int fam_n = 0, fam_leaves = 1, fam_m = 1, fam_depth = 0;
    std::string fam_parts, fam_shape = "perfect", fam_remove;
    std::uint64_t fam_seed = 0;
    bool fam_disconnected = false;
    int fam_max_u = 6, fam_max_v = 6, fam_max_leaves = 3, fam_max_triangles = 3;

    CLI::App* fam_path = family->add_subcommand("path");
    fam_path->add_option("--n", fam_n, "vertex count")->required();
    add_common(fam_path, false);
    CLI::App* fam_cycle = family->add_subcommand("cycle");
    fam_cycle->add_option("--n", fam_n, "vertex count")->required();
    add_common(fam_cycle, false);
    CLI::App* fam_star = family->add_subcommand("star");
    fam_star->add_option("--leaves", fam_leaves, "leaf count")->required();
    add_common(fam_star, false);
    CLI::App* fam_st = family->add_subcommand("star-triangle");
    fam_st->add_option("--m", fam_m, "triangle count")->required();
    add_common(fam_st, false);
    CLI::App* fam_multi = family->add_subcommand("multipartite");
    fam_multi->add_option("--parts", fam_parts, "comma list, non-increasing")->required();
    add_common(fam_multi, false);
    CLI::App* fam_tree = family->add_subcommand("mary-tree");
    fam_tree->add_option("--m", fam_m, "arity")->required();
    fam_tree->add_option("--depth", fam_depth, "leaf level")->required();
    fam_tree->add_option("--shape", fam_shape, "perfect|random");
    fam_tree->add_option("--seed", fam_seed, "seed for the random shape");
    add_common(fam_tree, false);
    CLI::App* fam_anti = family->add_subcommand("antiregular");
    fam_anti->add_option("--n", fam_n, "vertex count")->required();
    fam_anti->add_flag("--disconnected", fam_disconnected, "use the disconnected form");
    add_common(fam_anti, false);
    CLI::App* fam_cw = family->add_subcommand("cameron-walker");
    fam_cw->add_option("--seed", fam_seed, "instance seed")->required();
    fam_cw->add_option("--max-u", fam_max_u, "U side bound");
    fam_cw->add_option("--max-v", fam_max_v, "V side bound");
    fam_cw->add_option("--max-leaves", fam_max_leaves, "leaves per U vertex bound");
    fam_cw->add_option("--max-triangles", fam_max_triangles, "triangles per V vertex bound");
    add_common(fam_cw, false);
    CLI::App* fam_bm = family->add_subcommand("bipartite-minus");
    fam_bm->add_option("--m", fam_m, "U side")->required();
    fam_bm->add_option("--n", fam_n, "V side")->required();
    fam_bm->add_option("--remove", fam_remove, "removed edges as u:v,u:v,...");
    add_common(fam_bm, false);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteOptions suite_opts;
    int verify_max_n = 60;
    verify
        ->add_option("suite", suite,
                     "paths|cycles|multipartite|trees|cameron-walker|antiregular|"
                     "bipartite-minus|all")
        ->required();
    verify->add_option("--seed", suite_opts.seed, "seed for randomized instances");
    verify->add_option("--max-n", verify_max_n, "grid bound for paths and cycles");
    verify->add_option("--budget", suite_opts.engine.node_budget, "recursion node budget");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "emit a JSON table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed() || decompose->parsed()) {
            ParsedGraph parsed = read_graph_file(input_path, parse_format(input_format));
            RunReport report = make_report(input_path, input_format, parsed, common,
                                           decompose->parsed(), std::nullopt);
            emit(report, common.json);
            return 0;
        }
        if (family->parsed()) {
            std::optional<FamilySpec> spec;
            if (fam_path->parsed()) spec = PathSpec{fam_n};
            else if (fam_cycle->parsed()) spec = CycleSpec{fam_n};
            else if (fam_star->parsed()) spec = StarSpec{fam_leaves};
            else if (fam_st->parsed()) spec = StarTriangleSpec{fam_m};
            else if (fam_multi->parsed())
                spec = CompleteMultipartiteSpec{parse_int_list(fam_parts)};
            else if (fam_tree->parsed())
                spec = MAryTreeSpec{fam_m, fam_depth,
                                    fam_shape == "random" ? MAryTreeSpec::Shape::SeededRandom
                                                          : MAryTreeSpec::Shape::Perfect,
                                    fam_seed};
            else if (fam_anti->parsed()) spec = AntiregularSpec{fam_n, !fam_disconnected};
            else if (fam_cw->parsed())
                spec = random_cameron_walker(fam_seed, fam_max_u, fam_max_v, fam_max_leaves,
                                             fam_max_triangles);
            else if (fam_bm->parsed())
                spec = CompleteBipartiteMinusSpec{fam_m, fam_n, parse_edge_list_arg(fam_remove)};
            ParsedGraph parsed = labeled_from_graph(generate(*spec));
            RunReport report = make_report(describe(*spec), "family", parsed, common, false, spec);
            emit(report, common.json);
            return report.prediction->second.matches ? 0 : 1;
        }
        if (verify->parsed()) {
            suite_opts.max_path = verify_max_n;
            suite_opts.max_cycle = verify_max_n;
            return cmd_verify(suite, suite_opts, verify_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
