#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;  // labels[v] = name used in the input
};

/// Edge-list text: "u v" token pairs, '#' starts a comment, blank lines are
/// skipped, and an optional "vertices: a b c" line declares (possibly
/// isolated) vertices. Labels are interned in first-appearance order.
ParsedGraph parse_edgelist(std::string_view text);

/// Standard graph6 line, short size header only (n < 63).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

enum class InputFormat { EdgeList, Graph6 };

/// Reads a whole file; graph6 labels are stringified indices.
ParsedGraph read_graph_file(const std::string& path, InputFormat format);

}  // namespace indpoly
