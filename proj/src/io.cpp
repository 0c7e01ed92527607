#include "indpoly/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "indpoly/errors.hpp"

namespace indpoly {

ParsedGraph parse_edgelist(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.try_emplace(name, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(name);
        return it->second;
    };

    std::vector<Edge> edges;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++lineno;

        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream stream(line);
        std::vector<std::string> tokens;
        for (std::string token; stream >> token;) tokens.push_back(std::move(token));
        if (tokens.empty()) continue;

        if (tokens[0] == "vertices:") {
            for (size_t i = 1; i < tokens.size(); ++i) intern(tokens[i]);
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(lineno, "expected two vertex names, got " +
                                         std::to_string(tokens.size()) + " token(s)");
        int u = intern(tokens[0]);
        int v = intern(tokens[1]);
        if (u == v) throw ParseError(lineno, "self-loop at vertex '" + tokens[0] + "'");
        edges.emplace_back(u, v);
    }
    return {Graph::build(static_cast<int>(labels.size()), edges), std::move(labels)};
}

namespace {

constexpr int kGraph6Offset = 63;

int graph6_byte(std::string_view line, size_t i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kGraph6Offset || c > 126)
        throw ParseError(1, "graph6 byte out of range at position " + std::to_string(i + 1));
    return c - kGraph6Offset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw ParseError(1, "empty graph6 input");

    if (static_cast<unsigned char>(line[0]) == 126)
        throw ParseError(1, "graph6 long-form size header not supported");
    const int n = graph6_byte(line, 0);

    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const size_t bytes = static_cast<size_t>((bits + 5) / 6);
    if (line.size() < 1 + bytes) throw ParseError(1, "graph6 bit stream truncated");
    if (line.size() > 1 + bytes) throw ParseError(1, "trailing bytes after graph6 bit stream");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = graph6_byte(line, 1 + static_cast<size_t>(bit / 6));
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    // Padding bits must be zero for the encoding to be canonical.
    for (long long pad = bit; pad < static_cast<long long>(bytes) * 6; ++pad) {
        const int value = graph6_byte(line, 1 + static_cast<size_t>(pad / 6));
        if ((value >> (5 - pad % 6)) & 1) throw ParseError(1, "nonzero graph6 padding bits");
    }
    return Graph::build(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 63)
        throw std::invalid_argument("encode_graph6: short-form header limited to n < 63");
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::string out(1 + static_cast<size_t>((bits + 5) / 6), static_cast<char>(kGraph6Offset));
    out[0] = static_cast<char>(kGraph6Offset + n);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j))
                out[1 + static_cast<size_t>(bit / 6)] += static_cast<char>(1 << (5 - bit % 6));
    return out;
}

ParsedGraph read_graph_file(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    if (format == InputFormat::EdgeList) return parse_edgelist(text);

    // First non-blank line holds the graph6 string.
    size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw ParseError(1, "empty graph6 input");
    size_t end = text.find('\n', start);
    Graph g = parse_graph6(text.substr(start, end == std::string::npos ? end : end - start));
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(std::to_string(v));
    return {std::move(g), std::move(labels)};
}

}  // namespace indpoly
