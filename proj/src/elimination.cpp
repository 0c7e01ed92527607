#include "indpoly/elimination.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace indpoly {

namespace {

// BFS layers from a seed set; -1 marks unreached vertices.
std::vector<int> distances_from_set(const Graph& g, const VertexSet& sources) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue;
    for (Vertex v : sources) {
        dist[static_cast<size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (dist[static_cast<size_t>(y)] != -1) continue;
            dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

VertexSet to_original(const VertexSet& local, const std::vector<Vertex>& original) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(original[static_cast<size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

VertexSet u2_set(const Graph& g) {
    VertexSet leaf_set = leaves(g);
    if (leaf_set.empty()) return {};
    std::vector<int> dist = distances_from_set(g, leaf_set);
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2 && dist[static_cast<size_t>(v)] == 2) out.push_back(v);
    return out;
}

std::optional<std::pair<Vertex, Vertex>> distance3_leaf_pair(const Graph& g) {
    VertexSet leaf_set = leaves(g);
    for (Vertex a : leaf_set) {
        std::vector<int> dist = distances_from_set(g, {a});
        for (Vertex b : leaf_set)
            if (b > a && dist[static_cast<size_t>(b)] == 3) return std::make_pair(a, b);
    }
    return std::nullopt;
}

EliminationOutcome eliminate(const Graph& g, EliminationMode mode) {
    if (g.vertex_count() == 0) throw std::invalid_argument("eliminate: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("eliminate: input must be connected");

    EliminationOutcome out;
    VertexSet live(static_cast<size_t>(g.vertex_count()));
    std::iota(live.begin(), live.end(), 0);
    int step = 0;

    while (true) {
        InducedSubgraph view = induced_subgraph(g, live);
        const Graph& h = view.graph;

        VertexSet isolated = isolated_vertices(h);
        if (!isolated.empty()) {
            out.verdict = ZeroCertificate{ZeroKind::IsolatedVertex,
                                          to_original(isolated, view.original), step};
            return out;
        }
        if (auto pair = distance3_leaf_pair(h)) {
            out.verdict = ZeroCertificate{
                ZeroKind::Distance3LeafPair,
                to_original({pair->first, pair->second}, view.original), step};
            return out;
        }

        std::vector<VertexSet> stars, cores;
        bool offending = false;
        for (const VertexSet& comp : connected_components(h)) {
            InducedSubgraph sub = induced_subgraph(h, comp);
            if (is_star(sub.graph))
                stars.push_back(to_original(comp, view.original));
            else if (min_degree(sub.graph) >= 2)
                cores.push_back(to_original(comp, view.original));
            else
                offending = true;
        }
        if (!offending) {
            out.verdict = Decomposition{std::move(stars), std::move(cores)};
            return out;
        }

        VertexSet removal = u2_set(h);
        if (removal.empty())
            throw std::logic_error("eliminate: non-terminal graph without distance-2 vertices");
        if (mode == EliminationMode::Sequential) removal.resize(1);

        EliminationStep record;
        record.step_index = step;
        record.removed = to_original(removal, view.original);
        record.leaves_before = to_original(leaves(h), view.original);

        VertexSet next_live;
        std::set_difference(live.begin(), live.end(), record.removed.begin(),
                            record.removed.end(), std::back_inserter(next_live));
        live = std::move(next_live);

        InducedSubgraph snap = induced_subgraph(g, live);
        record.snapshot = std::move(snap.graph);
        record.snapshot_vertices = std::move(snap.original);
        out.trace.push_back(std::move(record));
        ++step;
    }
}

DegAlphaResult deg_equals_alpha(const Graph& g, const EngineOptions& opts) {
    DegAlphaResult result{true, eliminate(g), {}};
    if (std::holds_alternative<ZeroCertificate>(result.outcome.verdict)) {
        result.answer = false;
        return result;
    }
    for (const VertexSet& core : std::get<Decomposition>(result.outcome.verdict).cores) {
        InducedSubgraph sub = induced_subgraph(g, core);
        mpz_class value = independence_profile(sub.graph, opts).value_at_minus_one();
        if (value == 0) result.answer = false;
        result.core_values.push_back({core, std::move(value)});
    }
    return result;
}

}  // namespace indpoly
