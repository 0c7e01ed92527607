#include "indpoly/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace indpoly {

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("Graph::build: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph::build: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for n=" +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("Graph::build: self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += static_cast<long long>(nbrs.size());
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (!has_vertex(v)) throw std::invalid_argument("Graph::neighbors: invalid vertex");
    return adj_[static_cast<size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        Vertex v = keep[i];
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: invalid vertex");
        if (index[static_cast<size_t>(v)] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
        index[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v))
            if (v < w && index[static_cast<size_t>(w)] != -1)
                edges.emplace_back(index[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
    return {Graph::build(static_cast<int>(keep.size()), edges), keep};
}

InducedSubgraph induced_delete(const Graph& g, const VertexSet& remove) {
    std::vector<char> gone(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : remove) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_delete: invalid vertex");
        gone[static_cast<size_t>(v)] = 1;
    }
    VertexSet keep;
    keep.reserve(static_cast<size_t>(g.vertex_count()) - remove.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!gone[static_cast<size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: edge not present");
    std::vector<Edge> edges = g.edges();
    std::erase_if(edges, [&](const Edge& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
    return Graph::build(g.vertex_count(), edges);
}

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("distance: invalid vertex");
    if (u == v) return 0;
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    dist[static_cast<size_t>(u)] = 0;
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (dist[static_cast<size_t>(y)] != -1) continue;
            dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
            if (y == v) return dist[static_cast<size_t>(y)];
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_degree: empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        VertexSet comp;
        std::deque<Vertex> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            comp.push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (seen[static_cast<size_t>(y)]) continue;
                seen[static_cast<size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_acyclic(const Graph& g) {
    long long components = static_cast<long long>(connected_components(g).size());
    return g.edge_count() == g.vertex_count() - components;
}

bool is_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return false;
    // With n-1 edges, one vertex of full degree forces all others to degree 1.
    return max_degree(g) == n - 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::build(a.vertex_count() + b.vertex_count(), edges);
}

Graph zykov_sum(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    for (Vertex u = 0; u < a.vertex_count(); ++u)
        for (Vertex v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, v + shift);
    return Graph::build(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace indpoly
