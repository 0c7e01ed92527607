#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace indpoly {

using Vertex = int;
/// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;  // the empty graph

    /// Validates endpoints, rejects self-loops, collapses duplicate edges.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    /// All edges with u < v, lexicographically ordered.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph plus the original label of each relabeled vertex.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // original[new index] = old index
};

/// Subgraph induced on `keep` (sorted, valid); vertices relabeled 0..|keep|-1
/// in the order of `keep`.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
/// Subgraph obtained by deleting `remove`.
InducedSubgraph induced_delete(const Graph& g, const VertexSet& remove);

/// Same vertex set with one edge removed; the edge must be present.
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Degree-1 vertices.
VertexSet leaves(const Graph& g);
/// Degree-0 vertices.
VertexSet isolated_vertices(const Graph& g);
int min_degree(const Graph& g);  // requires a nonempty graph
int max_degree(const Graph& g);  // requires a nonempty graph

/// Components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

/// One center joined to every other vertex and nothing else, on >= 2
/// vertices. K_2 counts as the one-leaf star; a single vertex does not.
bool is_star(const Graph& g);

/// Side-by-side relabeling: b's vertices are shifted by a's count.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus all cross edges.
Graph zykov_sum(const Graph& a, const Graph& b);

}  // namespace indpoly
