#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// Parameter records for the generated graph families. Vertex labelings are
// fixed and documented at each generator in family.cpp.

struct PathSpec {
    int n;  // >= 1 vertices
};

struct CycleSpec {
    int n;  // >= 3 vertices
};

struct StarSpec {
    int leaves;  // >= 1
};

/// Triangles sharing one common center vertex.
struct StarTriangleSpec {
    int triangles;  // >= 1
};

struct CompleteMultipartiteSpec {
    std::vector<int> parts;  // non-increasing, each >= 1
};

struct MAryTreeSpec {
    enum class Shape { Perfect, SeededRandom };
    int arity;   // m >= 1
    int depth;   // >= 0; every leaf sits at this level
    Shape shape = Shape::Perfect;
    std::uint64_t seed = 0;  // used by the seeded-random shape only
};

/// Connected antiregular graph A_n, or its disconnected counterpart.
struct AntiregularSpec {
    int n;  // >= 1 connected, >= 2 disconnected
    bool connected = true;
};

/// Connected bipartite base (U side, V side) with at least one leaf per
/// U-vertex and optional pendant triangles on V-vertices.
struct CameronWalkerSpec {
    int u_count;                    // >= 1
    int v_count;                    // >= 0
    std::vector<Edge> base_edges;   // (u index, v index) pairs
    std::vector<int> leaves_per_u;  // size u_count, each >= 1
    std::vector<int> triangles_per_v;  // size v_count, each >= 0
};

/// K_{m,n} with a set of distinct edges removed.
struct CompleteBipartiteMinusSpec {
    int m;  // U side, >= 1
    int n;  // V side, >= 1
    std::vector<Edge> removed;  // (u index, v index) pairs, distinct
};

using FamilySpec =
    std::variant<PathSpec, CycleSpec, StarSpec, StarTriangleSpec, CompleteMultipartiteSpec,
                 MAryTreeSpec, AntiregularSpec, CameronWalkerSpec, CompleteBipartiteMinusSpec>;

/// Deterministic construction; invalid parameters are rejected.
Graph generate(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);
/// Compact one-line form, e.g. "path(n=7)".
std::string describe(const FamilySpec& spec);

/// Random Cameron-Walker instance, reproducible from the seed: connected
/// bipartite base with sides in 1..max_u x 1..max_v, 1..max_leaves leaves per
/// U-vertex, 0..max_triangles pendant triangles per V-vertex.
CameronWalkerSpec random_cameron_walker(std::uint64_t seed, int max_u, int max_v, int max_leaves,
                                        int max_triangles);

}  // namespace indpoly
