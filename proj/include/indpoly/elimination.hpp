#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

/// One removal round. Every vertex set carries original labels of the input
/// graph so the trace can be audited against the input file.
struct EliminationStep {
    int step_index;
    VertexSet removed;             // distance-2 vertices deleted this round
    VertexSet leaves_before;       // leaf set before the deletion
    Graph snapshot;                // surviving graph, relabeled
    VertexSet snapshot_vertices;   // original label of each snapshot vertex
};

enum class ZeroKind { IsolatedVertex, Distance3LeafPair };

/// Witness that I(G,-1) = 0: an isolated vertex or two leaves at distance 3,
/// observed in the graph after `at_step` removal rounds.
struct ZeroCertificate {
    ZeroKind kind;
    VertexSet witness;
    int at_step;
};

/// Surviving vertices split into stars and connected min-degree-2 cores.
struct Decomposition {
    std::vector<VertexSet> stars;
    std::vector<VertexSet> cores;
};

struct EliminationOutcome {
    std::vector<EliminationStep> trace;
    std::variant<ZeroCertificate, Decomposition> verdict;
};

enum class EliminationMode {
    Batch,       // delete the whole distance-2 set each round
    Sequential,  // delete one vertex per round, recomputing everything
};

/// Non-leaf, non-isolated vertices at distance exactly 2 from the leaf set;
/// empty when the graph has no leaves.
VertexSet u2_set(const Graph& g);

/// Lexicographically first pair of leaves at distance exactly 3, if any.
std::optional<std::pair<Vertex, Vertex>> distance3_leaf_pair(const Graph& g);

/// Run the leaf-elimination process. Requires a connected, nonempty graph;
/// isolated-vertex and distance-3 checks run before every removal round.
EliminationOutcome eliminate(const Graph& g, EliminationMode mode = EliminationMode::Batch);

struct CoreEvaluation {
    VertexSet core;
    mpz_class i_at_minus_one;
};

struct DegAlphaResult {
    bool answer;  // deg h == alpha
    EliminationOutcome outcome;
    std::vector<CoreEvaluation> core_values;
};

/// Decide deg h == alpha from the elimination certificate alone: a zero
/// certificate refutes it; otherwise it holds iff every core has nonzero
/// value at -1 (stars contribute -1 automatically).
DegAlphaResult deg_equals_alpha(const Graph& g, const EngineOptions& opts = {});

}  // namespace indpoly
