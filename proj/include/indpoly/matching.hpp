#pragma once

#include "indpoly/graph.hpp"

namespace indpoly {

struct MatchingNumbers {
    int mu;  // matching number
    int nu;  // induced matching number, nu <= mu
};

/// Maximum matching size on a general graph (Edmonds blossom).
int matching_number(const Graph& g);

/// Maximum induced matching size by edge-subset branch and bound.
/// Guarded at |E| <= 24.
int induced_matching_number(const Graph& g);

MatchingNumbers matching_numbers(const Graph& g);

/// nu(G) == mu(G); subject to the induced-matching guard.
bool is_cameron_walker(const Graph& g);

}  // namespace indpoly
