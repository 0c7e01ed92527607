#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"

namespace indpoly {

enum class Method { BruteForce, Recursive, ForestDP, Composed };
const char* method_name(Method m);

struct EngineOptions {
    /// Recursion node cap; exceeding it raises BudgetExceededError.
    std::uint64_t node_budget = std::uint64_t{1} << 22;
    /// Vertex cap for the brute-force enumerator.
    int bruteforce_cap = 28;
};

/// I(G,t) together with everything the degree theory reads off it.
struct IndependenceProfile {
    IntPoly poly;              // I(G,t)
    std::vector<mpz_class> s;  // s[i] = number of independent sets of size i
    int alpha = 0;             // degree of poly = independence number
    TaylorAtMinusOne taylor;   // expansion about -1
    Method method = Method::BruteForce;

    const mpz_class& value_at_minus_one() const { return taylor.c.front(); }
};

/// Exact enumeration of every independent set, branching on the lowest
/// undecided vertex. The reference the other engines are checked against.
IndependenceProfile indpoly_bruteforce(const Graph& g, const EngineOptions& opts = {});

/// Component split + multiply; forest components by tree DP; otherwise pivot
/// on a maximum-degree vertex (ties to the lowest index) and recurse on G-v
/// and G-N[v], memoized by the alive vertex subset of the root graph.
IndependenceProfile indpoly_recursive(const Graph& g, const EngineOptions& opts = {});

/// Two-state tree DP; rejects cyclic input.
IndependenceProfile indpoly_forest(const Graph& g);

/// Dispatcher: forests take the DP route, everything else recursion.
IndependenceProfile independence_profile(const Graph& g, const EngineOptions& opts = {});

/// Profile of the Zykov sum: I = sum I_i - (k-1).
IndependenceProfile zykov_indpoly(std::span<const IndependenceProfile> parts);

}  // namespace indpoly
