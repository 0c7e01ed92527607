#pragma once

// Shared test utilities: seeded random graphs, the all-subsets independence
// count (the most primitive oracle in the tree), exhaustive small-graph
// corpora up to isomorphism, and brute-force matching references.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/poly.hpp"

namespace testsupport {

inline indpoly::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<indpoly::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(i, j);
    return indpoly::Graph::build(n, edges);
}

inline indpoly::Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<indpoly::Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    return indpoly::Graph::build(n, edges);
}

/// All-subsets independence count; n <= 20.
inline indpoly::IntPoly naive_indpoly(const indpoly::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> nbr(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= std::uint32_t{1} << w;
    std::vector<mpz_class> counts(static_cast<size_t>(n) + 1, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool independent = true;
        for (std::uint32_t rest = mask; rest && independent;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            independent = (nbr[static_cast<size_t>(v)] & mask) == 0;
        }
        if (independent) ++counts[static_cast<size_t>(std::popcount(mask))];
    }
    return indpoly::IntPoly(std::move(counts));
}

/// Reassemble sum_j c[j] (1+t)^j; test-side inverse of the Taylor shift.
inline indpoly::IntPoly from_taylor(const indpoly::TaylorAtMinusOne& taylor) {
    const indpoly::IntPoly one_plus_t{1, 1};
    indpoly::IntPoly acc;
    for (size_t j = taylor.c.size(); j-- > 0;) {
        acc = acc * one_plus_t;
        acc += indpoly::IntPoly::constant(taylor.c[j]);
    }
    return acc;
}

/// Connected graphs on 1..max_n vertices, one per isomorphism class
/// (canonical = minimal edge bitmask over all vertex permutations).
inline std::vector<indpoly::Graph> all_connected_graphs_upto(int max_n) {
    std::vector<indpoly::Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        const int m = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> index(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                index[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
                    static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
        auto bit_of = [&](int i, int j) {
            if (i > j) std::swap(i, j);
            return index[static_cast<size_t>(i) * static_cast<size_t>(n) +
                         static_cast<size_t>(j)];
        };
        std::vector<std::vector<int>> maps;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> map(static_cast<size_t>(m));
            for (int b = 0; b < m; ++b)
                map[static_cast<size_t>(b)] =
                    bit_of(perm[static_cast<size_t>(pairs[static_cast<size_t>(b)].first)],
                           perm[static_cast<size_t>(pairs[static_cast<size_t>(b)].second)]);
            maps.push_back(std::move(map));
        }
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            bool canonical = true;
            for (const auto& map : maps) {
                std::uint32_t permuted = 0;
                for (std::uint32_t rest = mask; rest;) {
                    const int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    permuted |= std::uint32_t{1} << map[static_cast<size_t>(b)];
                }
                if (permuted < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            std::vector<indpoly::Edge> edges;
            for (std::uint32_t rest = mask; rest;) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                edges.push_back(pairs[static_cast<size_t>(b)]);
            }
            indpoly::Graph g = indpoly::Graph::build(n, edges);
            if (indpoly::is_connected(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

/// Maximum matching by exhaustive recursion over edges; small graphs only.
inline int brute_matching_number(const indpoly::Graph& g) {
    const std::vector<indpoly::Edge> edges = g.edges();
    int best = 0;
    auto rec = [&](auto&& self, size_t i, std::uint32_t used, int size) -> void {
        best = std::max(best, size);
        for (size_t j = i; j < edges.size(); ++j) {
            const auto [a, b] = edges[j];
            const std::uint32_t ab = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
            if (used & ab) continue;
            self(self, j + 1, used | ab, size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

/// Maximum induced matching by exhaustive recursion; small graphs only.
inline int brute_induced_matching_number(const indpoly::Graph& g) {
    const std::vector<indpoly::Edge> edges = g.edges();
    int best = 0;
    auto conflict = [&](size_t i, size_t j) {
        const auto [a, b] = edges[i];
        const auto [c, d] = edges[j];
        return a == c || a == d || b == c || b == d || g.has_edge(a, c) || g.has_edge(a, d) ||
               g.has_edge(b, c) || g.has_edge(b, d);
    };
    auto rec = [&](auto&& self, size_t i, std::vector<size_t> chosen) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (size_t j = i; j < edges.size(); ++j) {
            bool ok = true;
            for (size_t c : chosen) ok = ok && !conflict(c, j);
            if (!ok) continue;
            std::vector<size_t> next = chosen;
            next.push_back(j);
            self(self, j + 1, std::move(next));
        }
    };
    rec(rec, 0, {});
    return best;
}

}  // namespace testsupport
