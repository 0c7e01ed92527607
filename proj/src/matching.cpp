#include "indpoly/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace {

// Edmonds' blossom algorithm, O(V^3). Blossoms are contracted implicitly via
// the base[] array while searching for an augmenting path from each exposed
// vertex.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(static_cast<size_t>(n_), -1) {}

    int run() {
        int size = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (match_[static_cast<size_t>(v)] == -1 && augment_from(v)) ++size;
        return size;
    }

private:
    bool augment_from(Vertex root) {
        used_.assign(static_cast<size_t>(n_), false);
        prev_.assign(static_cast<size_t>(n_), -1);
        base_.resize(static_cast<size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) base_[static_cast<size_t>(v)] = v;

        used_[static_cast<size_t>(root)] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to : g_.neighbors(v)) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
                    match_[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<size_t>(to)] != -1 &&
                     prev_[static_cast<size_t>(match_[static_cast<size_t>(to)])] != -1)) {
                    // An odd cycle closed; contract the blossom.
                    Vertex stem = lowest_common_base(v, to);
                    std::vector<char> in_blossom(static_cast<size_t>(n_), 0);
                    mark_path(v, stem, to, in_blossom);
                    mark_path(to, stem, v, in_blossom);
                    for (Vertex i = 0; i < n_; ++i)
                        if (in_blossom[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
                            base_[static_cast<size_t>(i)] = stem;
                            if (!used_[static_cast<size_t>(i)]) {
                                used_[static_cast<size_t>(i)] = true;
                                queue.push_back(i);
                            }
                        }
                } else if (prev_[static_cast<size_t>(to)] == -1) {
                    prev_[static_cast<size_t>(to)] = v;
                    if (match_[static_cast<size_t>(to)] == -1) {
                        flip_path(to);
                        return true;
                    }
                    used_[static_cast<size_t>(match_[static_cast<size_t>(to)])] = true;
                    queue.push_back(match_[static_cast<size_t>(to)]);
                }
            }
        }
        return false;
    }

    Vertex lowest_common_base(Vertex a, Vertex b) {
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        Vertex cur = a;
        while (true) {
            cur = base_[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(cur)] = 1;
            if (match_[static_cast<size_t>(cur)] == -1) break;
            cur = prev_[static_cast<size_t>(match_[static_cast<size_t>(cur)])];
        }
        cur = b;
        while (!seen[static_cast<size_t>(base_[static_cast<size_t>(cur)])])
            cur = prev_[static_cast<size_t>(match_[static_cast<size_t>(cur)])];
        return base_[static_cast<size_t>(cur)];
    }

    void mark_path(Vertex v, Vertex stem, Vertex child, std::vector<char>& in_blossom) {
        while (base_[static_cast<size_t>(v)] != stem) {
            Vertex mv = match_[static_cast<size_t>(v)];
            in_blossom[static_cast<size_t>(base_[static_cast<size_t>(v)])] = 1;
            in_blossom[static_cast<size_t>(base_[static_cast<size_t>(mv)])] = 1;
            prev_[static_cast<size_t>(v)] = child;
            child = mv;
            v = prev_[static_cast<size_t>(mv)];
        }
    }

    void flip_path(Vertex v) {
        while (v != -1) {
            Vertex pv = prev_[static_cast<size_t>(v)];
            Vertex next = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> match_, prev_, base_;
    std::vector<bool> used_;
};

}  // namespace

int matching_number(const Graph& g) { return Blossom(g).run(); }

int induced_matching_number(const Graph& g) {
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > 24)
        throw GuardExceededError("induced matching: guarded at 24 edges, graph has " +
                                 std::to_string(m));
    // conflict[i]: edges that cannot join edge i in an induced matching --
    // sharing an endpoint or joined by an edge of G.
    std::vector<std::uint32_t> conflict(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[static_cast<size_t>(i)];
            auto [c, d] = edges[static_cast<size_t>(j)];
            bool clash = a == c || a == d || b == c || b == d || g.has_edge(a, c) ||
                         g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
            if (clash) {
                conflict[static_cast<size_t>(i)] |= std::uint32_t{1} << j;
                conflict[static_cast<size_t>(j)] |= std::uint32_t{1} << i;
            }
        }
    int best = 0;
    auto search = [&](auto&& self, std::uint32_t avail, int chosen) -> void {
        best = std::max(best, chosen);
        while (avail) {
            if (chosen + std::popcount(avail) <= best) return;
            const int e = std::countr_zero(avail);
            avail &= avail - 1;
            self(self, avail & ~conflict[static_cast<size_t>(e)], chosen + 1);
        }
    };
    const std::uint32_t all = m == 0 ? 0 : (~std::uint32_t{0} >> (32 - m));
    search(search, all, 0);
    return best;
}

MatchingNumbers matching_numbers(const Graph& g) {
    return {matching_number(g), induced_matching_number(g)};
}

bool is_cameron_walker(const Graph& g) {
    MatchingNumbers numbers = matching_numbers(g);
    return numbers.nu == numbers.mu;
}

}  // namespace indpoly
