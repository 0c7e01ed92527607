#include "indpoly/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "indpoly/errors.hpp"

namespace indpoly {

const char* method_name(Method m) {
    switch (m) {
        case Method::BruteForce: return "brute-force";
        case Method::Recursive: return "recursive";
        case Method::ForestDP: return "forest-dp";
        case Method::Composed: return "composed";
    }
    return "unknown";
}

namespace {

// Fixed-capacity dynamic bitset over the root graph's vertices.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}

    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    void set(int i) { w_[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    int lowest() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits and_not(const Bits& o) const {
        Bits r = *this;
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    template <class F>
    void for_each(F f) const {  // ascending order
        for (size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bits& o) const = default;

    size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<size_t>(h);
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

// Per-invocation recursion state; nothing global, so distinct computations
// can run on distinct threads.
class RecEngine {
public:
    RecEngine(const Graph& g, const EngineOptions& opts) : g_(g), opts_(opts) {
        const int n = g.vertex_count();
        closed_.reserve(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            Bits b(n);
            b.set(v);
            for (Vertex w : g.neighbors(v)) b.set(w);
            closed_.push_back(std::move(b));
        }
    }

    IntPoly subset_poly(const Bits& alive) {
        IntPoly result = IntPoly::constant(1);
        for (Bits& comp : split_components(alive)) result *= component_poly(std::move(comp));
        return result;
    }

    IntPoly tree_poly(const Bits& comp) { return tree_poly_impl(comp); }

private:
    IntPoly component_poly(Bits comp) {
        if (++nodes_ > opts_.node_budget)
            throw BudgetExceededError("recursive engine: node budget of " +
                                      std::to_string(opts_.node_budget) + " exceeded");
        if (auto it = memo_.find(comp); it != memo_.end()) return it->second;

        const int size = comp.count();
        IntPoly result;
        if (size == 1) {
            result = IntPoly{1, 1};
        } else if (edges_within(comp) == size - 1) {
            result = tree_poly_impl(comp);
        } else {
            const Vertex v = pivot(comp);
            Bits without_v = comp;
            without_v.reset(v);
            const IntPoly left = subset_poly(without_v);
            const IntPoly right = subset_poly(comp.and_not(closed_[static_cast<size_t>(v)]));
            result = left + right.shifted_up(1);
        }
        memo_.emplace(std::move(comp), result);
        return result;
    }

    // Maximum degree within the component, ties to the lowest index.
    Vertex pivot(const Bits& comp) const {
        Vertex best = -1;
        int best_deg = -1;
        comp.for_each([&](Vertex v) {
            int deg = 0;
            for (Vertex w : g_.neighbors(v)) deg += comp.test(w);
            if (deg > best_deg) {
                best_deg = deg;
                best = v;
            }
        });
        return best;
    }

    long long edges_within(const Bits& comp) const {
        long long twice = 0;
        comp.for_each([&](Vertex v) {
            for (Vertex w : g_.neighbors(v)) twice += comp.test(w);
        });
        return twice / 2;
    }

    std::vector<Bits> split_components(const Bits& alive) const {
        std::vector<Bits> out;
        Bits todo = alive;
        while (todo.any()) {
            Bits comp(g_.vertex_count());
            std::vector<Vertex> stack{todo.lowest()};
            comp.set(stack.back());
            todo.reset(stack.back());
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g_.neighbors(x)) {
                    if (!todo.test(y)) continue;
                    todo.reset(y);
                    comp.set(y);
                    stack.push_back(y);
                }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Two-state DP over a tree component: per vertex the polynomial pair
    // (independent sets avoiding it, sets containing it).
    IntPoly tree_poly_impl(const Bits& comp) {
        const Vertex root = comp.lowest();
        std::vector<Vertex> order{root};
        std::vector<Vertex> parent(static_cast<size_t>(g_.vertex_count()), -1);
        parent[static_cast<size_t>(root)] = root;
        for (size_t i = 0; i < order.size(); ++i) {
            Vertex x = order[i];
            for (Vertex y : g_.neighbors(x)) {
                if (!comp.test(y) || parent[static_cast<size_t>(y)] != -1) continue;
                parent[static_cast<size_t>(y)] = x;
                order.push_back(y);
            }
        }
        std::vector<IntPoly> out_poly(static_cast<size_t>(g_.vertex_count()));
        std::vector<IntPoly> in_poly(static_cast<size_t>(g_.vertex_count()));
        for (size_t i = order.size(); i-- > 0;) {
            Vertex x = order[i];
            IntPoly excl = IntPoly::constant(1);
            IntPoly incl = IntPoly{0, 1};
            for (Vertex y : g_.neighbors(x)) {
                if (!comp.test(y) || parent[static_cast<size_t>(y)] != x) continue;
                incl *= out_poly[static_cast<size_t>(y)];
                excl *= out_poly[static_cast<size_t>(y)] + in_poly[static_cast<size_t>(y)];
            }
            out_poly[static_cast<size_t>(x)] = std::move(excl);
            in_poly[static_cast<size_t>(x)] = std::move(incl);
        }
        return out_poly[static_cast<size_t>(root)] + in_poly[static_cast<size_t>(root)];
    }

    const Graph& g_;
    EngineOptions opts_;
    std::vector<Bits> closed_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<Bits, IntPoly, BitsHash> memo_;
};

IndependenceProfile make_profile(IntPoly poly, Method method) {
    if (poly.is_zero() || poly.coeff(0) != 1)
        throw std::logic_error("independence polynomial must have constant term 1");
    IndependenceProfile profile;
    profile.s = poly.coeffs();
    profile.alpha = poly.degree();
    profile.taylor = taylor_at_minus_one(poly);
    profile.poly = std::move(poly);
    profile.method = method;
    return profile;
}

}  // namespace

IndependenceProfile indpoly_bruteforce(const Graph& g, const EngineOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.bruteforce_cap || n > 63)
        throw GuardExceededError("brute force: " + std::to_string(n) +
                                 " vertices exceeds the cap of " +
                                 std::to_string(std::min(opts.bruteforce_cap, 63)));
    std::vector<std::uint64_t> nbr(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= std::uint64_t{1} << w;

    std::vector<unsigned long long> counts(static_cast<size_t>(n) + 1, 0);
    // Candidates hold only vertices above and non-adjacent to everything
    // chosen, so each independent set is visited exactly once.
    auto enumerate = [&](auto&& self, std::uint64_t candidates, int size) -> void {
        ++counts[static_cast<size_t>(size)];
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, candidates & ~nbr[static_cast<size_t>(v)], size + 1);
        }
    };
    const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    enumerate(enumerate, all, 0);

    std::vector<mpz_class> coeffs;
    coeffs.reserve(counts.size());
    for (unsigned long long c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
    return make_profile(IntPoly(std::move(coeffs)), Method::BruteForce);
}

IndependenceProfile indpoly_recursive(const Graph& g, const EngineOptions& opts) {
    RecEngine engine(g, opts);
    return make_profile(engine.subset_poly(Bits::full(g.vertex_count())), Method::Recursive);
}

IndependenceProfile indpoly_forest(const Graph& g) {
    if (!is_acyclic(g)) throw std::invalid_argument("forest engine: graph has a cycle");
    RecEngine engine(g, {});
    IntPoly result = IntPoly::constant(1);
    Bits todo = Bits::full(g.vertex_count());
    // Components of a forest are trees; no pivoting is ever needed.
    for (const VertexSet& comp : connected_components(g)) {
        Bits mask(g.vertex_count());
        for (Vertex v : comp) mask.set(v);
        result *= engine.tree_poly(mask);
    }
    return make_profile(std::move(result), Method::ForestDP);
}

IndependenceProfile independence_profile(const Graph& g, const EngineOptions& opts) {
    if (is_acyclic(g)) return indpoly_forest(g);
    return indpoly_recursive(g, opts);
}

IndependenceProfile zykov_indpoly(std::span<const IndependenceProfile> parts) {
    if (parts.empty()) throw std::invalid_argument("zykov_indpoly: need at least one profile");
    IntPoly sum;
    for (const IndependenceProfile& p : parts) sum += p.poly;
    sum -= IntPoly::constant(static_cast<long>(parts.size()) - 1);
    IndependenceProfile profile = make_profile(std::move(sum), Method::Composed);
    int alpha = 0;
    for (const IndependenceProfile& p : parts) alpha = std::max(alpha, p.alpha);
    if (profile.alpha != alpha)
        throw std::logic_error("zykov_indpoly: degree must be the largest input degree");
    return profile;
}

}  // namespace indpoly
