#include "indpoly/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "indpoly/errors.hpp"

namespace indpoly {

DegreeReport degree_report(const IndependenceProfile& profile) {
    const auto& c = profile.taylor.c;
    int k = 0;
    while (k < static_cast<int>(c.size()) && c[static_cast<size_t>(k)] == 0) ++k;
    if (k >= static_cast<int>(c.size()))
        throw std::logic_error("degree_report: every Taylor coefficient vanishes");
    DegreeReport report{profile.alpha, c[0], k, profile.alpha - k, -k,
                        assemble_h(profile.taylor, profile.alpha)};
    if (report.h_poly.degree() != report.deg_h)
        throw std::logic_error("degree_report: assembled h-polynomial degree != alpha - k");
    return report;
}

IntPoly h_direct(const IndependenceProfile& profile) {
    const int alpha = profile.alpha;
    std::vector<mpz_class> out(static_cast<size_t>(alpha) + 1, mpz_class(0));
    IntPoly pow = IntPoly::constant(1);  // (1-t)^(alpha-i), grown as i descends
    const IntPoly one_minus_t{1, -1};
    for (int i = alpha; i >= 0; --i) {
        const mpz_class& si = profile.s[static_cast<size_t>(i)];
        for (int j = 0; j <= pow.degree(); ++j)
            out[static_cast<size_t>(i + j)] += si * pow.coeff(j);
        if (i > 0) pow *= one_minus_t;
    }
    return IntPoly(std::move(out));
}

HilbertPrefix hilbert_prefix(const DegreeReport& report, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("hilbert_prefix: negative cutoff");
    std::vector<mpz_class> values(static_cast<size_t>(cutoff) + 1, mpz_class(0));
    for (int i = 0; i <= std::min(cutoff, report.h_poly.degree()); ++i)
        values[static_cast<size_t>(i)] = report.h_poly.coeff(i);
    for (int round = 0; round < report.alpha; ++round)
        for (int j = 1; j <= cutoff; ++j)
            values[static_cast<size_t>(j)] += values[static_cast<size_t>(j) - 1];
    return {std::move(values), cutoff};
}

mpz_class monomial_oracle(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("monomial_oracle: negative degree");
    const int n = g.vertex_count();
    if (n > 10 || d > 8)
        throw GuardExceededError("monomial_oracle: guarded at n <= 10, d <= 8");
    std::vector<unsigned> nbr(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= 1u << w;

    unsigned long long count = 0;
    // Assign an exponent to each vertex in turn; a positive exponent is legal
    // only when no neighbor already carries one.
    auto walk = [&](auto&& self, int v, int remaining, unsigned support) -> void {
        if (v == n) {
            count += remaining == 0;
            return;
        }
        self(self, v + 1, remaining, support);
        if ((nbr[static_cast<size_t>(v)] & support) == 0)
            for (int e = 1; e <= remaining; ++e)
                self(self, v + 1, remaining - e, support | (1u << v));
    };
    walk(walk, 0, d, 0);
    return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace indpoly
