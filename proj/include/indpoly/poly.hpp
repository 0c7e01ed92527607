#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace indpoly {

/// Degree reported for the zero polynomial. Kept negative so no code path can
/// mistake it for the degree of a nonzero constant.
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored low-to-high; the highest stored coefficient is
/// nonzero and the zero polynomial stores nothing.
class IntPoly {
public:
    IntPoly() = default;  // the zero polynomial
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class& value);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    /// Coefficient of t^i; zero outside the stored range.
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const;  // rejects the zero polynomial

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& other) { return *this = *this * other; }
    bool operator==(const IntPoly& other) const = default;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;

    /// Multiply by t^k.
    IntPoly shifted_up(int k) const;

    /// Canonical rendering, low-to-high: "1 + 3t + t^2"; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Expansion of a polynomial about -1: c[j] = p^(j)(-1)/j!, so that
/// p(t) = sum_j c[j] (1+t)^j. Integral for integer p; length is degree(p)+1.
struct TaylorAtMinusOne {
    std::vector<mpz_class> c;
};

/// Coefficient shift p(u-1), computed by repeated synthetic division.
/// The zero polynomial carries no expansion data and is rejected.
TaylorAtMinusOne taylor_at_minus_one(const IntPoly& p);

/// h(t) = sum_i c[i] (1-t)^(alpha-i). Requires c.size() == alpha+1.
IntPoly assemble_h(const TaylorAtMinusOne& taylor, int alpha);

}  // namespace indpoly
