#include "indpoly/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace indpoly {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const mpz_class& value) {
    IntPoly p;
    if (value != 0) p.coeffs_.push_back(value);
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading(): zero polynomial");
    return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpz_class(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpz_class(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly{};
    std::vector<mpz_class> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPoly(std::move(out));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPoly{};
    std::vector<mpz_class> out(coeffs_.size() + static_cast<size_t>(k), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(k)] = coeffs_[i];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const mpz_class& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i == 1)
            out << "t";
        else if (i >= 2)
            out << "t^" << i;
    }
    return out.str();
}

TaylorAtMinusOne taylor_at_minus_one(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("taylor_at_minus_one: zero polynomial has no expansion");
    std::vector<mpz_class> a = p.coeffs();
    const int n = static_cast<int>(a.size()) - 1;
    // Synthetic division by (t+1), repeated; after round i, a[i] is final.
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) a[static_cast<size_t>(j)] -= a[static_cast<size_t>(j) + 1];
    return TaylorAtMinusOne{std::move(a)};
}

IntPoly assemble_h(const TaylorAtMinusOne& taylor, int alpha) {
    if (alpha < 0 || static_cast<int>(taylor.c.size()) != alpha + 1)
        throw std::invalid_argument("assemble_h: need exactly alpha+1 coefficients");
    const IntPoly one_minus_t{1, -1};
    // Horner in (1-t): sum_i c[i] (1-t)^(alpha-i), powers falling with i.
    IntPoly acc = IntPoly::constant(taylor.c[0]);
    for (int i = 1; i <= alpha; ++i) {
        acc = acc * one_minus_t;
        acc += IntPoly::constant(taylor.c[static_cast<size_t>(i)]);
    }
    return acc;
}

}  // namespace indpoly
