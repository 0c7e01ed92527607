#pragma once

#include "indpoly/engine.hpp"

namespace indpoly {

/// Degree data of the h-polynomial of the edge ideal quotient.
struct DegreeReport {
    int alpha;                 // independence number = Krull dimension
    mpz_class i_at_minus_one;  // I(G,-1)
    int k;                     // least j with taylor c[j] != 0
    int deg_h;                 // = alpha - k, asserted against h_poly
    int a_invariant;           // deg_h - alpha, always <= 0
    IntPoly h_poly;
};

/// Reads k off the Taylor coefficients and assembles h; the assembled degree
/// must land on alpha - k or the call fails hard.
DegreeReport degree_report(const IndependenceProfile& profile);

/// h(t) = sum_i s_i t^i (1-t)^(alpha-i): the f-vector route, used as an
/// independent cross-check of the Taylor assembly.
IntPoly h_direct(const IndependenceProfile& profile);

/// Hilbert function values HF(0..cutoff).
struct HilbertPrefix {
    std::vector<mpz_class> values;
    int cutoff;
};

/// Power series of h_poly/(1-t)^alpha, by iterated prefix sums.
HilbertPrefix hilbert_prefix(const DegreeReport& report, int cutoff);

/// Count of degree-d monomials with independent support, by direct
/// enumeration of exponent vectors. Guarded: n <= 10, d <= 8.
mpz_class monomial_oracle(const Graph& g, int d);

}  // namespace indpoly
