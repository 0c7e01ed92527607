#include <random>

#include "doctest.h"
#include "indpoly/poly.hpp"
#include "support.hpp"

using indpoly::IntPoly;
using indpoly::TaylorAtMinusOne;

TEST_CASE("arithmetic basics") {
    IntPoly p{1, 2};  // 1 + 2t
    CHECK(p * p == IntPoly{1, 4, 4});
    CHECK(IntPoly{1, 4, 3}.derivative() == IntPoly{4, 6});
    CHECK(IntPoly{1, 3, 1}.eval(-1) == -1);
    CHECK(IntPoly{1, 2} + IntPoly{0, -2, 5} == IntPoly{1, 0, 5});
    CHECK(IntPoly{3, 1} - IntPoly{3, 1} == IntPoly{});
}

TEST_CASE("zero polynomial sentinel") {
    IntPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == indpoly::kZeroPolyDegree);
    CHECK(zero.degree() < 0);
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly::constant(0).is_zero());
    CHECK(zero.eval(7) == 0);
    CHECK((zero * IntPoly{1, 2}).is_zero());
    CHECK_THROWS_AS(zero.leading(), std::logic_error);
}

TEST_CASE("rendering") {
    CHECK(IntPoly{1, 3, 1}.to_string() == "1 + 3t + t^2");
    CHECK(IntPoly{1, 1, -1}.to_string() == "1 + t - t^2");
    CHECK(IntPoly{-1, 2}.to_string() == "-1 + 2t");
    CHECK(IntPoly{0, 0, 5}.to_string() == "5t^2");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{1}.to_string() == "1");
}

TEST_CASE("taylor expansion about -1") {
    CHECK(indpoly::taylor_at_minus_one(IntPoly{1, 2}).c == std::vector<mpz_class>{-1, 2});
    CHECK(indpoly::taylor_at_minus_one(IntPoly{1, 3, 3, 1}).c ==
          std::vector<mpz_class>{0, 0, 0, 1});
    // I(P_4,t) = 1 + 4t + 3t^2: value 0, first derivative -2, top s_2 = 3.
    CHECK(indpoly::taylor_at_minus_one(IntPoly{1, 4, 3}).c == std::vector<mpz_class>{0, -2, 3});
    CHECK_THROWS_AS(indpoly::taylor_at_minus_one(IntPoly{}), std::invalid_argument);
}

TEST_CASE("assemble_h") {
    CHECK(indpoly::assemble_h({{0, -2, 3}}, 2) == IntPoly{1, 2});
    CHECK(indpoly::assemble_h({{-1, 2}}, 1) == IntPoly{1, 1});
    CHECK(indpoly::assemble_h({{1}}, 0) == IntPoly{1});
    CHECK_THROWS_AS(indpoly::assemble_h({{1, 2}}, 2), std::invalid_argument);
}

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree) {
    const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<mpz_class> coeffs;
    for (int i = 0; i <= degree; ++i) {
        // Coefficients spanning the full 64-bit range plus a sign.
        mpz_class c(static_cast<unsigned long>(rng()));
        if (rng() & 1) c = -c;
        coeffs.push_back(std::move(c));
    }
    if (coeffs.back() == 0) coeffs.back() = 1;
    return IntPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("taylor round trip and derivative consistency on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly p = random_poly(rng, 40);
        TaylorAtMinusOne taylor = indpoly::taylor_at_minus_one(p);
        REQUIRE(static_cast<int>(taylor.c.size()) == p.degree() + 1);
        CHECK(testsupport::from_taylor(taylor) == p);
        CHECK(taylor.c.front() == p.eval(-1));
        CHECK(taylor.c.back() == p.leading());

        // j! c[j] = (d/dt)^j p at -1.
        IntPoly d = p;
        mpz_class factorial(1);
        for (int j = 0; j <= p.degree(); ++j) {
            CHECK(taylor.c[static_cast<size_t>(j)] * factorial == d.eval(-1));
            d = d.derivative();
            factorial *= j + 1;
        }
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly a = random_poly(rng, 12), b = random_poly(rng, 12), c = random_poly(rng, 12);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}
