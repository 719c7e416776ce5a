#include <doctest.h>

#include "fjacobi/combinatorics.hpp"
#include "fjacobi/poly.hpp"
#include "fjacobi/rational.hpp"

using namespace fjacobi;
using R = Rational;

TEST_SUITE("numeric-kernel") {
    TEST_CASE("poly evaluation") {
        Poly<R> p({R(1), R(0), R(-1)});  // 1 - z^2
        CHECK(p.eval(R(2)) == R(-3));
        CHECK(Poly<R>::zero().eval(R(5)) == R(0));
        // chi_red for d=1, w=1 has coefficients [3, 0, -1]; chi_red(1) = 2.
        Poly<R> red({R(3), R(0), R(-1)}, Parity::even);
        CHECK(red.eval(R(1)) == R(2));
    }

    TEST_CASE("newton binomial") {
        CHECK(newton_binom(R(5), 2) == R(10));
        CHECK(newton_binom(R(-1), 3) == R(-1));
        CHECK(newton_binom(R(7, 3), 0) == R(1));
        CHECK(newton_binom(R(3), 5) == R(0));  // integer z in [0, n-1]
        CHECK(binom_z_int(-1, 3) == BigInt(-1));
        CHECK(binom_z_int(3, 5) == BigInt(0));
        // Pascal rule, a few spot cases.
        for (const R& z : {R(9, 4), R(-13, 6), R(0)})
            for (long n : {1L, 2L, 11L})
                CHECK(newton_binom(z, n) == newton_binom(z - 1, n) + newton_binom(z - 1, n - 1));
    }

    TEST_CASE("gamma ratio as a finite product") {
        CHECK(gamma_ratio(R(1), 3, 1) == R(6));
        CHECK(gamma_ratio(R(22, 7), 4, 4) == R(1));
        CHECK(gamma_ratio(R(0), 2, 0) == R(0));
        CHECK(gamma_ratio(R(-3), 2, -1) == R(-24));  // (-4)(-3)(-2)
        CHECK_THROWS_AS(gamma_ratio(R(1), 1, 2), std::invalid_argument);
    }

    TEST_CASE("poly parity validation") {
        CHECK_THROWS_AS(Poly<R>({R(1), R(2)}, Parity::even), std::invalid_argument);
        CHECK_THROWS_AS(Poly<R>({R(1), R(0), R(2)}, Parity::odd), std::invalid_argument);
        CHECK(Poly<R>({R(0), R(4)}, Parity::odd).degree() == 1);
        CHECK(Poly<R>({R(1), R(0), R(0)}).degree() == 0);
        CHECK(Poly<R>({R(0), R(1), R(0), R(-2)}).detect_parity() == Parity::odd);
    }

    TEST_CASE("interpolation is lossless") {
        std::vector<R> xs = {R(0), R(1), R(2), R(7, 2)};
        Poly<R> p({R(1, 3), R(-2), R(0), R(5, 7)});
        std::vector<R> ys;
        for (const auto& x : xs) ys.push_back(p.eval(x));
        CHECK(interpolate(std::span<const R>(xs), std::span<const R>(ys)) == p);
    }

    TEST_CASE("rational parsing and printing") {
        CHECK(parse_rational("7/3") == R(7, 3));
        CHECK(parse_rational("-0.25") == R(-1, 4));
        CHECK(parse_rational("1e-3") == R(1, 1000));
        CHECK(parse_rational("2.5e2") == R(250));
        CHECK(parse_rational("-6/4") == R(-3, 2));
        CHECK(to_string(R(-3, 2)) == "-3/2");
        CHECK(to_string(R(5)) == "5");
        CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    }

    TEST_CASE("exact arithmetic round-trips") {
        const R a(-35, 21);  // reduces to -5/3
        CHECK(numerator(a) == BigInt(-5));
        CHECK(denominator(a) == BigInt(3));
        CHECK(a * (R(1) / a) == R(1));
        CHECK(pow_int(R(2, 3), -2) == R(9, 4));
        CHECK_THROWS_AS(pow_int(R(0), -1), std::domain_error);
    }
}
