#include <doctest.h>

#include "fjacobi/contfrac.hpp"
#include "fjacobi/reference.hpp"

using namespace fjacobi;
using R = Rational;
using C = std::complex<double>;

TEST_SUITE("contfrac") {
    TEST_CASE("initial conditions and small convergents") {
        const std::vector<R> x{R(1, 2), R(1, 3), R(2, 5)};
        const auto cv = convergents(x, 5);
        CHECK(cv[0].p == R(0));
        CHECK(cv[0].q == R(1));
        CHECK(cv[1].p == R(1));
        CHECK(cv[1].q == R(1));
        CHECK(cv[2].p == R(1));
        CHECK(cv[2].q == R(1) - x[0] * x[1]);
        // P_k = F(x_2..x_k), Q_k = F(x_1..x_k).
        CHECK(cv[3].p == f_finite(truncate_left(x, 1)));
        CHECK(cv[3].q == f_finite(x));
        // Stabilization exactly at k = length.
        CHECK(cv[4].p == cv[3].p);
        CHECK(cv[4].q == cv[3].q);
        CHECK(cv[5].q == cv[3].q);
    }

    TEST_CASE("both sequences satisfy the three-term recursion") {
        const std::vector<R> x{R(2, 3), R(-1, 2), R(4), R(0), R(1, 5), R(7, 6)};
        const long kmax = 9;  // runs past the end, entries become zero
        const auto cv = convergents(x, kmax);
        auto at = [&](long k) -> R { return k <= static_cast<long>(x.size()) && k >= 1 ? x[k - 1] : R(0); };
        for (long k = 1; k + 1 <= kmax; ++k) {
            CHECK(cv[k + 1].p == cv[k].p - at(k) * at(k + 1) * cv[k - 1].p);
            CHECK(cv[k + 1].q == cv[k].q - at(k) * at(k + 1) * cv[k - 1].q);
        }
    }

    TEST_CASE("finite limit equals F(Tx)/F(x)") {
        const std::vector<R> x{R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(1, 2)};
        const auto cv = convergents(x, static_cast<long>(x.size()));
        const R q = f_finite(x);
        REQUIRE(!is_zero(q));
        CHECK(cv.back().p / cv.back().q == f_finite(truncate_left(x, 1)) / q);
    }

    TEST_CASE("cf_limit: terminating fraction") {
        const auto r = cf_limit(geometric_tail(C(0.0), C(0.3)), 1e-14);
        CHECK(r.value == C(1.0));
    }

    TEST_CASE("convergents of an infinite sequence approach the limit") {
        const auto tail = geometric_tail(C(0.5), C(0.5));
        const auto cv = convergents(tail, 12);
        REQUIRE(cv.size() == 13);
        CHECK(cv[0].p == C(0.0));
        CHECK(cv[1].q == C(1.0));
        const auto lim = cf_limit(tail, 1e-15);
        CHECK(std::abs(cv.back().p / cv.back().q - lim.value) < 1e-10);
    }

    TEST_CASE("cf_limit: Bessel ratio J_1(2)/J_0(2)") {
        const auto lim = cf_limit(bessel_tailseq(C(0.0), C(1.0)), 1e-15);
        const C want = reference::bessel_j_series(C(1.0), C(1.0)) / reference::bessel_j_series(C(0.0), C(1.0));
        // F(Tx)/F(x) = (nu+1)/w * J_{nu+1}(2w)/J_nu(2w) at nu = 0, w = 1.
        CHECK(std::abs(lim.value - want) <= 1e-12);
    }

    TEST_CASE("cf_limit: q-hypergeometric ratio") {
        const double q = 0.25, z = 0.5;
        const C c = std::sqrt(C(-z / std::sqrt(q)));
        const auto lim = cf_limit(geometric_tail(C(std::sqrt(q)), c), 1e-15);
        const C want =
            reference::phi01_direct(C(q), C(q * z)) / reference::phi01_direct(C(q), C(z));
        CHECK(std::abs(lim.value - want) <= 1e-12);
    }

    TEST_CASE("cf_limit: vanishing denominator is reported") {
        // x = (1, 1, 0, 0, ...) has F(x) = 0, so Q_2 vanishes.
        TailSeq bad{[](long k) { return k <= 2 ? C(1.0) : C(0.0); },
                    [](long n) { return n <= 1 ? 1.0 : 0.0; }};
        CHECK_THROWS_AS(cf_limit(bad, 1e-14), ConvergenceError);
    }
}
