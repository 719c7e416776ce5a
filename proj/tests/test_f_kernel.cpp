#include <doctest.h>

#include "fjacobi/f_kernel.hpp"
#include "fjacobi/reference.hpp"

using namespace fjacobi;
using R = Rational;
using C = std::complex<double>;

TEST_SUITE("f-kernel") {
    TEST_CASE("finite values") {
        CHECK(f_finite(std::vector<R>{}) == R(1));
        CHECK(f_finite(std::vector<R>{R(4, 7)}) == R(1));
        const R a(2, 3), b(-3, 5);
        CHECK(f_finite(std::vector<R>{a, b}) == R(1) - a * b);
        CHECK(f_finite(std::vector<R>{R(1), R(1), R(1), R(1)}) == R(-1));
        CHECK(f_finite(std::vector<R>{R(1), R(1, 2)}) == R(1, 2));
        CHECK(f_finite(std::vector<R>{R(1), R(2), R(3)}) == R(1) - R(2) - R(6));
    }

    TEST_CASE("matches the direct alternating sum") {
        std::vector<R> x;
        for (long k = 1; k <= 10; ++k) {
            x.emplace_back((k % 2 == 0) ? R(-k, 2 * k + 1) : R(k, k + 2));
            CHECK(f_finite(x) == reference::f_direct_sum(x));
        }
    }

    TEST_CASE("truncation operator") {
        const std::vector<R> x{R(1), R(2), R(3)};
        CHECK(truncate_left(x, 1) == std::vector<R>{R(2), R(3)});
        CHECK(truncate_left(x, 0) == x);
        const std::vector<R> y{R(1), R(2), R(3), R(4)};
        CHECK(truncate_left(y, 2) == std::vector<R>{R(3), R(4)});
        CHECK(truncate_left(x, 5).empty());
    }

    TEST_CASE("truncation operator on infinite sequences") {
        // T of the nu = 0 Bessel sequence is the nu = 1 sequence.
        const auto shifted = truncate_left(bessel_tailseq(C(0.0), C(1.0)), 1);
        const auto direct = bessel_tailseq(C(1.0), C(1.0));
        for (long k = 1; k <= 6; ++k) CHECK(shifted.term(k) == direct.term(k));
        const auto a = f_infinite(shifted, 1e-6);
        const auto b = f_infinite(direct, 1e-6);
        CHECK(std::abs(a.value - b.value) <= a.error_bound + b.error_bound);
    }

    TEST_CASE("split identity") {
        const std::vector<R> ab{R(5, 2), R(1, 3)};
        CHECK(f_split(std::span<const R>(ab), 1) == R(1) - ab[0] * ab[1]);
        const std::vector<R> ones{R(1), R(1), R(1), R(1)};
        CHECK(f_split(std::span<const R>(ones), 2) == R(-1));
        const std::vector<R> x7{R(1, 2), R(-2, 3), R(3), R(0), R(5, 7), R(-1), R(2, 9)};
        for (long k = 1; k < 7; ++k) CHECK(f_split(std::span<const R>(x7), k) == f_finite(x7));
        CHECK_THROWS_AS(f_split(std::span<const R>(ab), 2), std::invalid_argument);
        CHECK_THROWS_AS(f_split(std::span<const R>(ab), 0), std::invalid_argument);
    }

    TEST_CASE("f_infinite: terminating sequence is exact") {
        const auto r = f_infinite(geometric_tail(C(0.0), C(0.9)), 1e-14);
        CHECK(r.value == C(1.0));
        CHECK(r.error_bound == 0.0);
    }

    TEST_CASE("f_infinite: Bessel-type tail within certified bound") {
        // F({1/k}) = J_0(2) = 0.22389077914123567...
        const double j0_2 = 0.22389077914123567;
        const auto r = f_infinite(bessel_tailseq(C(0.0), C(1.0)), 1e-5);
        CHECK(std::abs(r.value - j0_2) <= 1e-5);
        CHECK(std::abs(r.value - j0_2) <= r.error_bound + 1e-12);
    }

    TEST_CASE("f_infinite: geometric tail hits tight tolerances") {
        const auto r = f_infinite(geometric_tail(C(0.5), C(1.0)), 1e-12);
        const C direct = reference::f_geometric_series(C(0.5), C(1.0));
        CHECK(std::abs(r.value - direct) <= 1e-12);
    }

    TEST_CASE("f_infinite: unreachable tolerance is an error") {
        CHECK_THROWS_AS(f_infinite(bessel_tailseq(C(0.0), C(5.0)), 1e-12, 100000), ConvergenceError);
    }

    TEST_CASE("f_infinite: uncertified sequences are rejected") {
        // Pair sums that do not converge: the domain certificate is infinite.
        TailSeq harmonicish{[](long) { return C(1.0); },
                            [](long) { return std::numeric_limits<double>::infinity(); }};
        CHECK_THROWS_AS(f_infinite(harmonicish, 1e-6), std::invalid_argument);
    }
}
