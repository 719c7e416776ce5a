#include <doctest.h>

#include "fjacobi/jtable.hpp"

using namespace fjacobi;
using R = Rational;

TEST_SUITE("jtable") {
    TEST_CASE("closed-form near-diagonal entries") {
        const R w(5, 3);
        for (const long m : {-2L, 0L, 3L}) {
            CHECK(j_entry(m, m, w) == R(0));
            CHECK(j_entry(m, m + 1, w) == R(1));
            CHECK(j_entry(m, m + 2, w) == R(m + 1) / w);
            CHECK(j_entry(m, m + 3, w) == R((m + 1) * (m + 2)) / (w * w) - R(1));
        }
        CHECK_THROWS_AS(j_entry(0, 1, R(0)), std::invalid_argument);
    }

    TEST_CASE("parity across negative indices") {
        const R w(-3, 7);
        CHECK(j_entry(-2, 3, w) == j_entry(2, 3, w));
        CHECK(j_entry(-2, 3, w) == j_entry_recurrence(-2, 3, w));
        CHECK(j_entry(1, -4, w) == j_entry(1, 4, w));
        CHECK(j_entry(3, -5, w) == -j_entry(3, 5, w));
        CHECK(j_entry(4, 1, w) == -j_entry(1, 4, w));
    }

    TEST_CASE("recurrence oracle") {
        const R w(1, 2);
        CHECK(j_entry_recurrence(0, 1, w) == R(1));
        CHECK(j_entry_recurrence(0, 3, w) == R(2) / (w * w) - R(1));
        CHECK(j_entry_recurrence(5, 5, w) == R(0));
        for (long n = -8; n <= 8; ++n) CHECK(j_entry_recurrence(-1, n, w) == j_entry(-1, n, w));
    }

    TEST_CASE("F-form on its domain") {
        const R w(7, 4);
        CHECK(j_entry_f(3, 4, w) == R(1));  // empty F
        CHECK(j_entry_f(0, 2, w) == R(1) / w);
        CHECK(j_entry_f(1, 4, R(1)) == R(5));  // 3! * F(1/2, 1/3) = 6 * 5/6
        CHECK_THROWS_AS(j_entry_f(2, 2, w), std::invalid_argument);
        CHECK_THROWS_AS(j_entry_f(-1, 2, w), std::invalid_argument);
    }

    TEST_CASE("memo table matches the pure evaluators") {
        JTable<R> tab{R(1, 2)};
        CHECK(tab.at(0, 7) == j_entry(0, 7, R(1, 2)));
        CHECK(tab.at(0, -6) == j_entry(0, -6, R(1, 2)));
        CHECK(tab.at(0, 2) == j_entry(0, 2, R(1, 2)));  // cached interior
        CHECK(tab.at(3, 3) == R(0));

        bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for reduction(&& : ok)
#endif
        for (long i = 0; i < 60; ++i) {
            const long m = (i % 7) - 3;
            const long n = (i % 13) - 6;
            ok = ok && (tab.at(m, n) == j_entry(m, n, R(1, 2)));
        }
        CHECK(ok);
    }
}
