#include <doctest.h>

#include <stdexcept>

#include "fjacobi/verify.hpp"

using namespace fjacobi;

TEST_SUITE("verify") {
    TEST_CASE("suite registry") {
        CHECK(verify::is_suite("all"));
        CHECK(verify::is_suite("f-identities"));
        CHECK(verify::is_suite("spectrum"));
        CHECK(!verify::is_suite("bogus"));
        CHECK_THROWS_AS(verify::run_suite("bogus", 10, 1), std::invalid_argument);
    }

    TEST_CASE("reports are deterministic per seed") {
        const auto a = verify::run_suite("f-identities", 40, 7);
        const auto b = verify::run_suite("f-identities", 40, 7);
        CHECK(verify::report_json(a) == verify::report_json(b));
        const auto c = verify::run_suite("f-identities", 40, 8);
        CHECK(verify::report_json(a) != verify::report_json(c));
    }

    TEST_CASE("report serialization shape") {
        verify::RunReport r;
        r.suite = "demo";
        r.cases = 3;
        r.failures = 0;
        r.max_error = 0.5;
        r.seed = 9;
        r.wall_time_ms = 1234;  // must not leak into the canonical forms
        const auto j = verify::report_json(r);
        CHECK(j == R"({"cases":3,"failures":0,"max_error":0.5,"seed":9,"suite":"demo"})");
        CHECK(verify::report_csv(r) == "suite,cases,failures,max_error,seed\ndemo,3,0,0.5,9\n");
    }

    TEST_CASE("exact suites pass at small case counts") {
        for (const char* name : {"f-identities", "determinants"}) {
            const auto r = verify::run_suite(name, 25, 3);
            CHECK(r.failures == 0);
            CHECK(r.cases > 0);
            CHECK(r.max_error == 0.0);
        }
    }

    TEST_CASE("charpoly suite passes") {
        const auto r = verify::run_suite("charpoly", 50, 5);
        CHECK(r.failures == 0);
    }
}
