#include <doctest.h>

#include "alphacalc/check_suites.hpp"

using namespace alphacalc;

TEST_CASE("all suites pass on seeded runs") {
    for (const std::string& name : known_suites()) {
        SuiteReport r = check_suite(name, 25, 7);
        CHECK(r.ok());
        CHECK(r.cases == 25);
        CHECK(r.counterexample.empty());
        if (!r.ok())
            FAIL(name << ": " << format_report(r));
    }
}

TEST_CASE("suite errors") {
    CHECK_THROWS_AS(check_suite("nonsense", 1, 1), UnknownSuiteError);
    CHECK_THROWS_AS(check_suite("leibnitz", 0, 1), DomainError);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    for (const std::string& name : known_suites()) {
        std::string a = format_report(check_suite(name, 10, 42));
        std::string b = format_report(check_suite(name, 10, 42));
        CHECK(a == b);
    }
}

TEST_CASE("rl-gap reports the canonical witness") {
    SuiteReport r = check_suite("rl-gap", 1, 0);
    CHECK(r.ok());
    CHECK(r.detail.find("-0.75225277") != std::string::npos);
}
