#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphacalc/puiseux.hpp"

namespace alphacalc {

/// Outcome of one law-check suite run. Deterministic for a fixed seed.
struct SuiteReport {
    std::string name;
    unsigned cases = 0;
    unsigned passed = 0;
    std::string detail;         // one-line suite description
    std::string counterexample; // first failing case, empty when clean

    bool ok() const { return passed == cases; }
};

/// Runs one of the named suites:
///   leibnitz, chain, commute, fundamental, rl-gap, exp-ode, madelung-audit.
/// Throws UnknownSuiteError for anything else; DomainError for cases < 1.
SuiteReport check_suite(const std::string& name, unsigned cases,
                        std::uint64_t seed);

const std::vector<std::string>& known_suites();

/// Report text, one or two lines, stable across runs for a fixed seed.
std::string format_report(const SuiteReport& r);

} // namespace alphacalc
