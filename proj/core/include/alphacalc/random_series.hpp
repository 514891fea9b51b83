#pragma once

#include <cstdint>
#include <random>

#include "alphacalc/alpha_ops.hpp"

namespace alphacalc {

/// Seeded generator for the documented law-check distribution: exact series
/// with at most 8 terms, exponent numerators in [-6, 12], denominators up
/// to 6, and rational coefficients p/q with |p|, q <= 20.
///
/// Draws come from mt19937_64 reduced by modulo, so a fixed seed yields the
/// same stream on every platform (the slight modulo bias is irrelevant for
/// law checking).
class SeriesGen {
public:
    explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi); // inclusive bounds
    Rational coefficient();         // nonzero p/q
    Rational exponent();
    Rational exponent_nonnegative();

    /// alpha = m/n; with_classical admits m = n (alpha = 1).
    AlphaOrder alpha(bool with_classical = true);
    AlphaOrder alpha_fractional() { return alpha(false); }

    /// Exact series, 1..max_terms real rational terms, no truncation bound.
    PuiseuxSeries series(int max_terms = 8);
    /// Same with all exponents >= 0.
    PuiseuxSeries series_nonnegative(int max_terms = 8);
    /// Same avoiding one forbidden exponent (integral pole).
    PuiseuxSeries series_avoiding(const Rational& forbidden, int max_terms = 8);

    /// Random polynomial in `arity` variables, total degree <= max_degree.
    MultiPoly polynomial(std::size_t arity, unsigned max_degree);

private:
    std::mt19937_64 rng_;
};

} // namespace alphacalc
