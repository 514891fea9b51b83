#pragma once

#include "alphacalc/parser.hpp"

namespace alphacalc::testing {

inline PuiseuxSeries exact_series(const char* expr) {
    return parse_series(expr, Domain::exact);
}

inline PuiseuxSeries approx_series(const char* expr) {
    return parse_series(expr, Domain::approx);
}

inline Rational rat(const char* text) {
    return Rational::from_string(text);
}

inline Coefficient exact_coeff(long num, long den = 1) {
    return Coefficient(ExactComplex{Rational(num, den)});
}

inline PuiseuxSeries exact_zero() {
    return PuiseuxSeries::zero(Domain::exact);
}

} // namespace alphacalc::testing
