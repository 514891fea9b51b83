#pragma once

#include <string>

#include "alphacalc/puiseux.hpp"

namespace alphacalc {

/// Source text for a Puiseux polynomial, e.g. "3*x^(3/2) - 2*x^(-1/3)".
using SeriesText = std::string;

/// Parses a sum of monomial terms per the grammar:
///
///   series  = ws term { ws ("+"|"-") ws term } ws ;
///   term    = coeff [ "*" mono ] | mono ;
///   mono    = "x" [ "^" exponent ] ;
///   exponent= integer | "(" ws signed-int [ ws "/" ws integer ] ws ")" ;
///   coeff   = rationalOrDecimal | "(" complex ")" ;
///   complex = rationalOrDecimal [ ("+"|"-") rationalOrDecimal "*" "i" ] ;
///
/// Unary minus on the leading term is accepted. Like terms are combined;
/// the result carries no truncation bound. Decimal coefficients are
/// converted exactly from their base-10 expansion in either domain.
/// Throws SyntaxError with byte offset and expected-token set.
PuiseuxSeries parse_series(const SeriesText& text, Domain domain);

/// Canonical form: ascending exponents, explicit rational coefficients,
/// fractional exponents parenthesized. parse_series(format_series(f))
/// round-trips exactly for finite exact series.
SeriesText format_series(const PuiseuxSeries& f);

/// Accepts "p/q", "p", and decimal literals (converted exactly).
Rational parse_rational(const std::string& text);

} // namespace alphacalc
