#pragma once

#include "alphacalc/rational.hpp"

namespace alphacalc {

/// Gamma function for real argument, Lanczos approximation (13-term,
/// g = 6.024680040776729583740234375) with reflection for x < 0.5.
/// Relative error <= 1e-13 on [-20, 30] away from the poles.
///
/// Pole detection for raw reals uses |x - round(x)| < 1e-15 (heuristic);
/// throws PoleError at nonpositive integers.
double gamma_eval(double x);

/// Same evaluator, exact pole test on the rational argument.
double gamma_eval(const Rational& x);

/// True when x is a nonpositive integer under the raw-real heuristic.
bool is_gamma_pole(double x);

/// sin(pi*x) with exact integer-part reduction (accurate near integers).
double sin_pi(double x);

} // namespace alphacalc
