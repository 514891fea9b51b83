#pragma once

namespace alphacalc::testing {

/// High-precision reference gamma, independent of the Lanczos path: the
/// de-Moivre/Stirling log-gamma series (Bernoulli terms through B_40) at
/// x + 50, divided back down through the 50-factor recurrence product.
/// Carried out in 256-bit MPFR; truncation error is far below 1e-40
/// relative on [-20, 30], so the returned double is correctly rounded.
double oracle_gamma(double x);

/// Relative deviation |value - oracle| / |oracle|, computed in MPFR.
double oracle_gamma_rel_err(double x, double value);

/// Relative deviation of the oracle itself against mpfr_gamma at 256 bits
/// (used once to validate the oracle).
double oracle_self_check(double x);

} // namespace alphacalc::testing
