#pragma once

#include "alphacalc/alpha_ops.hpp"

namespace alphacalc {

/// Truncated alpha-exponent: sum_{k=0}^{N} x^(k alpha) / (alpha^k k!) with
/// exact rational coefficients and truncation bound (N+1) alpha. It is the
/// eigenfunction of the alpha-derivative with eigenvalue 1.
struct AlphaExpSeries {
    AlphaOrder alpha;
    unsigned retained; // number of retained terms N
    PuiseuxSeries series;
};

/// Builds the truncated alpha-exponent series (N >= 1).
AlphaExpSeries alpha_exp_series(const AlphaOrder& alpha, unsigned N);

/// Closed form exp(z^alpha / alpha) on the principal branch.
/// z = 0 returns 1 exactly; z < 0 raises DomainError.
double alpha_exp_eval(double z, const AlphaOrder& alpha);

/// alpha_deriv(E) - E on the window [0, N alpha): exactly the zero series
/// by termwise telescoping (N >= 2).
PuiseuxSeries ode_residual(const AlphaOrder& alpha, unsigned N);

/// E(z1 + z2) - E(z1) E(z2); vanishes identically only at alpha = 1.
double semigroup_gap(double z1, double z2, const AlphaOrder& alpha);

} // namespace alphacalc
