#pragma once

#include <utility>
#include <vector>

#include "alphacalc/alpha_ops.hpp"

namespace alphacalc {

/// Amplitude/action data for the split equations: all series exact-domain,
/// time derivatives supplied by the caller (no time stepping).
struct MadelungState {
    PuiseuxSeries R;
    PuiseuxSeries S;
    PuiseuxSeries R_t;
    PuiseuxSeries S_t;
    PuiseuxSeries V;
    Rational hbar;   // > 0
    Rational Dalpha; // diffusion-like constant
    AlphaOrder alpha;
};

/// The two residual series of the split, with their truncation windows.
struct SplitResiduals {
    PuiseuxSeries continuity;
    PuiseuxSeries hamilton_jacobi;
};

/// Fractional quantum potential
///   Q_alpha = -Dalpha hbar^2 d_alpha^2(R) / R,
/// computed with the series reciprocal and truncated to T. R with zero
/// constant term is allowed; the output then has negative exponents.
PuiseuxSeries quantum_potential(const PuiseuxSeries& R, const AlphaOrder& alpha,
                                const Rational& Dalpha, const Rational& hbar,
                                const Rational& T);

/// Amplitude-transport residual of the split:
///   R_t + 2 Dalpha (d_a R)(d_a S) + Dalpha R d_a^2 S.
/// Zero iff the state satisfies the transport equation. This is the form
/// whose classical limit (alpha = 1, Dalpha = 1/2m) matches the standard
/// continuity equation.
PuiseuxSeries continuity_residual(const MadelungState& state);

/// Hamilton-Jacobi-type residual of the split:
///   (1/alpha) S_t R + V R + Dalpha hbar^2 d_a^2 R - R (d_a S)^2.
PuiseuxSeries hj_residual(const MadelungState& state);

SplitResiduals split_residuals(const MadelungState& state);

/// Machine-check of the Madelung-split derivation. Recomputes the ansatz
/// psi = R * E_alpha(iS/hbar) through the formal rewrite rules
///   d_alpha(c E) = (d_alpha c) E + c (i/hbar)(d_alpha S) E
///   dt(E)        = (i S_t / (alpha hbar)) E
/// collects the E-coefficient of both sides of the candidate equation
///   i hbar dt(psi) = Dalpha hbar^2 d_alpha^2(psi) + V psi,
/// subtracts i*hbar*(transport residual) - (Hamilton-Jacobi residual) of
/// the recomputed split, and returns the (imaginary, real) parts of what
/// remains. Both are exactly zero for every input.
///
/// Note the recomputed split reads
///   R_t = +2 Dalpha (d_a R)(d_a S) + Dalpha R d_a^2 S
///   -(1/alpha) S_t R = V R + Dalpha hbar^2 d_a^2 R - Dalpha R (d_a S)^2
/// which differs from continuity_residual / hj_residual in the sign of
/// the transport flux terms and in the Dalpha factor on (d_a S)^2 (only
/// the residual-operator convention has the classical limit). Two pinned
/// identities relate the routes, with Delta the E-coefficient difference:
///   Im(Delta)/hbar + continuity_residual = 2 R_t
///   Re(Delta)      + hj_residual         = (Dalpha - 1) R (d_a S)^2.
std::pair<PuiseuxSeries, PuiseuxSeries>
derivation_audit(const PuiseuxSeries& R, const PuiseuxSeries& S,
                 const PuiseuxSeries& S_t, const PuiseuxSeries& R_t,
                 const AlphaOrder& alpha, const Rational& hbar,
                 const Rational& Dalpha, const PuiseuxSeries& V);

/// Same audit with Dalpha = 1/3 and V = 0 (any values work; a non-unit
/// default keeps coefficient slips visible).
std::pair<PuiseuxSeries, PuiseuxSeries>
derivation_audit(const PuiseuxSeries& R, const PuiseuxSeries& S,
                 const PuiseuxSeries& S_t, const PuiseuxSeries& R_t,
                 const AlphaOrder& alpha, const Rational& hbar);

/// Classical (alpha = 1) Madelung residuals, the independent oracle for
/// the classical limit:
///   (S_t + S'^2/(2m) + V - hbar^2 R'' / (2m R),
///    dt(R^2) + (1/m) (R^2 S')')
/// with dt(R^2) = 2 R R_t and ordinary derivatives throughout. T bounds
/// the reciprocal expansion.
std::pair<PuiseuxSeries, PuiseuxSeries>
classical_consistency(const PuiseuxSeries& R, const PuiseuxSeries& S,
                      const PuiseuxSeries& R_t, const PuiseuxSeries& S_t,
                      const PuiseuxSeries& V, const Rational& m,
                      const Rational& hbar, const Rational& T = Rational(16));

struct GridSpec {
    double start;
    double stop;
    double step;
};

/// Samples Q_alpha on the grid (inclusive of stop within half a step).
/// Series evaluation is trusted only within the convergence radius of the
/// reciprocal; callers see the truncation order via quantum_potential.
std::vector<std::pair<double, double>>
sample_qpotential(const PuiseuxSeries& R, const AlphaOrder& alpha,
                  const Rational& Dalpha, const Rational& hbar,
                  const Rational& T, const GridSpec& grid);

} // namespace alphacalc
