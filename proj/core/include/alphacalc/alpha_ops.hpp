#pragma once

#include <utility>
#include <vector>

#include "alphacalc/multipoly.hpp"
#include "alphacalc/puiseux.hpp"

namespace alphacalc {

/// Fractional order alpha = m/n with 0 < alpha <= 1 (alpha = 1 is the
/// classical limit).
class AlphaOrder {
public:
    explicit AlphaOrder(Rational v);
    AlphaOrder(long num, long den) : AlphaOrder(Rational(num, den)) {}

    const Rational& value() const { return v_; }
    bool is_classical() const { return v_ == Rational(1); }

private:
    Rational v_;
};

/// The two-term-Leibnitz fractional derivative: termwise
/// c x^beta -> c * beta * x^(beta - alpha), so the x^0 term is annihilated.
/// The truncation bound shifts by -alpha; the lattice widens to include
/// the denominator of alpha.
PuiseuxSeries alpha_deriv(const PuiseuxSeries& f, const AlphaOrder& alpha);

/// m-fold alpha-derivative (m = 0 returns f unchanged).
PuiseuxSeries alpha_deriv_iter(const PuiseuxSeries& f, const AlphaOrder& alpha,
                               unsigned m);

/// Termwise antiderivative c x^beta -> c x^(beta+alpha) / (beta+alpha).
/// Throws IntegralPoleError when a term has beta == -alpha.
PuiseuxSeries alpha_integral(const PuiseuxSeries& f, const AlphaOrder& alpha);

/// (deriv(integral(f)) - f, integral(deriv(f)) - f). The first component
/// is exactly zero; the second equals minus the constant term of f, the
/// kernel of the alpha-derivative.
std::pair<PuiseuxSeries, PuiseuxSeries>
fundamental_check(const PuiseuxSeries& f, const AlphaOrder& alpha);

/// Riemann-Liouville monomial coefficient Gamma(beta+1)/Gamma(beta-order+1).
/// A gamma pole in the denominator yields 0 (the 1/Gamma convention).
/// Requires beta > -1.
double rl_coefficient(const Rational& beta, const Rational& order);

/// RL coefficient of x^beta under order alpha, with its inputs retained.
struct RLCoefficient {
    Rational beta;
    Rational alpha;
    double value;
};

RLCoefficient rl_deriv_monomial(const Rational& beta, const AlphaOrder& alpha);

/// Termwise RL action on an approx-domain series for an arbitrary rational
/// order (negative orders are the RL integrals appearing in the binomial
/// expansion). Every exponent must exceed -1.
PuiseuxSeries rl_apply(const PuiseuxSeries& f, const Rational& order);

PuiseuxSeries rl_deriv_series(const PuiseuxSeries& f, const AlphaOrder& alpha);

/// Generalized binomial Gamma(a+1) / (Gamma(a-n+1) Gamma(n+1)), with the
/// same denominator-pole convention as rl_coefficient.
double rl_binomial(const Rational& a, unsigned n);

/// d_alpha(f g) - g d_alpha(f) - f d_alpha(g) in the exact domain;
/// exactly zero on the valid truncation window.
PuiseuxSeries leibnitz_residual(const PuiseuxSeries& f, const PuiseuxSeries& g,
                                const AlphaOrder& alpha);

/// Truncated RL binomial expansion
///   sum_{n=0}^{N} binom(alpha, n) RL^(alpha-n)[f] g^(n)
/// for a polynomial g in nonnegative integer powers; terminates and equals
/// the direct RL derivative of f*g once N passes deg(g).
PuiseuxSeries rl_leibnitz_partial_sum(const PuiseuxSeries& f,
                                      const PuiseuxSeries& g,
                                      const AlphaOrder& alpha, unsigned N);

/// RL^alpha(f g) - g RL^alpha(f) - f RL^alpha(g): the two-term rule fails
/// for the RL operator, so this is generically nonzero.
PuiseuxSeries rl_two_term_gap(const PuiseuxSeries& f, const PuiseuxSeries& g,
                              const AlphaOrder& alpha);

/// Chain rule: sum_k dF/du_k (g) * d_alpha(g_k).
PuiseuxSeries chain_rule_apply(const MultiPoly& F,
                               const std::vector<PuiseuxSeries>& g,
                               const AlphaOrder& alpha);

/// The functional equation C(beta-eps, a) + C(eps, a) = C(beta, a) for
/// C(beta, a) = A(a) * beta with A == 1: returns both sides.
std::pair<Rational, Rational>
coefficient_rule_check(const Rational& beta, const Rational& eps,
                       const Rational& alpha);

} // namespace alphacalc
