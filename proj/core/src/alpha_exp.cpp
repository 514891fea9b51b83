#include "alphacalc/alpha_exp.hpp"

#include <cmath>

namespace alphacalc {

AlphaExpSeries alpha_exp_series(const AlphaOrder& alpha, unsigned N) {
    if (N < 1)
        throw DomainError("alpha-exponent series needs N >= 1");
    const Rational& a = alpha.value();

    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(N + 1);
    Rational coeff(1);          // 1 / (alpha^k k!)
    Rational exponent(0);       // k * alpha
    const Rational a_inv = a.inverse();
    for (unsigned k = 0; k <= N; ++k) {
        terms.push_back({exponent, Coefficient(ExactComplex{coeff})});
        coeff = coeff * a_inv * Rational(1, static_cast<long>(k) + 1);
        exponent += a;
    }
    PuiseuxSeries s = PuiseuxSeries::from_terms(
        Domain::exact, std::move(terms),
        Trunc(Rational(static_cast<long>(N) + 1) * a), a.den());
    return {alpha, N, std::move(s)};
}

double alpha_exp_eval(double z, const AlphaOrder& alpha) {
    if (z == 0.0)
        return 1.0;
    if (z < 0.0)
        throw DomainError("alpha-exponent is evaluated on z >= 0 only");
    const double a = alpha.value().to_double();
    return std::exp(std::pow(z, a) / a);
}

PuiseuxSeries ode_residual(const AlphaOrder& alpha, unsigned N) {
    if (N < 2)
        throw DomainError("ODE residual needs N >= 2");
    AlphaExpSeries e = alpha_exp_series(alpha, N);
    // Subtraction lands on the window [0, N alpha); the leftover x^(N alpha)
    // term sits exactly at the bound and is dropped by normalization.
    return sub(alpha_deriv(e.series, alpha), e.series);
}

double semigroup_gap(double z1, double z2, const AlphaOrder& alpha) {
    if (z1 <= 0.0 || z2 <= 0.0)
        throw DomainError("semigroup gap requires positive arguments");
    return alpha_exp_eval(z1 + z2, alpha) -
           alpha_exp_eval(z1, alpha) * alpha_exp_eval(z2, alpha);
}

} // namespace alphacalc
