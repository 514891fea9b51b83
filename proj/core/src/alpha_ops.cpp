#include "alphacalc/alpha_ops.hpp"

#include "alphacalc/gamma.hpp"

namespace alphacalc {

AlphaOrder::AlphaOrder(Rational v) : v_(std::move(v)) {
    if (v_.sign() <= 0 || v_ > Rational(1))
        throw DomainError("alpha must satisfy 0 < alpha <= 1, got " + v_.str());
}

PuiseuxSeries alpha_deriv(const PuiseuxSeries& f, const AlphaOrder& alpha) {
    const Rational& a = alpha.value();
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        if (t.exponent.is_zero())
            continue; // d_alpha annihilates exactly the x^0 term
        terms.push_back({t.exponent - a, t.coeff.scaled(t.exponent)});
    }
    Trunc tr = f.trunc();
    if (tr)
        tr = *tr - a;
    return PuiseuxSeries::from_terms(f.domain(), std::move(terms), tr,
                                     lcm(f.ramification(), a.den()));
}

PuiseuxSeries alpha_deriv_iter(const PuiseuxSeries& f, const AlphaOrder& alpha,
                               unsigned m) {
    PuiseuxSeries out = f;
    for (unsigned i = 0; i < m; ++i)
        out = alpha_deriv(out, alpha);
    return out;
}

PuiseuxSeries alpha_integral(const PuiseuxSeries& f, const AlphaOrder& alpha) {
    const Rational& a = alpha.value();
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Rational shifted = t.exponent + a;
        if (shifted.is_zero())
            throw IntegralPoleError("alpha-integral pole: term x^(" +
                                        t.exponent.str() + ") with alpha = " + a.str(),
                                    t.exponent.str());
        terms.push_back({shifted, t.coeff.scaled(shifted.inverse())});
    }
    Trunc tr = f.trunc();
    if (tr)
        tr = *tr + a;
    return PuiseuxSeries::from_terms(f.domain(), std::move(terms), tr,
                                     lcm(f.ramification(), a.den()));
}

std::pair<PuiseuxSeries, PuiseuxSeries>
fundamental_check(const PuiseuxSeries& f, const AlphaOrder& alpha) {
    PuiseuxSeries lhs = sub(alpha_deriv(alpha_integral(f, alpha), alpha), f);
    PuiseuxSeries rhs = sub(alpha_integral(alpha_deriv(f, alpha), alpha), f);
    return {std::move(lhs), std::move(rhs)};
}

double rl_coefficient(const Rational& beta, const Rational& order) {
    if (beta <= Rational(-1))
        throw DomainError("RL monomial rule requires beta > -1, got " + beta.str());
    Rational denom_arg = beta - order + Rational(1);
    if (denom_arg.is_nonpositive_integer())
        return 0.0; // 1/Gamma at a pole
    return gamma_eval(beta + Rational(1)) / gamma_eval(denom_arg);
}

RLCoefficient rl_deriv_monomial(const Rational& beta, const AlphaOrder& alpha) {
    return {beta, alpha.value(), rl_coefficient(beta, alpha.value())};
}

PuiseuxSeries rl_apply(const PuiseuxSeries& f, const Rational& order) {
    if (f.domain() != Domain::approx)
        throw DomainError("RL series action is defined on the approx domain");
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        // ascending order: the first violation is the smallest exponent
        double c = rl_coefficient(t.exponent, order);
        ApproxComplex v = t.coeff.approx();
        terms.push_back({t.exponent - order, Coefficient(ApproxComplex{v.re * c, v.im * c})});
    }
    Trunc tr = f.trunc();
    if (tr)
        tr = *tr - order;
    return PuiseuxSeries::from_terms(Domain::approx, std::move(terms), tr,
                                     lcm(f.ramification(), order.den()));
}

PuiseuxSeries rl_deriv_series(const PuiseuxSeries& f, const AlphaOrder& alpha) {
    return rl_apply(f, alpha.value());
}

double rl_binomial(const Rational& a, unsigned n) {
    Rational denom_arg = a - Rational(static_cast<long>(n)) + Rational(1);
    if (denom_arg.is_nonpositive_integer())
        return 0.0;
    return gamma_eval(a + Rational(1)) /
           (gamma_eval(denom_arg) * gamma_eval(Rational(static_cast<long>(n) + 1)));
}

PuiseuxSeries leibnitz_residual(const PuiseuxSeries& f, const PuiseuxSeries& g,
                                const AlphaOrder& alpha) {
    if (f.domain() != Domain::exact || g.domain() != Domain::exact)
        throw DomainError("Leibnitz residual is defined on the exact domain");
    PuiseuxSeries lhs = alpha_deriv(mul(f, g), alpha);
    PuiseuxSeries rhs = add(mul(g, alpha_deriv(f, alpha)), mul(f, alpha_deriv(g, alpha)));
    return sub(lhs, rhs);
}

PuiseuxSeries rl_leibnitz_partial_sum(const PuiseuxSeries& f,
                                      const PuiseuxSeries& g,
                                      const AlphaOrder& alpha, unsigned N) {
    if (f.domain() != Domain::approx || g.domain() != Domain::approx)
        throw DomainError("RL binomial expansion is defined on the approx domain");
    for (const auto& t : g.terms())
        if (!t.exponent.is_integer() || t.exponent.sign() < 0)
            throw DomainError("RL binomial expansion requires g polynomial in "
                              "nonnegative integer powers, got exponent " +
                              t.exponent.str());

    const AlphaOrder classical(1, 1);
    PuiseuxSeries acc = PuiseuxSeries::zero(Domain::approx);
    PuiseuxSeries g_deriv = g;
    for (unsigned n = 0; n <= N; ++n) {
        double b = rl_binomial(alpha.value(), n);
        if (b != 0.0) {
            Rational order = alpha.value() - Rational(static_cast<long>(n));
            PuiseuxSeries term = mul(rl_apply(f, order), g_deriv);
            acc = add(acc, scale(Coefficient(ApproxComplex{b, 0.0}), term));
        }
        g_deriv = alpha_deriv(g_deriv, classical);
    }
    return acc;
}

PuiseuxSeries rl_two_term_gap(const PuiseuxSeries& f, const PuiseuxSeries& g,
                              const AlphaOrder& alpha) {
    PuiseuxSeries lhs = rl_apply(mul(f, g), alpha.value());
    PuiseuxSeries rhs = add(mul(g, rl_apply(f, alpha.value())),
                            mul(f, rl_apply(g, alpha.value())));
    return sub(lhs, rhs);
}

PuiseuxSeries chain_rule_apply(const MultiPoly& F,
                               const std::vector<PuiseuxSeries>& g,
                               const AlphaOrder& alpha) {
    PuiseuxSeries acc = PuiseuxSeries::zero(Domain::exact);
    for (std::size_t k = 0; k < F.arity(); ++k) {
        MultiPoly pk = F.partial(k);
        if (pk.is_zero())
            continue;
        acc = add(acc, mul(pk.eval(g), alpha_deriv(g.at(k), alpha)));
    }
    return acc;
}

std::pair<Rational, Rational>
coefficient_rule_check(const Rational& beta, const Rational& eps,
                       const Rational& alpha) {
    (void)alpha; // C(beta, alpha) = A(alpha) * beta with A == 1
    auto C = [](const Rational& b) { return b; };
    return {C(beta - eps) + C(eps), C(beta)};
}

} // namespace alphacalc
