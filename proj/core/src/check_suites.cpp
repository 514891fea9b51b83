#include "alphacalc/check_suites.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "alphacalc/alpha_exp.hpp"
#include "alphacalc/madelung.hpp"
#include "alphacalc/parser.hpp"
#include "alphacalc/random_series.hpp"

namespace alphacalc {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double max_coeff_magnitude(const PuiseuxSeries& f) {
    double best = 0.0;
    for (const auto& t : f.terms()) {
        ApproxComplex c = t.coeff.approx();
        best = std::max(best, std::max(std::abs(c.re), std::abs(c.im)));
    }
    return best;
}

using CaseFn = std::function<bool(unsigned, SeriesGen&, std::string&)>;

SuiteReport run_cases(const std::string& name, unsigned cases,
                      std::uint64_t seed, const std::string& detail,
                      const CaseFn& one_case) {
    SuiteReport r;
    r.name = name;
    r.cases = cases;
    r.detail = detail;
    SeriesGen gen(seed);
    for (unsigned i = 1; i <= cases; ++i) {
        std::string desc;
        if (one_case(i, gen, desc)) {
            ++r.passed;
        } else if (r.counterexample.empty()) {
            r.counterexample = "case " + std::to_string(i) + ": " + desc;
        }
    }
    return r;
}

SuiteReport suite_leibnitz(unsigned cases, std::uint64_t seed) {
    return run_cases("leibnitz", cases, seed, "residuals exactly zero",
                     [](unsigned, SeriesGen& gen, std::string& desc) {
                         PuiseuxSeries f = gen.series();
                         PuiseuxSeries g = gen.series();
                         AlphaOrder a = gen.alpha();
                         PuiseuxSeries res = leibnitz_residual(f, g, a);
                         if (res.is_zero())
                             return true;
                         desc = "f = " + format_series(f) + ", g = " + format_series(g) +
                                ", alpha = " + a.value().str() +
                                ", residual = " + format_series(res);
                         return false;
                     });
}

SuiteReport suite_chain(unsigned cases, std::uint64_t seed) {
    return run_cases("chain", cases, seed, "residuals exactly zero",
                     [](unsigned, SeriesGen& gen, std::string& desc) {
                         auto arity = static_cast<std::size_t>(gen.uniform(1, 2));
                         MultiPoly F = gen.polynomial(arity, 3);
                         std::vector<PuiseuxSeries> g;
                         for (std::size_t i = 0; i < arity; ++i)
                             g.push_back(gen.series(4));
                         AlphaOrder a = gen.alpha();
                         PuiseuxSeries lhs = chain_rule_apply(F, g, a);
                         PuiseuxSeries rhs = alpha_deriv(F.eval(g), a);
                         if (sub(lhs, rhs).is_zero())
                             return true;
                         desc = "chain residual nonzero, alpha = " + a.value().str();
                         return false;
                     });
}

SuiteReport suite_commute(unsigned cases, std::uint64_t seed) {
    return run_cases("commute", cases, seed, "iterated derivatives commute exactly",
                     [](unsigned, SeriesGen& gen, std::string& desc) {
                         PuiseuxSeries f = gen.series();
                         AlphaOrder a = gen.alpha();
                         auto m = static_cast<unsigned>(gen.uniform(0, 4));
                         auto l = static_cast<unsigned>(gen.uniform(0, 4));
                         PuiseuxSeries lhs = alpha_deriv_iter(alpha_deriv_iter(f, a, m), a, l);
                         PuiseuxSeries rhs = alpha_deriv_iter(alpha_deriv_iter(f, a, l), a, m);
                         if (lhs == rhs)
                             return true;
                         desc = "f = " + format_series(f) + ", alpha = " + a.value().str() +
                                ", m = " + std::to_string(m) + ", l = " + std::to_string(l);
                         return false;
                     });
}

SuiteReport suite_fundamental(unsigned cases, std::uint64_t seed) {
    return run_cases(
        "fundamental", cases, seed,
        "derivative-of-integral exact; integral-of-derivative drops the constant",
        [](unsigned, SeriesGen& gen, std::string& desc) {
            AlphaOrder a = gen.alpha();
            PuiseuxSeries f = gen.series_avoiding(-a.value());
            auto [first, second] = fundamental_check(f, a);
            PuiseuxSeries expected =
                negate(PuiseuxSeries::constant(f.constant_term()));
            if (first.is_zero() && sub(second, expected).is_zero())
                return true;
            desc = "f = " + format_series(f) + ", alpha = " + a.value().str();
            return false;
        });
}

SuiteReport suite_rl_gap(unsigned cases, std::uint64_t seed) {
    PuiseuxSeries x = PuiseuxSeries::monomial(Coefficient(ApproxComplex{1.0, 0.0}),
                                              Rational(1));
    PuiseuxSeries canonical = rl_two_term_gap(x, x, AlphaOrder(1, 2));
    std::string detail = "gaps nonzero (expected failure of the two-term rule); "
                         "canonical f=g=x, alpha=1/2 leading coefficient " +
                         g17(canonical.terms().empty() ? 0.0
                                                       : canonical.terms().front().coeff.approx().re);
    return run_cases("rl-gap", cases, seed, detail,
                     [&](unsigned i, SeriesGen& gen, std::string& desc) {
                         PuiseuxSeries gap = PuiseuxSeries::zero(Domain::approx);
                         if (i == 1) {
                             gap = canonical;
                         } else {
                             PuiseuxSeries f = approximate(gen.series_nonnegative(4));
                             PuiseuxSeries g = approximate(gen.series_nonnegative(4));
                             gap = rl_two_term_gap(f, g, gen.alpha_fractional());
                         }
                         if (max_coeff_magnitude(gap) > 1e-9)
                             return true;
                         desc = "two-term gap unexpectedly zero";
                         return false;
                     });
}

SuiteReport suite_exp_ode(unsigned cases, std::uint64_t seed) {
    return run_cases("exp-ode", cases, seed, "ODE residuals exactly zero",
                     [](unsigned, SeriesGen& gen, std::string& desc) {
                         AlphaOrder a = gen.alpha();
                         auto n = static_cast<unsigned>(gen.uniform(2, 25));
                         PuiseuxSeries res = ode_residual(a, n);
                         if (res.is_zero())
                             return true;
                         desc = "alpha = " + a.value().str() + ", N = " + std::to_string(n);
                         return false;
                     });
}

SuiteReport suite_madelung_audit(unsigned cases, std::uint64_t seed) {
    return run_cases("madelung-audit", cases, seed, "audits return (0, 0)",
                     [](unsigned, SeriesGen& gen, std::string& desc) {
                         PuiseuxSeries R = gen.series(6);
                         PuiseuxSeries S = gen.series(6);
                         PuiseuxSeries S_t = gen.series(4);
                         PuiseuxSeries R_t = gen.series(4);
                         PuiseuxSeries V = gen.series(4);
                         AlphaOrder a = gen.alpha();
                         Rational hbar(gen.uniform(1, 5), gen.uniform(1, 5));
                         Rational Dalpha(gen.uniform(1, 10), gen.uniform(1, 10));
                         auto [im, re] = derivation_audit(R, S, S_t, R_t, a, hbar,
                                                          Dalpha, V);
                         if (im.is_zero() && re.is_zero())
                             return true;
                         desc = "alpha = " + a.value().str() +
                                ", R = " + format_series(R) + ", S = " + format_series(S);
                         return false;
                     });
}

} // namespace

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = {
        "leibnitz", "chain", "commute", "fundamental",
        "rl-gap",   "exp-ode", "madelung-audit",
    };
    return names;
}

SuiteReport check_suite(const std::string& name, unsigned cases,
                        std::uint64_t seed) {
    if (cases < 1)
        throw DomainError("check suite needs cases >= 1");
    if (name == "leibnitz")
        return suite_leibnitz(cases, seed);
    if (name == "chain")
        return suite_chain(cases, seed);
    if (name == "commute")
        return suite_commute(cases, seed);
    if (name == "fundamental")
        return suite_fundamental(cases, seed);
    if (name == "rl-gap")
        return suite_rl_gap(cases, seed);
    if (name == "exp-ode")
        return suite_exp_ode(cases, seed);
    if (name == "madelung-audit")
        return suite_madelung_audit(cases, seed);
    throw UnknownSuiteError("unknown check suite \"" + name + "\"");
}

std::string format_report(const SuiteReport& r) {
    std::string out = r.name + ": " + std::to_string(r.passed) + "/" +
                      std::to_string(r.cases) + " " + r.detail;
    if (!r.counterexample.empty())
        out += "\nfirst counterexample: " + r.counterexample;
    return out;
}

} // namespace alphacalc
