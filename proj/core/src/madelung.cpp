#include "alphacalc/madelung.hpp"

namespace alphacalc {

namespace {

// Scale an exact series by a rational.
PuiseuxSeries sc(const Rational& r, const PuiseuxSeries& f) {
    return scale(Coefficient(ExactComplex{r}), f);
}

// Scale by i*r.
PuiseuxSeries sci(const Rational& r, const PuiseuxSeries& f) {
    return scale(Coefficient(ExactComplex{Rational(0), r}), f);
}

void require_exact(const PuiseuxSeries& f, const char* role) {
    if (f.domain() != Domain::exact)
        throw DomainError(std::string(role) + " must be an exact-domain series");
}

void validate(const MadelungState& st) {
    require_exact(st.R, "R");
    require_exact(st.S, "S");
    require_exact(st.R_t, "R_t");
    require_exact(st.S_t, "S_t");
    require_exact(st.V, "V");
    if (st.hbar.sign() <= 0)
        throw DomainError("hbar must be positive");
}

} // namespace

PuiseuxSeries quantum_potential(const PuiseuxSeries& R, const AlphaOrder& alpha,
                                const Rational& Dalpha, const Rational& hbar,
                                const Rational& T) {
    require_exact(R, "R");
    if (R.is_zero())
        throw EmptySeriesError("quantum potential of the zero amplitude");
    if (hbar.sign() <= 0)
        throw DomainError("hbar must be positive");

    PuiseuxSeries d2R = alpha_deriv_iter(R, alpha, 2);
    const Rational factor = -(Dalpha * hbar * hbar);
    if (d2R.is_zero()) {
        PuiseuxSeries q = d2R.trunc() ? sc(factor, d2R) : PuiseuxSeries::zero(Domain::exact);
        return truncate(q, T);
    }
    // Ask the reciprocal for enough window that the product reaches T.
    Rational t_req = T - d2R.order() + R.order();
    return truncate(sc(factor, mul(d2R, reciprocal(R, t_req))), T);
}

PuiseuxSeries continuity_residual(const MadelungState& st) {
    validate(st);
    PuiseuxSeries dR = alpha_deriv(st.R, st.alpha);
    PuiseuxSeries dS = alpha_deriv(st.S, st.alpha);
    PuiseuxSeries d2S = alpha_deriv(dS, st.alpha);
    return add(st.R_t, add(sc(Rational(2) * st.Dalpha, mul(dR, dS)),
                           sc(st.Dalpha, mul(st.R, d2S))));
}

PuiseuxSeries hj_residual(const MadelungState& st) {
    validate(st);
    PuiseuxSeries dS = alpha_deriv(st.S, st.alpha);
    PuiseuxSeries d2R = alpha_deriv_iter(st.R, st.alpha, 2);
    PuiseuxSeries out = sc(st.alpha.value().inverse(), mul(st.S_t, st.R));
    out = add(out, mul(st.V, st.R));
    out = add(out, sc(st.Dalpha * st.hbar * st.hbar, d2R));
    out = sub(out, mul(st.R, mul(dS, dS)));
    return out;
}

SplitResiduals split_residuals(const MadelungState& st) {
    return {continuity_residual(st), hj_residual(st)};
}

std::pair<PuiseuxSeries, PuiseuxSeries>
derivation_audit(const PuiseuxSeries& R, const PuiseuxSeries& S,
                 const PuiseuxSeries& S_t, const PuiseuxSeries& R_t,
                 const AlphaOrder& alpha, const Rational& hbar,
                 const Rational& Dalpha, const PuiseuxSeries& V) {
    require_exact(R, "R");
    require_exact(S, "S");
    require_exact(S_t, "S_t");
    require_exact(R_t, "R_t");
    require_exact(V, "V");
    if (hbar.sign() <= 0)
        throw DomainError("hbar must be positive");

    const Rational a = alpha.value();
    const Rational h2 = hbar * hbar;
    PuiseuxSeries dR = alpha_deriv(R, alpha);
    PuiseuxSeries dS = alpha_deriv(S, alpha);
    PuiseuxSeries d2R = alpha_deriv(dR, alpha);
    PuiseuxSeries d2S = alpha_deriv(dS, alpha);

    // One formal step: d_alpha(c E) / E = d_alpha(c) + c (i/hbar) d_alpha(S).
    auto de = [&](const PuiseuxSeries& c) {
        return add(alpha_deriv(c, alpha), sci(hbar.inverse(), mul(c, dS)));
    };

    // E-coefficients of both sides of the candidate equation.
    PuiseuxSeries lhs = add(sci(hbar, R_t), sc(-a.inverse(), mul(R, S_t)));
    PuiseuxSeries rhs = add(mul(V, R), sc(Dalpha * h2, de(de(R))));
    PuiseuxSeries delta = sub(lhs, rhs);

    // Split recomputed from the same coefficient, written as residuals.
    PuiseuxSeries transport =
        sub(sub(R_t, sc(Rational(2) * Dalpha, mul(dR, dS))), sc(Dalpha, mul(R, d2S)));
    PuiseuxSeries hamjac = add(add(sc(a.inverse(), mul(R, S_t)), mul(V, R)),
                               sub(sc(Dalpha * h2, d2R), sc(Dalpha, mul(R, mul(dS, dS)))));

    // delta == i hbar * transport - hamjac identically; anything left is a
    // derivation defect.
    PuiseuxSeries remainder = add(sub(delta, sci(hbar, transport)), hamjac);
    return {imag_part(remainder), real_part(remainder)};
}

std::pair<PuiseuxSeries, PuiseuxSeries>
derivation_audit(const PuiseuxSeries& R, const PuiseuxSeries& S,
                 const PuiseuxSeries& S_t, const PuiseuxSeries& R_t,
                 const AlphaOrder& alpha, const Rational& hbar) {
    return derivation_audit(R, S, S_t, R_t, alpha, hbar, Rational(1, 3),
                            PuiseuxSeries::zero(Domain::exact));
}

std::pair<PuiseuxSeries, PuiseuxSeries>
classical_consistency(const PuiseuxSeries& R, const PuiseuxSeries& S,
                      const PuiseuxSeries& R_t, const PuiseuxSeries& S_t,
                      const PuiseuxSeries& V, const Rational& m,
                      const Rational& hbar, const Rational& T) {
    require_exact(R, "R");
    if (R.is_zero())
        throw EmptySeriesError("classical residuals need a nonzero amplitude");
    if (m.sign() == 0)
        throw DomainError("mass must be nonzero");

    const AlphaOrder one(1, 1);
    const Rational half_over_m = Rational(1, 2) * m.inverse();

    PuiseuxSeries Sp = alpha_deriv(S, one);
    PuiseuxSeries Rpp = alpha_deriv_iter(R, one, 2);

    PuiseuxSeries first = add(add(S_t, sc(half_over_m, mul(Sp, Sp))), V);
    if (!Rpp.is_zero()) {
        Rational t_req = T - Rpp.order() + R.order();
        first = sub(first, sc(hbar * hbar * half_over_m, mul(Rpp, reciprocal(R, t_req))));
    }

    PuiseuxSeries r2sp = mul(mul(R, R), Sp);
    PuiseuxSeries second =
        add(sc(Rational(2), mul(R, R_t)), sc(m.inverse(), alpha_deriv(r2sp, one)));
    return {std::move(first), std::move(second)};
}

std::vector<std::pair<double, double>>
sample_qpotential(const PuiseuxSeries& R, const AlphaOrder& alpha,
                  const Rational& Dalpha, const Rational& hbar,
                  const Rational& T, const GridSpec& grid) {
    if (grid.step <= 0.0)
        throw DomainError("grid step must be positive");
    if (grid.start > grid.stop)
        throw DomainError("grid start exceeds stop");

    PuiseuxSeries q = quantum_potential(R, alpha, Dalpha, hbar, T);
    std::vector<std::pair<double, double>> out;
    for (long k = 0;; ++k) {
        double x = grid.start + static_cast<double>(k) * grid.step;
        if (x > grid.stop + grid.step / 2)
            break;
        if (x <= 0.0)
            throw DomainError("grid point outside x > 0");
        out.emplace_back(x, eval(q, x).re);
    }
    return out;
}

} // namespace alphacalc
