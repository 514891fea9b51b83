#include "alphacalc/coefficient.hpp"

#include <cmath>

namespace alphacalc {

ExactComplex ExactComplex::inverse() const {
    if (is_zero())
        throw ZeroDenominatorError("inverse of zero coefficient");
    Rational n = re * re + im * im;
    Rational ninv = n.inverse();
    return {re * ninv, -(im * ninv)};
}

bool ApproxComplex::is_finite() const {
    return std::isfinite(re) && std::isfinite(im);
}

ApproxComplex ApproxComplex::inverse() const {
    if (is_zero())
        throw ZeroDenominatorError("inverse of zero coefficient");
    double n = re * re + im * im;
    return {re / n, -im / n};
}

ApproxComplex exact_to_approx(const ExactComplex& c) {
    return {c.re.to_double(), c.im.to_double()};
}

std::string domain_name(Domain d) {
    return d == Domain::exact ? "exact" : "approx";
}

Coefficient Coefficient::zero(Domain d) {
    if (d == Domain::exact)
        return Coefficient(ExactComplex{});
    return Coefficient(ApproxComplex{});
}

Coefficient Coefficient::one(Domain d) {
    if (d == Domain::exact)
        return Coefficient(ExactComplex{Rational(1)});
    return Coefficient(ApproxComplex{1.0, 0.0});
}

bool Coefficient::is_zero() const {
    return std::visit([](const auto& c) { return c.is_zero(); }, v_);
}

const ExactComplex& Coefficient::exact() const {
    if (domain() != Domain::exact)
        throw DomainMismatchError("exact coefficient requested from approx value");
    return std::get<ExactComplex>(v_);
}

const ApproxComplex& Coefficient::approx() const {
    if (domain() != Domain::approx)
        throw DomainMismatchError("approx coefficient requested from exact value");
    return std::get<ApproxComplex>(v_);
}

Coefficient Coefficient::inverse() const {
    return std::visit([](const auto& c) { return Coefficient(c.inverse()); }, v_);
}

Coefficient Coefficient::conj() const {
    return std::visit([](const auto& c) { return Coefficient(c.conj()); }, v_);
}

Coefficient Coefficient::scaled(const Rational& r) const {
    if (domain() == Domain::exact) {
        const auto& c = std::get<ExactComplex>(v_);
        return Coefficient(ExactComplex{c.re * r, c.im * r});
    }
    const auto& c = std::get<ApproxComplex>(v_);
    double d = r.to_double();
    return Coefficient(ApproxComplex{c.re * d, c.im * d});
}

namespace {

void require_same_domain(const Coefficient& a, const Coefficient& b) {
    if (a.domain() != b.domain())
        throw DomainMismatchError("mixed exact/approx coefficients");
}

} // namespace

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    require_same_domain(a, b);
    if (a.domain() == Domain::exact)
        return Coefficient(a.exact() + b.exact());
    return Coefficient(a.approx() + b.approx());
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    require_same_domain(a, b);
    if (a.domain() == Domain::exact)
        return Coefficient(a.exact() - b.exact());
    return Coefficient(a.approx() - b.approx());
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    require_same_domain(a, b);
    if (a.domain() == Domain::exact)
        return Coefficient(a.exact() * b.exact());
    return Coefficient(a.approx() * b.approx());
}

Coefficient operator-(const Coefficient& a) {
    if (a.domain() == Domain::exact)
        return Coefficient(-a.exact());
    return Coefficient(-a.approx());
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.domain() != b.domain())
        return false;
    if (a.domain() == Domain::exact)
        return a.exact() == b.exact();
    return a.approx() == b.approx();
}

} // namespace alphacalc
