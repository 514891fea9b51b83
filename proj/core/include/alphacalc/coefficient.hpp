#pragma once

#include <string>
#include <variant>

#include "alphacalc/rational.hpp"

namespace alphacalc {

/// Complex scalar with exact rational parts. Field operations are exact.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() = default;
    ExactComplex(Rational r) : re(std::move(r)) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ExactComplex conj() const { return {re, -im}; }
    ExactComplex inverse() const;

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Complex scalar in double precision. Series never admit NaN/Inf parts.
struct ApproxComplex {
    double re = 0.0;
    double im = 0.0;

    bool is_zero() const { return re == 0.0 && im == 0.0; }
    bool is_finite() const;
    ApproxComplex conj() const { return {re, -im}; }
    ApproxComplex inverse() const;

    friend ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ApproxComplex operator-(const ApproxComplex& a) { return {-a.re, -a.im}; }
    friend ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ApproxComplex& a, const ApproxComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Nearest-double image of an exact complex scalar.
/// Throws OverflowError if either part exceeds the double range.
ApproxComplex exact_to_approx(const ExactComplex& c);

enum class Domain { exact, approx };

std::string domain_name(Domain d);

/// Tagged scalar: exactly one of the two coefficient domains.
/// Mixed-domain arithmetic raises DomainMismatchError.
class Coefficient {
public:
    Coefficient() : v_(ExactComplex{}) {}
    Coefficient(ExactComplex c) : v_(std::move(c)) {}
    Coefficient(ApproxComplex c) : v_(c) {}

    static Coefficient zero(Domain d);
    static Coefficient one(Domain d);

    Domain domain() const {
        return std::holds_alternative<ExactComplex>(v_) ? Domain::exact : Domain::approx;
    }
    bool is_zero() const;

    const ExactComplex& exact() const;
    const ApproxComplex& approx() const;

    Coefficient inverse() const;
    Coefficient conj() const;

    /// Multiply by an exact rational (converted to double in the approx domain).
    Coefficient scaled(const Rational& r) const;

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a);
    friend bool operator==(const Coefficient& a, const Coefficient& b);

private:
    std::variant<ExactComplex, ApproxComplex> v_;
};

} // namespace alphacalc
