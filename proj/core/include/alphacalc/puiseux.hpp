#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphacalc/coefficient.hpp"
#include "alphacalc/rational.hpp"

namespace alphacalc {

/// Truncation bound: exponents >= *trunc are unknown; nullopt means the
/// series is an exact finite sum (no unknown tail).
using Trunc = std::optional<Rational>;

/// Formal sum of finitely many terms c_q * x^q with rational exponents on
/// a common lattice (1/n)Z, support bounded below, truncated above.
///
/// Invariants: exponents strictly ascending, all below trunc, no zero
/// coefficients stored, every exponent q satisfies q * ramification in Z,
/// and all coefficients share the domain tag.
class PuiseuxSeries {
public:
    struct Term {
        Rational exponent;
        Coefficient coeff;
    };

    static PuiseuxSeries zero(Domain d);
    static PuiseuxSeries constant(Coefficient c);
    static PuiseuxSeries monomial(Coefficient c, const Rational& exponent);

    /// Normalizing constructor: merges like terms, sorts, drops zeros and
    /// terms at or above trunc, extends the lattice hint as needed.
    static PuiseuxSeries from_terms(Domain d, std::vector<Term> terms,
                                    Trunc trunc = std::nullopt,
                                    mpz_class ram_hint = 1);

    Domain domain() const { return domain_; }
    const mpz_class& ramification() const { return ramification_; }
    const std::vector<Term>& terms() const { return terms_; }
    const Trunc& trunc() const { return trunc_; }

    /// No stored terms (possibly with a finite unknown-tail bound).
    bool is_zero() const { return terms_.empty(); }
    /// No terms and no unknown tail: the exact zero of the ring.
    bool is_exact_zero() const { return terms_.empty() && !trunc_.has_value(); }

    /// Minimal exponent; throws EmptySeriesError for the zero series.
    Rational order() const;

    /// Coefficient at exponent q (domain zero if absent).
    Coefficient coefficient_at(const Rational& q) const;
    Coefficient constant_term() const { return coefficient_at(Rational(0)); }

    /// Mathematical equality: same domain, terms, and truncation bound.
    /// The ramification is a lattice bound, not part of the value.
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

private:
    PuiseuxSeries(Domain d) : domain_(d) {}

    Domain domain_;
    mpz_class ramification_ = 1;
    std::vector<Term> terms_;
    Trunc trunc_;
};

PuiseuxSeries add(const PuiseuxSeries& f, const PuiseuxSeries& g);
PuiseuxSeries sub(const PuiseuxSeries& f, const PuiseuxSeries& g);
PuiseuxSeries negate(const PuiseuxSeries& f);
PuiseuxSeries scale(const Coefficient& c, const PuiseuxSeries& f);

/// Cauchy product. Result trunc is min(order(f) + trunc(g),
/// order(g) + trunc(f)) in the extended sense, with the order of a
/// termless series read as its truncation bound.
PuiseuxSeries mul(const PuiseuxSeries& f, const PuiseuxSeries& g);

/// Multiplicative inverse up to the requested bound: mul(f, g) - 1 has no
/// term below T (below min(T, trunc(f) - order(f)) when f is truncated).
/// Geometric expansion of the tail past the leading term.
PuiseuxSeries reciprocal(const PuiseuxSeries& f, const Rational& T);

/// Drops terms with exponent >= T and lowers the truncation bound to T.
PuiseuxSeries truncate(const PuiseuxSeries& f, const Rational& T);

/// Principal-branch numeric evaluation at x0 > 0: sum of c_q exp(q ln x0).
/// The truncation remainder is not estimated.
ApproxComplex eval(const PuiseuxSeries& f, double x0);

/// Copy with coefficients rounded to the approx domain.
PuiseuxSeries approximate(const PuiseuxSeries& f);

/// Termwise real/imaginary part (exact domain).
PuiseuxSeries real_part(const PuiseuxSeries& f);
PuiseuxSeries imag_part(const PuiseuxSeries& f);

/// Canonical JSON encoding:
/// {"ramification": n, "trunc": "p/q"|"inf", "domain": "exact"|"approx",
///  "terms": [{"exp": "p/q", "re": "p/q"|float, "im": "p/q"|float}, ...]}
/// with terms sorted by exponent.
std::string series_to_json(const PuiseuxSeries& f);
PuiseuxSeries series_from_json(const std::string& text);

} // namespace alphacalc
