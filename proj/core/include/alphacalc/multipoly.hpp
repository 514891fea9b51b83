#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "alphacalc/puiseux.hpp"

namespace alphacalc {

/// Finite polynomial in k formal variables with exact complex coefficients.
/// Supports the formal partial derivatives and series composition needed by
/// the chain rule.
class MultiPoly {
public:
    using Monomial = std::vector<unsigned>; // one exponent per variable

    explicit MultiPoly(std::size_t arity) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, ExactComplex c);
    static MultiPoly variable(std::size_t arity, std::size_t index);

    std::size_t arity() const { return arity_; }
    const std::map<Monomial, ExactComplex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    /// Formal partial derivative with respect to variable `index`.
    MultiPoly partial(std::size_t index) const;

    /// Composition F(g_1, ..., g_k) in the exact series ring.
    PuiseuxSeries eval(const std::vector<PuiseuxSeries>& args) const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly pow(unsigned k) const;

    void add_term(Monomial m, ExactComplex c);

private:
    std::size_t arity_;
    std::map<Monomial, ExactComplex> terms_;
};

/// k-fold series product (k = 0 gives the constant 1).
PuiseuxSeries pow_series(const PuiseuxSeries& f, unsigned k);

} // namespace alphacalc
