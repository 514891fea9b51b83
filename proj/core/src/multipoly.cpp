#include "alphacalc/multipoly.hpp"

#include <algorithm>

namespace alphacalc {

MultiPoly MultiPoly::constant(std::size_t arity, ExactComplex c) {
    MultiPoly p(arity);
    p.add_term(Monomial(arity, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
    MultiPoly p(arity);
    Monomial m(arity, 0);
    m.at(index) = 1;
    p.add_term(std::move(m), ExactComplex{Rational(1)});
    return p;
}

void MultiPoly::add_term(Monomial m, ExactComplex c) {
    if (m.size() != arity_)
        throw DomainError("monomial arity mismatch");
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [m, c] : terms_) {
        unsigned d = 0;
        for (unsigned e : m)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

MultiPoly MultiPoly::partial(std::size_t index) const {
    MultiPoly out(arity_);
    for (const auto& [m, c] : terms_) {
        if (m.at(index) == 0)
            continue;
        Monomial d = m;
        unsigned e = d[index]--;
        out.add_term(std::move(d), ExactComplex{c.re * Rational(e), c.im * Rational(e)});
    }
    return out;
}

PuiseuxSeries MultiPoly::eval(const std::vector<PuiseuxSeries>& args) const {
    if (args.size() != arity_)
        throw DomainError("composition arity mismatch");
    for (const auto& g : args)
        if (g.domain() != Domain::exact)
            throw DomainError("polynomial composition requires exact series");

    PuiseuxSeries acc = PuiseuxSeries::zero(Domain::exact);
    for (const auto& [m, c] : terms_) {
        PuiseuxSeries prod = PuiseuxSeries::constant(Coefficient(c));
        for (std::size_t i = 0; i < arity_; ++i)
            if (m[i] > 0)
                prod = mul(prod, pow_series(args[i], m[i]));
        acc = add(acc, prod);
    }
    return acc;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_)
        throw DomainError("polynomial arity mismatch");
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_)
        out.add_term(m, c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_)
        throw DomainError("polynomial arity mismatch");
    MultiPoly out(a.arity_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            MultiPoly::Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] += mb[i];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly out = constant(arity_, ExactComplex{Rational(1)});
    for (unsigned i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

PuiseuxSeries pow_series(const PuiseuxSeries& f, unsigned k) {
    PuiseuxSeries out = PuiseuxSeries::constant(Coefficient::one(f.domain()));
    for (unsigned i = 0; i < k; ++i)
        out = mul(out, f);
    return out;
}

} // namespace alphacalc
