#include "alphacalc/random_series.hpp"

namespace alphacalc {

long SeriesGen::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational SeriesGen::coefficient() {
    long p = uniform(-20, 20);
    if (p == 0)
        p = 1;
    return Rational(p, uniform(1, 20));
}

Rational SeriesGen::exponent() {
    return Rational(uniform(-6, 12), uniform(1, 6));
}

Rational SeriesGen::exponent_nonnegative() {
    return Rational(uniform(0, 12), uniform(1, 6));
}

AlphaOrder SeriesGen::alpha(bool with_classical) {
    long n = uniform(2, 6);
    long m = uniform(1, with_classical ? n : n - 1);
    return AlphaOrder(Rational(m, n));
}

PuiseuxSeries SeriesGen::series(int max_terms) {
    int count = static_cast<int>(uniform(1, max_terms));
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        terms.push_back({exponent(), Coefficient(ExactComplex{coefficient()})});
    return PuiseuxSeries::from_terms(Domain::exact, std::move(terms));
}

PuiseuxSeries SeriesGen::series_nonnegative(int max_terms) {
    int count = static_cast<int>(uniform(1, max_terms));
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        terms.push_back({exponent_nonnegative(), Coefficient(ExactComplex{coefficient()})});
    return PuiseuxSeries::from_terms(Domain::exact, std::move(terms));
}

PuiseuxSeries SeriesGen::series_avoiding(const Rational& forbidden, int max_terms) {
    int count = static_cast<int>(uniform(1, max_terms));
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Rational q = exponent();
        if (q == forbidden)
            continue;
        terms.push_back({q, Coefficient(ExactComplex{coefficient()})});
    }
    if (terms.empty())
        terms.push_back({forbidden + Rational(1), Coefficient(ExactComplex{coefficient()})});
    return PuiseuxSeries::from_terms(Domain::exact, std::move(terms));
}

MultiPoly SeriesGen::polynomial(std::size_t arity, unsigned max_degree) {
    MultiPoly p(arity);
    int count = static_cast<int>(uniform(1, 4));
    for (int i = 0; i < count; ++i) {
        MultiPoly::Monomial m(arity, 0);
        unsigned budget = static_cast<unsigned>(uniform(0, static_cast<long>(max_degree)));
        for (unsigned d = 0; d < budget; ++d)
            m[static_cast<std::size_t>(uniform(0, static_cast<long>(arity) - 1))] += 1;
        p.add_term(std::move(m), ExactComplex{coefficient()});
    }
    return p;
}

} // namespace alphacalc
