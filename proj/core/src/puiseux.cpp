#include "alphacalc/puiseux.hpp"

#include <cmath>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

namespace alphacalc {

namespace {

Trunc ext_min(const Trunc& a, const Trunc& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

Trunc ext_shift(const Trunc& t, const Rational& d) {
    if (!t) return std::nullopt;
    return *t + d;
}

// Lower bound on where unknown content of f can start: the order for a
// series with terms, the truncation bound otherwise, inf for exact zero.
Trunc order_lb(const PuiseuxSeries& f) {
    if (!f.is_zero()) return f.order();
    return f.trunc();
}

void require_same_domain(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    if (f.domain() != g.domain())
        throw DomainMismatchError("mixed exact/approx series");
}

} // namespace

PuiseuxSeries PuiseuxSeries::zero(Domain d) {
    return PuiseuxSeries(d);
}

PuiseuxSeries PuiseuxSeries::constant(Coefficient c) {
    return monomial(std::move(c), Rational(0));
}

PuiseuxSeries PuiseuxSeries::monomial(Coefficient c, const Rational& exponent) {
    return from_terms(c.domain(), {{exponent, std::move(c)}});
}

PuiseuxSeries PuiseuxSeries::from_terms(Domain d, std::vector<Term> terms,
                                        Trunc trunc, mpz_class ram_hint) {
    std::map<Rational, Coefficient> acc;
    for (auto& t : terms) {
        if (t.coeff.domain() != d)
            throw DomainMismatchError("term coefficient outside the series domain");
        if (d == Domain::approx && !t.coeff.approx().is_finite())
            throw OverflowError("non-finite coefficient at exponent " + t.exponent.str());
        auto [it, inserted] = acc.emplace(t.exponent, t.coeff);
        if (!inserted)
            it->second = it->second + t.coeff;
    }

    PuiseuxSeries out(d);
    out.trunc_ = std::move(trunc);
    out.ramification_ = std::move(ram_hint);
    if (out.ramification_ < 1)
        out.ramification_ = 1;
    for (auto& [q, c] : acc) {
        if (c.is_zero())
            continue;
        if (out.trunc_ && q >= *out.trunc_)
            continue;
        out.ramification_ = lcm(out.ramification_, q.den());
        out.terms_.push_back({q, c});
    }
    return out;
}

Rational PuiseuxSeries::order() const {
    if (terms_.empty())
        throw EmptySeriesError("order of the zero series is undefined");
    return terms_.front().exponent;
}

Coefficient PuiseuxSeries::coefficient_at(const Rational& q) const {
    for (const auto& t : terms_) {
        if (t.exponent == q)
            return t.coeff;
        if (t.exponent > q)
            break;
    }
    return Coefficient::zero(domain_);
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.domain_ != b.domain_ || a.trunc_ != b.trunc_ ||
        a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponent != b.terms_[i].exponent ||
            !(a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    }
    return true;
}

PuiseuxSeries add(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    require_same_domain(f, g);
    std::vector<PuiseuxSeries::Term> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return PuiseuxSeries::from_terms(f.domain(), std::move(terms),
                                     ext_min(f.trunc(), g.trunc()),
                                     lcm(f.ramification(), g.ramification()));
}

PuiseuxSeries sub(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    return add(f, negate(g));
}

PuiseuxSeries negate(const PuiseuxSeries& f) {
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms())
        terms.push_back({t.exponent, -t.coeff});
    return PuiseuxSeries::from_terms(f.domain(), std::move(terms), f.trunc(),
                                     f.ramification());
}

PuiseuxSeries scale(const Coefficient& c, const PuiseuxSeries& f) {
    if (c.domain() != f.domain())
        throw DomainMismatchError("scalar domain differs from series domain");
    if (c.is_zero())
        return PuiseuxSeries::zero(f.domain());
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms())
        terms.push_back({t.exponent, c * t.coeff});
    return PuiseuxSeries::from_terms(f.domain(), std::move(terms), f.trunc(),
                                     f.ramification());
}

PuiseuxSeries mul(const PuiseuxSeries& f, const PuiseuxSeries& g) {
    require_same_domain(f, g);
    if (f.is_exact_zero() || g.is_exact_zero())
        return PuiseuxSeries::zero(f.domain());

    Trunc of = order_lb(f);
    Trunc og = order_lb(g);
    Trunc t = ext_min(of ? ext_shift(g.trunc(), *of) : std::nullopt,
                      og ? ext_shift(f.trunc(), *og) : std::nullopt);

    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size() * g.terms().size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            terms.push_back({a.exponent + b.exponent, a.coeff * b.coeff});
    return PuiseuxSeries::from_terms(f.domain(), std::move(terms), t,
                                     lcm(f.ramification(), g.ramification()));
}

PuiseuxSeries reciprocal(const PuiseuxSeries& f, const Rational& T) {
    if (f.is_zero())
        throw EmptySeriesError("reciprocal of the zero series");

    const Rational q0 = f.order();
    const Coefficient c0 = f.terms().front().coeff;
    const PuiseuxSeries lead_inv = PuiseuxSeries::monomial(c0.inverse(), -q0);

    // u = f / (c0 x^q0) - 1 has strictly positive order.
    PuiseuxSeries u = sub(mul(f, lead_inv), PuiseuxSeries::constant(Coefficient::one(f.domain())));
    if (u.is_exact_zero())
        return lead_inv; // monomial: exact inverse

    // Geometric series sum_{k} (-u)^k, stopping once the next power can
    // only contribute at or above the requested bound. Powers are truncated
    // as they go: every exponent in play is nonnegative, so terms at or
    // above T never feed back below it.
    Trunc delta_lb = order_lb(u); // > 0
    PuiseuxSeries sum = PuiseuxSeries::constant(Coefficient::one(f.domain()));
    if (delta_lb) {
        const Rational delta = *delta_lb;
        PuiseuxSeries power = sum;
        const PuiseuxSeries neg_u = truncate(negate(u), T);
        for (Rational reach = delta; reach < T; reach += delta) {
            power = truncate(mul(power, neg_u), T);
            sum = add(sum, power);
            if (power.is_zero())
                break;
        }
    }
    return truncate(mul(sum, lead_inv), T - q0);
}

PuiseuxSeries truncate(const PuiseuxSeries& f, const Rational& T) {
    return PuiseuxSeries::from_terms(f.domain(), f.terms(),
                                     ext_min(f.trunc(), Trunc(T)),
                                     f.ramification());
}

ApproxComplex eval(const PuiseuxSeries& f, double x0) {
    if (!(x0 > 0.0))
        throw DomainError("series evaluation requires x0 > 0");
    const double lx = std::log(x0);
    ApproxComplex acc{};
    for (const auto& t : f.terms()) {
        ApproxComplex c = f.domain() == Domain::exact ? exact_to_approx(t.coeff.exact())
                                                      : t.coeff.approx();
        const double p = std::exp(t.exponent.to_double() * lx);
        acc = acc + ApproxComplex{c.re * p, c.im * p};
    }
    return acc;
}

PuiseuxSeries approximate(const PuiseuxSeries& f) {
    if (f.domain() == Domain::approx)
        return f;
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms())
        terms.push_back({t.exponent, Coefficient(exact_to_approx(t.coeff.exact()))});
    return PuiseuxSeries::from_terms(Domain::approx, std::move(terms), f.trunc(),
                                     f.ramification());
}

PuiseuxSeries real_part(const PuiseuxSeries& f) {
    if (f.domain() != Domain::exact)
        throw DomainError("real_part is defined on exact series");
    std::vector<PuiseuxSeries::Term> terms;
    for (const auto& t : f.terms())
        terms.push_back({t.exponent, Coefficient(ExactComplex{t.coeff.exact().re})});
    return PuiseuxSeries::from_terms(Domain::exact, std::move(terms), f.trunc(),
                                     f.ramification());
}

PuiseuxSeries imag_part(const PuiseuxSeries& f) {
    if (f.domain() != Domain::exact)
        throw DomainError("imag_part is defined on exact series");
    std::vector<PuiseuxSeries::Term> terms;
    for (const auto& t : f.terms())
        terms.push_back({t.exponent, Coefficient(ExactComplex{t.coeff.exact().im})});
    return PuiseuxSeries::from_terms(Domain::exact, std::move(terms), f.trunc(),
                                     f.ramification());
}

namespace {

nlohmann::json rational_json(const Rational& r) {
    return r.str();
}

PuiseuxSeries series_from_parsed_json(const nlohmann::json& j) {
    const std::string dom = j.at("domain").get<std::string>();
    if (dom != "exact" && dom != "approx")
        throw DomainError("unknown series domain \"" + dom + "\"");
    const Domain d = dom == "exact" ? Domain::exact : Domain::approx;

    Trunc trunc;
    const auto& jt = j.at("trunc");
    if (!(jt.is_string() && jt.get<std::string>() == "inf"))
        trunc = Rational::from_string(jt.get<std::string>());

    auto coeff_part = [&](const nlohmann::json& v) -> Rational {
        if (v.is_string())
            return Rational::from_string(v.get<std::string>());
        throw DomainError("exact series requires rational coefficient strings");
    };

    std::vector<PuiseuxSeries::Term> terms;
    for (const auto& t : j.at("terms")) {
        Rational q = Rational::from_string(t.at("exp").get<std::string>());
        if (d == Domain::exact)
            terms.push_back({q, Coefficient(ExactComplex{coeff_part(t.at("re")),
                                                         coeff_part(t.at("im"))})});
        else
            terms.push_back({q, Coefficient(ApproxComplex{t.at("re").get<double>(),
                                                          t.at("im").get<double>()})});
    }
    return PuiseuxSeries::from_terms(d, std::move(terms), trunc,
                                     mpz_class(j.at("ramification").get<long>()));
}

} // namespace

std::string series_to_json(const PuiseuxSeries& f) {
    nlohmann::json j;
    if (!f.ramification().fits_slong_p())
        throw OverflowError("ramification too large for the JSON encoding");
    j["ramification"] = f.ramification().get_si();
    j["trunc"] = f.trunc() ? rational_json(*f.trunc()) : nlohmann::json("inf");
    j["domain"] = domain_name(f.domain());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        nlohmann::json jt;
        jt["exp"] = rational_json(t.exponent);
        if (f.domain() == Domain::exact) {
            jt["re"] = rational_json(t.coeff.exact().re);
            jt["im"] = rational_json(t.coeff.exact().im);
        } else {
            jt["re"] = t.coeff.approx().re;
            jt["im"] = t.coeff.approx().im;
        }
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j.dump();
}

PuiseuxSeries series_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid series JSON: ") + e.what(),
                          static_cast<std::size_t>(e.byte), {"json"});
    }
    try {
        return series_from_parsed_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed series object: ") + e.what());
    }
}

} // namespace alphacalc
