#include "alphacalc/rational.hpp"

#include <cmath>
#include <ostream>

#include <mpfr.h>

namespace alphacalc {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(mpz_class n, mpz_class d) {
    if (sgn(d) == 0)
        throw ZeroDenominatorError("rational with denominator zero");
    v_ = mpq_class(std::move(n), std::move(d));
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&](std::size_t at, const char* expected) -> Rational {
        throw SyntaxError("invalid rational \"" + text + "\" at offset " +
                              std::to_string(at),
                          at, {expected});
    };

    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&]() -> std::string {
        std::size_t start = i;
        while (i < n && text[i] >= '0' && text[i] <= '9')
            ++i;
        return text.substr(start, i - start);
    };

    std::string ip = digits();
    if (ip.empty() && !(i < n && text[i] == '.'))
        return fail(i, "digit");

    if (i < n && text[i] == '/') {
        ++i;
        std::string dp = digits();
        if (dp.empty())
            return fail(i, "digit");
        if (i != n)
            return fail(i, "end of input");
        Rational r{mpz_class(ip, 10), mpz_class(dp, 10)};
        return negative ? -r : r;
    }

    std::string fp;
    if (i < n && text[i] == '.') {
        ++i;
        fp = digits();
        if (ip.empty() && fp.empty())
            return fail(i, "digit");
    }
    if (i != n)
        return fail(i, "end of input");

    mpz_class numer(ip.empty() ? "0" : ip, 10);
    mpz_class scale = 1;
    for (char c : fp) {
        numer = numer * 10 + (c - '0');
        scale *= 10;
    }
    Rational r{numer, scale};
    return negative ? -r : r;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw ZeroDenominatorError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

double Rational::to_double() const {
    // mpq_get_d truncates; go through MPFR at 53 bits for round-to-nearest.
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    if (!std::isfinite(d))
        throw OverflowError("rational " + str() + " exceeds double range");
    return d;
}

std::string Rational::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace alphacalc
