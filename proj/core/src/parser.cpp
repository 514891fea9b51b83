#include "alphacalc/parser.hpp"

#include <charconv>
#include <cmath>

namespace alphacalc {

namespace {

class SeriesParser {
public:
    SeriesParser(const std::string& src, Domain domain)
        : src_(src), domain_(domain) {}

    PuiseuxSeries run() {
        std::vector<PuiseuxSeries::Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = take() == '-';
            skip_ws();
        }
        terms.push_back(parse_term(negative));
        for (;;) {
            skip_ws();
            if (pos_ == src_.size())
                break;
            char op = peek();
            if (op != '+' && op != '-')
                fail({"+", "-", "end of input"});
            ++pos_;
            skip_ws();
            terms.push_back(parse_term(op == '-'));
        }
        return PuiseuxSeries::from_terms(domain_, std::move(terms));
    }

private:
    const std::string& src_;
    Domain domain_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() { return src_[pos_++]; }
    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            msg += (i ? " | " : "") + expected[i];
        throw SyntaxError(msg, pos_, std::move(expected));
    }

    void expect(char c, const char* name) {
        if (peek() != c)
            fail({name});
        ++pos_;
    }

    bool digit_ahead() const {
        char c = peek();
        return c >= '0' && c <= '9';
    }

    std::string digits() {
        std::size_t start = pos_;
        while (digit_ahead())
            ++pos_;
        if (pos_ == start)
            fail({"digit"});
        return src_.substr(start, pos_ - start);
    }

    // rationalOrDecimal with optional sign: p, p/q, or a decimal literal.
    Rational rational_or_decimal() {
        bool negative = false;
        if (peek() == '+' || peek() == '-')
            negative = take() == '-';
        std::string ip = digits();
        Rational r;
        if (peek() == '/') {
            ++pos_;
            std::string dp = digits();
            r = Rational(mpz_class(ip, 10), mpz_class(dp, 10));
        } else if (peek() == '.') {
            ++pos_;
            std::string fp = digits();
            mpz_class numer(ip, 10);
            mpz_class scale = 1;
            for (char c : fp) {
                numer = numer * 10 + (c - '0');
                scale *= 10;
            }
            r = Rational(numer, scale);
        } else {
            r = Rational(mpz_class(ip, 10), mpz_class(1));
        }
        return negative ? -r : r;
    }

    Rational exponent() {
        if (digit_ahead())
            return Rational(mpz_class(digits(), 10), mpz_class(1));
        if (peek() != '(')
            fail({"integer", "("});
        ++pos_;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-')
            negative = take() == '-';
        std::string ip = digits();
        skip_ws();
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            den = mpz_class(digits(), 10);
            skip_ws();
        }
        expect(')', ")");
        Rational q(mpz_class(ip, 10), den);
        return negative ? -q : q;
    }

    // "x" with optional "^" exponent; defaults to exponent 1.
    Rational mono() {
        expect('x', "x");
        if (peek() != '^')
            return Rational(1);
        ++pos_;
        return exponent();
    }

    ExactComplex complex_body() {
        Rational re = rational_or_decimal();
        if (peek() == '+' || peek() == '-') {
            bool negative = take() == '-';
            Rational im = rational_or_decimal();
            expect('*', "*");
            expect('i', "i");
            return {re, negative ? -im : im};
        }
        return {re};
    }

    Coefficient to_domain(const ExactComplex& c) {
        if (domain_ == Domain::exact)
            return Coefficient(c);
        return Coefficient(exact_to_approx(c));
    }

    PuiseuxSeries::Term parse_term(bool negative) {
        ExactComplex c{Rational(1)};
        Rational q(0);
        bool have_mono = false;

        if (peek() == 'x') {
            q = mono();
            have_mono = true;
        } else if (peek() == '(') {
            ++pos_;
            skip_ws();
            c = complex_body();
            skip_ws();
            expect(')', ")");
        } else if (digit_ahead() || peek() == '.') {
            c = ExactComplex{rational_or_decimal()};
        } else {
            fail({"number", "(", "x"});
        }

        if (!have_mono) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                q = mono();
            }
        }
        if (negative)
            c = -c;
        return {q, to_domain(c)};
    }
};

std::string double_str(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

// Coefficient magnitude rendering; sign is handled by the caller for
// real coefficients, complex ones keep their signs inside parentheses.
struct CoeffText {
    std::string text; // empty when the implicit 1 can be omitted
    bool negative;    // extracted sign (real coefficients only)
};

CoeffText coeff_text(const Coefficient& c, bool has_mono) {
    if (c.domain() == Domain::exact) {
        const ExactComplex& e = c.exact();
        if (e.im.is_zero()) {
            Rational mag = e.re.sign() < 0 ? -e.re : e.re;
            bool neg = e.re.sign() < 0;
            if (has_mono && mag == Rational(1))
                return {"", neg};
            if (mag.is_integer())
                return {mag.str(), neg};
            return {"(" + mag.str() + ")", neg};
        }
        // canonical complex form "(a+b*i)"
        std::string body = e.re.str() + (e.im.sign() < 0 ? "-" + (-e.im).str() : "+" + e.im.str()) + "*i";
        return {"(" + body + ")", false};
    }
    const ApproxComplex& a = c.approx();
    if (a.im == 0.0) {
        bool neg = std::signbit(a.re);
        double mag = neg ? -a.re : a.re;
        if (has_mono && mag == 1.0)
            return {"", neg};
        return {double_str(mag), neg};
    }
    std::string body = double_str(a.re) + (std::signbit(a.im) ? "-" + double_str(-a.im) : "+" + double_str(a.im)) + "*i";
    return {"(" + body + ")", false};
}

std::string mono_text(const Rational& q) {
    if (q.is_zero())
        return "";
    if (q == Rational(1))
        return "x";
    if (q.is_integer() && q.sign() > 0)
        return "x^" + q.str();
    return "x^(" + q.str() + ")";
}

} // namespace

PuiseuxSeries parse_series(const SeriesText& text, Domain domain) {
    return SeriesParser(text, domain).run();
}

SeriesText format_series(const PuiseuxSeries& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string mono = mono_text(t.exponent);
        CoeffText c = coeff_text(t.coeff, !mono.empty());
        if (first) {
            if (c.negative)
                out += "-";
            first = false;
        } else {
            out += c.negative ? " - " : " + ";
        }
        if (c.text.empty())
            out += mono.empty() ? "1" : mono;
        else
            out += c.text + (mono.empty() ? "" : "*" + mono);
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    return Rational::from_string(text);
}

} // namespace alphacalc
