#include <doctest.h>

#include <random>

#include "alphacalc/random_series.hpp"
#include "test_util.hpp"

using namespace alphacalc;
using namespace alphacalc::testing;

TEST_CASE("parse_series basics") {
    PuiseuxSeries f = parse_series("3*x^(3/2) - 2*x^(-1/3)", Domain::exact);
    CHECK(f.ramification() == 6);
    REQUIRE(f.terms().size() == 2);
    CHECK(f.terms()[0].exponent == rat("-1/3"));
    CHECK(f.terms()[0].coeff == exact_coeff(-2));
    CHECK(f.terms()[1].exponent == rat("3/2"));
    CHECK(f.terms()[1].coeff == exact_coeff(3));
    CHECK(!f.trunc().has_value());

    PuiseuxSeries x = parse_series("x", Domain::exact);
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms()[0].exponent == Rational(1));
    CHECK(x.terms()[0].coeff == exact_coeff(1));
}

TEST_CASE("parse_series error positions") {
    try {
        parse_series("x^^2", Domain::exact);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 2);
        CHECK(!e.expected().empty());
    }
    CHECK_THROWS_AS(parse_series("", Domain::exact), SyntaxError);
    CHECK_THROWS_AS(parse_series("x +", Domain::exact), SyntaxError);
    CHECK_THROWS_AS(parse_series("2x", Domain::exact), SyntaxError);
    CHECK_THROWS_AS(parse_series("x^(1/2", Domain::exact), SyntaxError);
    CHECK_THROWS_AS(parse_series("* x", Domain::exact), SyntaxError);
}

TEST_CASE("parse_series coefficients and sugar") {
    CHECK(parse_series("-x", Domain::exact).terms()[0].coeff == exact_coeff(-1));
    CHECK(parse_series("+x", Domain::exact).terms()[0].coeff == exact_coeff(1));
    CHECK(parse_series("0.5*x", Domain::exact).terms()[0].coeff == exact_coeff(1, 2));
    CHECK(parse_series("x^2", Domain::exact).terms()[0].exponent == Rational(2));
    CHECK(parse_series("7", Domain::exact).terms()[0].exponent == Rational(0));
    CHECK(parse_series("x + x", Domain::exact) == exact_series("2*x"));
    CHECK(parse_series("x - x", Domain::exact).is_exact_zero());

    PuiseuxSeries c = parse_series("(1/2+3/4*i)*x^(-2)", Domain::exact);
    CHECK(c.terms()[0].coeff == Coefficient(ExactComplex{rat("1/2"), rat("3/4")}));

    PuiseuxSeries cd = parse_series("(0.5-0.25*i)", Domain::exact);
    CHECK(cd.terms()[0].coeff == Coefficient(ExactComplex{rat("1/2"), rat("-1/4")}));

    PuiseuxSeries a = parse_series("1.5*x", Domain::approx);
    CHECK(a.terms()[0].coeff == Coefficient(ApproxComplex{1.5, 0.0}));
}

TEST_CASE("format_series canonical forms") {
    CHECK(format_series(exact_series("x^(1/2) + x")) == "x^(1/2) + x");
    CHECK(format_series(exact_zero()) == "0");
    CHECK(format_series(exact_series("(1/2)*x^(-1)")) == "(1/2)*x^(-1)");
    CHECK(format_series(exact_series("3 - 2*x")) == "3 - 2*x");
    CHECK(format_series(exact_series("-x + 1")) == "1 - x");
    CHECK(format_series(exact_series("1*x^(-1/3) + 0*x - x^(-1/3)")) == "0");
}

TEST_CASE("round trip on 1000 random finite exact series") {
    SeriesGen gen(8675309);
    for (int i = 0; i < 1000; ++i) {
        PuiseuxSeries f = gen.series(8);
        CHECK(parse_series(format_series(f), Domain::exact) == f);
    }
}

TEST_CASE("parser is total on arbitrary bytes") {
    std::mt19937_64 rng(1319);
    const char alphabet[] = "x^()+-*/0123456789.i eE,";
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        std::size_t len = rng() % 24;
        for (std::size_t k = 0; k < len; ++k)
            s += alphabet[rng() % (sizeof(alphabet) - 1)];
        try {
            (void)parse_series(s, Domain::exact);
        } catch (const SyntaxError& e) {
            CHECK(e.offset() <= s.size());
        } catch (const ZeroDenominatorError&) {
            // "x^(1/0)" style inputs land here
        }
    }
}

TEST_CASE("parse_rational op") {
    CHECK(parse_rational("1/2") == rat("1/2"));
    CHECK(parse_rational("0.25") == rat("1/4"));
    CHECK_THROWS_AS(parse_rational("3/0"), ZeroDenominatorError);
}
