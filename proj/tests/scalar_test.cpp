#include <doctest.h>

#include "extalg/errors.hpp"
#include "extalg/polynomial.hpp"
#include "extalg/rational.hpp"
#include "extalg/rational_function.hpp"
#include "extalg/scalar_expr.hpp"

using namespace extalg;

namespace {
RationalFunction t() { return RationalFunction::variable(symbols::t()); }
RationalFunction alpha() { return RationalFunction::variable(symbols::alpha()); }
RationalFunction c(int n) { return RationalFunction(n); }
}  // namespace

TEST_CASE("rational parsing and normalization") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse(Rational(22, -7).str()) == Rational(-22, 7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDivisionError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("2x"), ParseError);
    CHECK_THROWS_AS(Rational(3, 4) / Rational(0), ZeroDivisionError);
}

TEST_CASE("polynomial arithmetic and canonical gcd") {
    Polynomial pt = Polynomial::variable(symbols::t());
    Polynomial square = (pt + Polynomial(1)) * (pt + Polynomial(1));
    CHECK(square == pt * pt + Polynomial(2) * pt + Polynomial(1));
    CHECK(square.total_degree() == 2);
    CHECK(square.term_count() == 3);

    Polynomial diff = pt * pt - Polynomial(1);
    CHECK(Polynomial::gcd(diff, square) == pt + Polynomial(1));
    CHECK(Polynomial::gcd(square, diff) == pt + Polynomial(1));
    CHECK(Polynomial::gcd(Polynomial::zero(), diff) == diff.primitive_part());

    Polynomial mixed = Polynomial(4) * pt + Polynomial(2);
    CHECK(mixed.content() == Rational(2));
    CHECK(mixed.primitive_part() == Polynomial(2) * pt + Polynomial(1));

    CHECK(diff.divided_exactly_by(pt - Polynomial(1)) == pt + Polynomial(1));
    CHECK_THROWS_AS(diff.divided_exactly_by(pt + Polynomial(2)), Error);

    Polynomial pa = Polynomial::variable(symbols::alpha());
    Polynomial two_var = pt * pa + pt;
    CHECK(two_var.substitute(symbols::alpha(), Rational(2)) == Polynomial(3) * pt);
    CHECK(two_var.degree_in(symbols::t()) == 1);
    CHECK(two_var.degree_in(symbols::alpha()) == 1);
}

TEST_CASE("rational function canonical form") {
    RationalFunction f = (t() * t() - c(1)) / (t() + c(1));
    CHECK(f == t() - c(1));
    CHECK(f.is_polynomial());

    CHECK((t() * t() + t()) / t() == t() + c(1));

    RationalFunction g = ((t() - c(1)).pow(4) * t()) / ((t() - c(1)).pow(2) * t().pow(2));
    CHECK(g.str() == "(t^2 - 2*t + 1)/t");
    CHECK(g * t() == (t() - c(1)).pow(2));

    CHECK(t().pow(-2) == c(1) / (t() * t()));
    CHECK_THROWS_AS(RationalFunction::zero().inverse(), ZeroDivisionError);
}

TEST_CASE("limits at t = 0") {
    CHECK((t() * t() + c(3) * t() + c(2)) / (t() + c(1)) == t() + c(2));
    CHECK(((t() * t() + c(3) * t() + c(2)) / (t() + c(1))).limit_t_zero() == c(2));
    CHECK(((alpha() * t() * t() + c(3) * t() + alpha()) / (t() + c(1))).limit_t_zero() ==
          alpha());
    CHECK_THROWS_AS((c(1) / t()).limit_t_zero(), PoleError);
    RationalFunction g = ((t() - c(1)).pow(4) * t()) / ((t() - c(1)).pow(2) * t().pow(2));
    CHECK_THROWS_AS(g.limit_t_zero(), PoleError);
    // (t^2+t)/t reduces to t+1, so the apparent pole cancels.
    CHECK(((t() * t() + t()) / t()).limit_t_zero() == c(1));
}

TEST_CASE("substitution and evaluation") {
    RationalFunction f = (alpha() * t() + c(1)) / (t() - alpha());
    CHECK(f.substitute(symbols::alpha(), Rational(2)) == (c(2) * t() + c(1)) / (t() - c(2)));
    std::map<SymbolId, Rational> point{{symbols::t(), Rational(3)}, {symbols::alpha(), Rational(1)}};
    CHECK(f.evaluate(point) == Rational(2));
    std::map<SymbolId, Rational> pole_point{{symbols::t(), Rational(1)},
                                            {symbols::alpha(), Rational(1)}};
    CHECK_THROWS_AS(f.evaluate(pole_point), EvaluationError);
    CHECK(f.substitute(symbols::t(), Rational(0)).substitute(symbols::alpha(), Rational(5)) ==
          c(-1) / c(5));
}

TEST_CASE("scalar expression parser") {
    CHECK(parse_scalar("t^2 - 2*t + 1") == (t() - c(1)).pow(2));
    CHECK(parse_scalar("t^-1") == c(1) / t());
    CHECK(parse_scalar("-3/4*a") == c(-3) / c(4) * alpha());
    CHECK(parse_scalar("(t+1)^2/(t-1)") == (t() + c(1)).pow(2) / (t() - c(1)));
    CHECK(parse_scalar("1/2 + 1/2") == c(1));
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("t +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/(t-t)"), ZeroDivisionError);

    std::vector<std::string> wide{"x", "y"};
    CHECK(parse_scalar("x*y^2", wide) ==
          RationalFunction::variable(symbols::intern("x")) *
              RationalFunction::variable(symbols::intern("y")).pow(2));
    CHECK_THROWS_AS(parse_scalar("t", wide), ParseError);

    CHECK(parse_rational("3/4 + 1/4") == Rational(1));
    CHECK_THROWS_AS(parse_rational("t"), ParseError);
}

TEST_CASE("scalar expression round trips through str") {
    for (const char* text : {"t", "a", "-t", "t^2 - 2*t + 1", "(t+1)/(t-1)", "a*t + 1/2",
                             "t^3/(a+1)", "5"}) {
        RationalFunction parsed = parse_scalar(text);
        CHECK(parse_scalar(parsed.str()) == parsed);
    }
}
