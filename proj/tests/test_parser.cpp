#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/errors.hpp"
#include "test_support.hpp"

using namespace binform;
using test::P;

TEST_CASE("grammar basics") {
    CHECK(P("a0*a2 - a1^2") == Polynomial::variable(Variable::coefficient(Series::a, 0)) *
                                       Polynomial::variable(Variable::coefficient(Series::a, 2)) -
                                   Polynomial::variable(Variable::coefficient(Series::a, 1), 2));
    CHECK(P("3/2*x^2") == Polynomial::term(make_rational(3, 2), Monomial::of(Variable::x(), 2)));
    CHECK(P("a{12}") == Polynomial::variable(Variable::coefficient(Series::a, 12)));
    CHECK(P("  a0 \n + \t b1 ") == P("a0+b1"));
    CHECK(P("-(a0 - a1)^2") == -(P("a0") - P("a1")).pow(2));
    CHECK(P("2^3") == Polynomial(8));
    CHECK(P("0").is_zero());
}

TEST_CASE("latex rendering convention") {
    CHECK(format_polynomial(P("a0*a2 - a1^2"), PolyStyle::latex) == "a_{0} a_{2} - a_{1}^{2}");
    CHECK(format_polynomial(P("x^3 - 3*x"), PolyStyle::latex) == "x^{3} - 3 x");
    CHECK(format_polynomial(P("x^2 - x + 1/6"), PolyStyle::latex) == "x^{2} - x + \\frac{1}{6}");
}

TEST_CASE("plain format round trips") {
    auto pool = test::coeff_pool(Series::a, 12);
    auto bs = test::coeff_pool(Series::b, 3);
    pool.insert(pool.end(), bs.begin(), bs.end());
    pool.push_back(Variable::x());
    pool.push_back(Variable::X());
    pool.push_back(Variable::Y());
    test::RandomPolys gen(97, pool);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = gen.next(5, 4);
        CAPTURE(format_polynomial(p));
        CHECK(P(format_polynomial(p)) == p);
    }
    CHECK(P("0") == Polynomial());
    CHECK(format_polynomial(Polynomial()) == "0");
}

TEST_CASE("json round trips with string rationals") {
    Polynomial p = P("3/2*a0*a2 - a1^2 + x - 7");
    auto j = polynomial_to_json(p);
    CHECK(j["terms"][0]["coeff"].get<std::string>() == "3/2");
    CHECK(polynomial_from_json(j) == p);
    Polynomial q = P("a{11}^2*b0 - 2/3");
    CHECK(polynomial_from_json(polynomial_to_json(q)) == q);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        P("a0 +\n 3*");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(P("e3"), ParseError);       // unknown variable
    CHECK_THROWS_AS(P("a0 a1"), ParseError);    // implicit products are not in the grammar
    CHECK_THROWS_AS(P("(a0"), ParseError);
    CHECK_THROWS_AS(P("a"), ParseError);        // series letter without index
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("index range checking against a declared order") {
    CHECK(parse_polynomial("a3", 3) == P("a3"));
    CHECK_THROWS_AS(parse_polynomial("a4", 3), ParseError);
    try {
        parse_polynomial("a0 + b{12}", 5);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("format determinism: equal polynomials print identically") {
    Polynomial p = P("a0*a2 - a1^2 + 1/3*x");
    Polynomial q = P("1/3*x + a0*a2 - a1^2");
    CHECK(p == q);
    CHECK(format_polynomial(p) == format_polynomial(q));
    CHECK(format_polynomial(p) == "a0*a2 - a1^2 + 1/3*x");
}
