#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/errors.hpp"
#include "test_support.hpp"

using namespace binform;
using test::P;
using test::Q;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rational q = make_rational(4, -6);
    CHECK(q.get_num() == -2);
    CHECK(q.get_den() == 3);
    CHECK(to_string(q) == "-2/3");
    CHECK(to_string(Q("6/3")) == "2");
    CHECK(Q(" -7 / 21 ") == make_rational(-1, 3));
    CHECK_THROWS_AS(Q("1/0"), DomainError);
    CHECK_THROWS_AS(Q("x"), DomainError);
}

TEST_CASE("integer helpers") {
    CHECK(binomial_coefficient(7, 3) == 35);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 3) == 60);
    CHECK(falling_factorial(2, 4) == 0);
    CHECK(falling_factorial(-2, 2) == 6);
    CHECK(factorial(6) == 720);
}

TEST_CASE("additive cancellation and multiplicative identity") {
    CHECK(P("(a0 + a1) + (-a1)") == P("a0"));
    CHECK(P("(a0*a2 - a1^2) * 1") == P("a0*a2 - a1^2"));
}

TEST_CASE("square of x - 1/2") {
    CHECK(P("(x - 1/2)^2") == P("x^2 - x + 1/4"));
}

TEST_CASE("canonical form: p - p vanishes with an empty term map") {
    test::RandomPolys gen(7, test::coeff_pool(Series::a, 5));
    for (int i = 0; i < 100; ++i) {
        Polynomial p = gen.next();
        Polynomial z = p - p;
        CHECK(z.is_zero());
        CHECK(z.term_count() == 0);
    }
}

TEST_CASE("ring axioms hold exactly on random triples") {
    auto pool = test::coeff_pool(Series::a, 4);
    pool.push_back(Variable::x());
    test::RandomPolys gen(11, pool);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = gen.next(), q = gen.next(), r = gen.next();
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("integer power: repeated product, negative exponent rejected by grammar") {
    Polynomial p = P("a0 + a1");
    CHECK(p.pow(0) == Polynomial(1));
    CHECK(p.pow(3) == p * p * p);
    CHECK_THROWS_AS(P("a0^-1"), ParseError);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto pool = test::coeff_pool(Series::a, 3);
    test::RandomPolys gen(23, pool);
    std::map<Variable, Polynomial> bind;
    for (unsigned i = 0; i <= 3; ++i)
        bind.emplace(Variable::coefficient(Series::a, i), P("x^2 - " + std::to_string(i) + "*x + 1/3"));
    for (int i = 0; i < 40; ++i) {
        Polynomial p = gen.next(), q = gen.next();
        CHECK((p + q).substituted(bind) == p.substituted(bind) + q.substituted(bind));
        CHECK((p * q).substituted(bind) == p.substituted(bind) * q.substituted(bind));
    }
}

TEST_CASE("substitution examples") {
    Polynomial hess = P("a0*a2 - a1^2");
    std::map<Variable, Polynomial> ones;
    for (unsigned i = 0; i <= 2; ++i) ones.emplace(Variable::coefficient(Series::a, i), Polynomial(1));
    CHECK(hess.substituted(ones).is_zero());

    std::map<Variable, Polynomial> rename{{Variable::coefficient(Series::a, 1), P("x^2")}};
    CHECK(P("a1").substituted(rename) == P("x^2"));

    std::map<Variable, Polynomial> bernoulli{
        {Variable::coefficient(Series::a, 0), P("1")},
        {Variable::coefficient(Series::a, 1), P("x - 1/2")},
        {Variable::coefficient(Series::a, 2), P("x^2 - x + 1/6")}};
    CHECK(hess.substituted(bernoulli) == Polynomial(make_rational(-1, 12)));
}

TEST_CASE("substitution reports the missing variable") {
    std::map<Variable, Polynomial> partial{{Variable::coefficient(Series::a, 0), Polynomial(1)}};
    try {
        P("a0*a2").substituted(partial);
        FAIL("expected MissingBindingError");
    } catch (const MissingBindingError& e) {
        CHECK(e.variable == "a2");
    }
}

TEST_CASE("diff_x: power rule, constants, composite") {
    CHECK(diff_x(P("x^2 - x + 1/6")) == P("2*x - 1"));
    CHECK(diff_x(P("7/3")).is_zero());
    CHECK(diff_x(P("(x - 1/2)^2")) == P("2*x - 1"));
    CHECK_THROWS_AS(diff_x(P("X*x")), DomainError);
}

TEST_CASE("diff_x satisfies the Leibniz rule on random pairs") {
    std::vector<Variable> pool{Variable::x(), Variable::coefficient(Series::a, 0),
                               Variable::coefficient(Series::a, 1)};
    test::RandomPolys gen(31, pool);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = gen.next(), q = gen.next();
        CHECK(diff_x(p * q) == diff_x(p) * q + p * diff_x(q));
    }
}

TEST_CASE("degree bookkeeping is consistent with the term map") {
    Polynomial p = P("a0^2*a2*x^3 - a1*x");
    CHECK(p.total_degree() == 6);
    CHECK(p.degree_in(Variable::x()) == 3);
    CHECK(p.degree_in(Variable::coefficient(Series::a, 0)) == 2);
    CHECK(p.degree_in(Variable::coefficient(Series::b, 0)) == 0);
}

TEST_CASE("variable ordering drives canonical printing") {
    // a-series before b-series, lower index first, then x, then X, Y.
    CHECK(format_polynomial(P("b0 + a1 + a0 + x + Y + X")) == "a0 + a1 + b0 + x + X + Y");
    CHECK(format_polynomial(P("a1^2 - a0*a2")) == "-a0*a2 + a1^2");
}

TEST_CASE("exact quotient round trips and rejects non-divisors") {
    test::RandomPolys gen(43, test::coeff_pool(Series::a, 3));
    for (int i = 0; i < 40; ++i) {
        Polynomial p = gen.next(), q = gen.next();
        if (q.is_zero()) continue;
        CHECK(exact_quotient(p * q, q) == p);
    }
    CHECK_THROWS_AS(exact_quotient(P("a0*a2 - a1^2"), P("a0 + 1")), InternalError);
}
