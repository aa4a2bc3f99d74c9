#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "galcurve/expr.hpp"
#include "support/oracles.hpp"

using namespace galcurve;

TEST_CASE("evaluation follows standard precedence") {
    CHECK(Expression::parse("2+3*x").eval(4.0) == 14.0);
    CHECK(Expression::parse("sin(x)^2").eval(std::numbers::pi / 2) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // unary minus binds looser than ^
    CHECK(Expression::parse("-x^2").eval(3.0) == -9.0);
    CHECK(Expression::parse("-2^2").eval(0.0) == -4.0);
    CHECK(Expression::parse("2^3^2").eval(0.0) == 512.0);
    CHECK(Expression::parse("2^-2").eval(0.0) == 0.25);
    CHECK(Expression::parse("6/3/2").eval(0.0) == 1.0);
    CHECK(Expression::parse("1-2-3").eval(0.0) == -4.0);
    CHECK(Expression::parse("2*x^2").eval(3.0) == 18.0);
}

TEST_CASE("named constants") {
    CHECK(Expression::parse("pi").eval(0.0) == std::numbers::pi);
    CHECK(Expression::parse("e").eval(0.0) == std::numbers::e);
    CHECK(Expression::parse("cos(pi)").eval(0.0) == doctest::Approx(-1.0));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(Expression::parse("2+"), ParseError);
    CHECK_THROWS_AS(Expression::parse("(1+2"), ParseError);
    CHECK_THROWS_AS(Expression::parse("1 2"), ParseError);
    try {
        Expression::parse("2*foo(x)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("foo") != std::string::npos);
    }
    try {
        Expression::parse("x+y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("unknown identifier") !=
              std::string::npos);
    }
}

TEST_CASE("evaluation basics and inverse pair") {
    CHECK(Expression::parse("cos(x)").eval(0.0) == 1.0);
    CHECK(Expression::parse("exp(log(x))").eval(2.5) ==
          doctest::Approx(2.5).epsilon(1e-12));
    CHECK(Expression::parse("abs(x)").eval(-3.5) == 3.5);
    CHECK(Expression::parse("0^0").eval(0.0) == 1.0);
}

TEST_CASE("domain errors name the offending subexpression") {
    try {
        Expression::parse("1+1/x").eval(0.0);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.subexpression() == "1/x");
        CHECK(std::string(e.what()).find("division by zero") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(Expression::parse("log(x)").eval(-1.0), DomainError);
    CHECK_THROWS_AS(Expression::parse("log(x)").eval(0.0), DomainError);
    CHECK_THROWS_AS(Expression::parse("sqrt(x)").eval(-2.0), DomainError);
    CHECK_THROWS_AS(Expression::parse("x^0.5").eval(-2.0), DomainError);
    CHECK_THROWS_AS(Expression::parse("x^-1").eval(0.0), DomainError);
    CHECK_THROWS_AS(Expression::parse("exp(x)").eval(1e9), DomainError);
    CHECK(Expression::parse("x^2").eval(-2.0) == 4.0);
}

TEST_CASE("derivatives of the base rules") {
    CHECK(Expression::parse("x^2").derivative().eval(3.0) == 6.0);
    CHECK(Expression::parse("sin(x)").derivative().eval(0.0) == 1.0);
    CHECK(Expression::parse("log(x)").derivative().eval(2.0) == 0.5);
    CHECK(Expression::parse("sqrt(x)").derivative().eval(4.0) == 0.25);
    CHECK(Expression::parse("abs(x)").derivative().eval(2.0) == 1.0);
    CHECK(Expression::parse("abs(x)").derivative().eval(-2.0) == -1.0);
    CHECK_THROWS_AS(Expression::parse("abs(x)").derivative().eval(0.0),
                    DomainError);
    CHECK(Expression::parse("exp(2*x)").derivative().eval(0.5) ==
          doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-14));
    CHECK(Expression::parse("tan(x)").derivative().eval(0.3) ==
          doctest::Approx(1.0 / std::pow(std::cos(0.3), 2)).epsilon(1e-14));
    // u^v with both sides varying
    const Expression xx = Expression::parse("x^x");
    CHECK(xx.derivative().eval(1.5) ==
          doctest::Approx(std::pow(1.5, 1.5) * (std::log(1.5) + 1.0))
              .epsilon(1e-14));
}

TEST_CASE("product-rule derivative agrees with central differences") {
    const Expression e = Expression::parse("sin(x)*x^2");
    const Expression d = e.derivative();
    const double fd =
        oracles::central_diff1([&](double t) { return e.eval(t); }, 1.0, 1e-5);
    CHECK(std::fabs(d.eval(1.0) - fd) < 1e-6);
}

TEST_CASE("derivative is linear") {
    oracles::RandomExprSource gen(101);
    for (int i = 0; i < 40; ++i) {
        const Expression a = Expression::parse(gen.make(2));
        const Expression b = Expression::parse(gen.make(2));
        const Expression sum_d = (a + b).derivative();
        const Expression da = a.derivative();
        const Expression db = b.derivative();
        for (int j = 0; j < 5; ++j) {
            const double x = gen.uniform(0.2, 2.8);
            try {
                const double lhs = sum_d.eval(x);
                const double rhs = da.eval(x) + db.eval(x);
                CHECK(std::fabs(lhs - rhs) <=
                      1e-12 * std::max(1.0, std::fabs(rhs)));
            } catch (const DomainError&) {
                // point outside the domain of one of the terms
            }
        }
    }
}

TEST_CASE("print-parse fixpoint evaluates identically") {
    oracles::RandomExprSource gen(202);
    std::vector<std::string> sources = {
        "2+3*x",     "-x^2",        "sin(x)^2*cos(x)", "1/(1+x^2)",
        "x^-2",      "exp(-x^2/2)", "2^-x",            "abs(x-1)+sqrt(x+2)",
        "-(x+1)^3",  "x/2/3",       "x-1-2",           "tan(x/4)",
    };
    for (int i = 0; i < 60; ++i) sources.push_back(gen.make(3));

    for (const auto& src : sources) {
        const Expression first = Expression::parse(src);
        const Expression second = Expression::parse(first.str());
        CHECK(second.str() == first.str());
        for (int j = 0; j < 100; ++j) {
            const double x = gen.uniform(-3.0, 3.0);
            double a = 0.0, b = 0.0;
            bool a_threw = false, b_threw = false;
            try {
                a = first.eval(x);
            } catch (const DomainError&) {
                a_threw = true;
            }
            try {
                b = second.eval(x);
            } catch (const DomainError&) {
                b_threw = true;
            }
            REQUIRE(a_threw == b_threw);
            if (!a_threw) CHECK(a == b);
        }
    }
}

TEST_CASE("second symbolic derivative matches second differences") {
    const std::vector<std::string> sources = {
        "sin(x)*x^2", "exp(-x^2/2)", "1/(1+x^2)", "tan(x/4)", "x^3-2*x",
        "cos(2*x)*sin(x)"};
    for (const auto& src : sources) {
        const Expression e = Expression::parse(src);
        const Expression d2 = e.derivative().derivative();
        for (double x : {0.3, 0.9, 1.7, 2.4}) {
            const double fd = oracles::central_diff2(
                [&](double t) { return e.eval(t); }, x, 1e-4);
            CHECK(std::fabs(d2.eval(x) - fd) <
                  1e-4 * std::max(1.0, std::fabs(fd)));
        }
    }
}

TEST_CASE("random expressions differentiate correctly") {
    oracles::RandomExprSource gen(303);
    int tested = 0;
    while (tested < 20) {
        Expression e = Expression::parse(gen.make(3));
        Expression d = e.derivative();
        int points = 0;
        for (int attempts = 0; attempts < 400 && points < 20; ++attempts) {
            const double x = gen.uniform(0.2, 2.8);
            double fd = 0.0;
            if (!oracles::fd_point_ok(e, x, 1e-5, &fd)) continue;
            double sym = 0.0;
            try {
                sym = d.eval(x);
            } catch (const DomainError&) {
                continue;
            }
            CHECK(std::fabs(sym - fd) <= 1e-6 * std::max(1.0, std::fabs(sym)));
            ++points;
        }
        if (points > 0) ++tested;
    }
}
