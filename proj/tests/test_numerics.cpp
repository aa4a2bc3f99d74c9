#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "galcurve/numerics.hpp"
#include "support/oracles.hpp"

using namespace galcurve;

TEST_CASE("grid validates its invariants") {
    CHECK_THROWS_AS(Grid(0.0, 1.0, 7), std::invalid_argument);   // odd
    CHECK_THROWS_AS(Grid(0.0, 1.0, 6), std::invalid_argument);   // too coarse
    CHECK_THROWS_AS(Grid(1.0, 0.0, 16), std::invalid_argument);  // reversed
    const Grid g(0.25, 2.25, 16);
    CHECK(g.h * g.n == doctest::Approx(g.b - g.a).epsilon(1e-12));
    CHECK(g.node(0) == 0.25);
    CHECK(g.node(16) == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("cumulative integral of cos reaches sin") {
    const Grid g(0.0, std::numbers::pi / 2, 512);
    const SampledFn F =
        cumulative_integral(sample(g, [](double x) { return std::cos(x); }));
    CHECK(F[0] == 0.0);
    CHECK(std::fabs(F[g.n] - 1.0) < 1e-9);
    for (int k = 0; k <= g.n; ++k)
        CHECK(std::fabs(F[k] - std::sin(g.node(k))) < 1e-9);
}

TEST_CASE("cumulative integral is exact for constants and quadratics") {
    const Grid g(0.0, 2.0, 100);
    const SampledFn F = cumulative_integral(sample(g, [](double) { return 1.0; }));
    for (int k = 0; k <= g.n; ++k)
        CHECK(std::fabs(F[k] - g.node(k)) < 1e-12);

    const SampledFn Q = cumulative_integral(
        sample(g, [](double x) { return 3.0 * x * x + 2.0 * x + 1.0; }));
    for (int k = 0; k <= g.n; ++k) {
        const double x = g.node(k);
        CHECK(std::fabs(Q[k] - (x * x * x + x * x + x)) < 1e-12);
    }
}

TEST_CASE("triple application builds x^3/6") {
    const Grid g(0.0, 1.0, 64);
    SampledFn f = sample(g, [](double) { return 1.0; });
    f = cumulative_integral(cumulative_integral(cumulative_integral(f)));
    CHECK(std::fabs(f[g.n] - 1.0 / 6.0) < 1e-9);
}

TEST_CASE("halving the step cuts the endpoint error by the Simpson factor") {
    const auto endpoint_error = [](int n) {
        const Grid g(0.0, 1.0, n);
        const SampledFn F =
            cumulative_integral(sample(g, [](double x) { return std::exp(x); }));
        return std::fabs(F[g.n] - (std::numbers::e - 1.0));
    };
    const double e128 = endpoint_error(128);
    const double e256 = endpoint_error(256);
    CHECK(e128 / e256 >= 12.0);
}

TEST_CASE("fornberg weights reproduce the classical stencils") {
    const double h = 0.125;
    {
        const double nodes[] = {-h, 0.0, h};
        const auto w = fd_weights(0.0, nodes, 1);
        CHECK(w[0] == doctest::Approx(-1.0 / (2 * h)));
        CHECK(w[1] == doctest::Approx(0.0));
        CHECK(w[2] == doctest::Approx(1.0 / (2 * h)));
    }
    {
        const double nodes[] = {0.0, h, 2 * h};
        const auto w = fd_weights(0.0, nodes, 1);
        CHECK(w[0] == doctest::Approx(-3.0 / (2 * h)));
        CHECK(w[1] == doctest::Approx(4.0 / (2 * h)));
        CHECK(w[2] == doctest::Approx(-1.0 / (2 * h)));
    }
    {
        const double nodes[] = {-h, 0.0, h};
        const auto w = fd_weights(0.0, nodes, 2);
        CHECK(w[0] == doctest::Approx(1.0 / (h * h)));
        CHECK(w[1] == doctest::Approx(-2.0 / (h * h)));
        CHECK(w[2] == doctest::Approx(1.0 / (h * h)));
    }
    {
        const double nodes[] = {0.0, h, 2 * h, 3 * h};
        const auto w = fd_weights(0.0, nodes, 2);
        CHECK(w[0] == doctest::Approx(2.0 / (h * h)));
        CHECK(w[1] == doctest::Approx(-5.0 / (h * h)));
        CHECK(w[2] == doctest::Approx(4.0 / (h * h)));
        CHECK(w[3] == doctest::Approx(-1.0 / (h * h)));
    }
}

TEST_CASE("first derivative of x^2 is 2x everywhere") {
    const Grid g(0.0, 1.0, 100);
    const SampledFn d =
        derivative(sample(g, [](double x) { return x * x; }), 1);
    for (int k = 0; k <= g.n; ++k)
        CHECK(std::fabs(d[k] - 2.0 * g.node(k)) < 1e-8);
}

TEST_CASE("second derivative of sin is -sin") {
    const Grid g(0.0, std::numbers::pi, 1024);
    const SampledFn d =
        derivative(sample(g, [](double x) { return std::sin(x); }), 2);
    for (int k = 0; k <= g.n; ++k)
        CHECK(std::fabs(d[k] + std::sin(g.node(k))) < 1e-4);
}

TEST_CASE("derivative of a constant vanishes") {
    const Grid g(-1.0, 1.0, 32);
    const SampledFn d = derivative(sample(g, [](double) { return 4.25; }), 1);
    for (int k = 0; k <= g.n; ++k) CHECK(std::fabs(d[k]) < 1e-12);
}

TEST_CASE("third derivative and fourth-order accuracy") {
    const Grid g(0.0, 1.0, 64);
    const SampledFn f = sample(g, [](double x) { return std::exp(x); });
    const SampledFn d3 = derivative(f, 3, 2);
    for (int k = 0; k <= g.n; ++k)
        CHECK(std::fabs(d3[k] - std::exp(g.node(k))) < 2e-3);

    for (int order : {1, 2, 3}) {
        const SampledFn d = derivative(f, order, 4);
        for (int k = 0; k <= g.n; ++k)
            CHECK(std::fabs(d[k] - std::exp(g.node(k))) < 1e-6);
    }
}

TEST_CASE("derivative undoes the cumulative integral away from boundaries") {
    const Grid g(0.0, std::numbers::pi, 256);
    const SampledFn f = sample(g, [](double x) { return std::cos(x); });
    const SampledFn back = derivative(cumulative_integral(f), 1);
    for (int k = 2; k <= g.n - 2; ++k)
        CHECK(std::fabs(back[k] - f[k]) < 1e-4);
}

TEST_CASE("argument validation") {
    const Grid g(0.0, 1.0, 16);
    const SampledFn f = sample(g, [](double x) { return x; });
    CHECK_THROWS_AS(derivative(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(derivative(f, 4), std::invalid_argument);
    CHECK_THROWS_AS(derivative(f, 1, 3), std::invalid_argument);
    SampledFn broken = f;
    broken.values.pop_back();
    CHECK_THROWS_AS(derivative(broken, 1), std::invalid_argument);
    CHECK_THROWS_AS(cumulative_integral(broken), std::invalid_argument);
}
