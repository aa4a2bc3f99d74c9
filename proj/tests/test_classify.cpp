#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "galcurve/classify.hpp"

using namespace galcurve;

namespace {

CurvatureProfile profile(const char* kg, const char* kn, const char* tg,
                         const Grid& g = Grid(0.1, 3.0, 1000)) {
    return {Expression::parse(kg), Expression::parse(kn), Expression::parse(tg),
            g};
}

}  // namespace

TEST_CASE("constant geodesic profile is a circular helix") {
    const ClassificationReport r = classify_profile(profile("0", "2", "3"), 1e-9);
    CHECK(r.is_geodesic);
    CHECK_FALSE(r.is_asymptotic);
    CHECK_FALSE(r.is_line_of_curvature);
    CHECK(r.helix_type == HelixType::circular_helix);
    CHECK(r.residuals.at("tau_mean") == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(r.residuals.at("kappa_mean") == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("vanishing geodesic torsion marks a line of curvature") {
    const ClassificationReport r = classify_profile(profile("3", "4", "0"), 1e-9);
    CHECK(r.is_line_of_curvature);
    CHECK_FALSE(r.is_geodesic);
    CHECK_FALSE(r.is_asymptotic);
    // tau = 0 for constant curvatures, so the helix degenerates to a
    // plane curve even though the family residuals all vanish
    CHECK(r.helix_type == HelixType::plane_curve);
    CHECK(r.residuals.at("circular_helix_residual") == 0.0);
}

TEST_CASE("rotating line of curvature is a circular helix") {
    const ClassificationReport r =
        classify_profile(profile("cos(x)", "sin(x)", "0", Grid(0.1, 1.0, 1000)),
                         1e-9);
    CHECK(r.is_line_of_curvature);
    CHECK(r.helix_type == HelixType::circular_helix);
    CHECK(r.residuals.at("circular_helix_residual") < 1e-10);
    CHECK(r.residuals.at("tau_mean") == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("rotating profile with unit torsion stays a circular helix") {
    const ClassificationReport r =
        classify_profile(profile("cos(x)", "sin(x)", "1"), 1e-9);
    CHECK_FALSE(r.is_geodesic);
    CHECK_FALSE(r.is_asymptotic);
    CHECK_FALSE(r.is_line_of_curvature);
    CHECK(r.helix_type == HelixType::circular_helix);
    CHECK(r.residuals.at("tau_mean") == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("sine-curvature geodesic is anti-Salkowski") {
    const ClassificationReport r =
        classify_profile(profile("0", "sin(x)", "1"), 1e-9);
    CHECK(r.is_geodesic);
    CHECK(r.helix_type == HelixType::anti_salkowski);
}

TEST_CASE("growing curvature with drifting torsion is generic") {
    const ClassificationReport r = classify_profile(profile("x", "1", "2"), 1e-9);
    CHECK_FALSE(r.is_geodesic);
    CHECK_FALSE(r.is_asymptotic);
    CHECK_FALSE(r.is_line_of_curvature);
    CHECK(r.helix_type == HelixType::generic);
}

TEST_CASE("zero curvature is a straight line") {
    const ClassificationReport r = classify_profile(profile("0", "0", "5"), 1e-9);
    CHECK(r.helix_type == HelixType::straight_line);
    CHECK(r.is_geodesic);
    CHECK(r.is_asymptotic);
    CHECK_FALSE(r.is_line_of_curvature);
}

TEST_CASE("constant curvature with varying torsion is Salkowski") {
    // tau = -tau_g for kappa_g = 0 and constant kappa_n
    const ClassificationReport r =
        classify_profile(profile("0", "2", "1+x"), 1e-9);
    CHECK(r.helix_type == HelixType::salkowski);
}

TEST_CASE("proportional torsion gives a generalized helix") {
    // kappa = |sin x| on (0, pi); tau = -tau_g = -2 sin x, so tau/kappa = -2
    const ClassificationReport r =
        classify_profile(profile("0", "sin(x)", "2*sin(x)"), 1e-6);
    CHECK(r.helix_type == HelixType::generalized_helix);
}

TEST_CASE("family residuals for constants vanish exactly") {
    const Grid g(0.1, 3.0, 200);
    const auto res = line_of_curvature_residuals(Expression::constant(3.0),
                                                 Expression::constant(4.0), g);
    CHECK(res.at("circular_helix") == 0.0);
    CHECK(res.at("generalized_helix") == 0.0);
    CHECK(res.at("salkowski") == 0.0);
    CHECK(res.at("anti_salkowski") == 0.0);
}

TEST_CASE("rotating pair satisfies the circular-helix conditions") {
    const Grid g(0.1, 3.0, 200);
    const auto res = line_of_curvature_residuals(Expression::parse("cos(x)"),
                                                 Expression::parse("sin(x)"), g);
    CHECK(res.at("circular_helix") < 1e-10);
    CHECK(res.at("salkowski") < 1e-10);
}

TEST_CASE("linear geodesic curvature violates the Salkowski condition") {
    const Grid g(0.1, 3.0, 200);
    const auto res = line_of_curvature_residuals(Expression::parse("x"),
                                                 Expression::constant(1.0), g);
    CHECK(res.at("salkowski") == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("circular-helix residual dominates the Salkowski residual") {
    const Grid g(0.1, 3.0, 128);
    for (const auto& [kg, kn] :
         std::initializer_list<std::pair<const char*, const char*>>{
             {"x", "1"}, {"sin(x)", "x^2"}, {"exp(x/2)", "cos(x)"}}) {
        const auto res = line_of_curvature_residuals(Expression::parse(kg),
                                                     Expression::parse(kn), g);
        CHECK(res.at("circular_helix") >= res.at("salkowski"));
    }
}

TEST_CASE("scaling kappa_g never touches the other family flags") {
    for (double s : {2.0, -3.0, 0.5}) {
        const std::string scaled = "(" + std::to_string(s) + ")*cos(x)";
        const ClassificationReport a =
            classify_profile(profile("cos(x)", "sin(x)", "0"), 1e-9);
        const ClassificationReport b =
            classify_profile(profile(scaled.c_str(), "sin(x)", "0"), 1e-9);
        CHECK(a.is_asymptotic == b.is_asymptotic);
        CHECK(a.is_line_of_curvature == b.is_line_of_curvature);
    }
}

TEST_CASE("flags are stable under grid refinement") {
    for (const auto& [kg, kn, tg] :
         std::initializer_list<std::tuple<const char*, const char*, const char*>>{
             {"0", "2", "3"},
             {"cos(x)", "sin(x)", "1"},
             {"x", "1", "2"},
             {"0", "sin(x)", "1"}}) {
        const ClassificationReport a =
            classify_profile(profile(kg, kn, tg, Grid(0.1, 3.0, 500)), 1e-9);
        const ClassificationReport b =
            classify_profile(profile(kg, kn, tg, Grid(0.1, 3.0, 1000)), 1e-9);
        CHECK(a.is_geodesic == b.is_geodesic);
        CHECK(a.is_asymptotic == b.is_asymptotic);
        CHECK(a.is_line_of_curvature == b.is_line_of_curvature);
        CHECK(a.helix_type == b.helix_type);
    }
}

TEST_CASE("isolated curvature zeros suppress the torsion labels") {
    // kappa = |sin x| dips below the tolerance near x = pi
    const ClassificationReport r = classify_profile(
        profile("0", "sin(x)", "1", Grid(0.1, 3.2, 1000)), 1e-3);
    CHECK(r.is_geodesic);
    CHECK(r.residuals.at("tau_excluded_nodes") > 0.0);
    CHECK(r.helix_type == HelixType::generic);
}

TEST_CASE("tolerance must be positive") {
    CHECK_THROWS_AS(classify_profile(profile("0", "1", "1"), 0.0),
                    std::invalid_argument);
}
