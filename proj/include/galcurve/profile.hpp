#pragma once

#include "galcurve/expr.hpp"
#include "galcurve/numerics.hpp"

namespace galcurve {

/// Prescribed Darboux curvature data: geodesic curvature, normal
/// curvature and geodesic torsion as functions of the arc-length
/// parameter, together with the grid they are evaluated on.
struct CurvatureProfile {
    Expression kappa_g;
    Expression kappa_n;
    Expression tau_g;
    Grid domain;
};

inline SampledFn sample(const Grid& g, const Expression& e) {
    return sample(g, [&](double x) { return e.eval(x); });
}

}  // namespace galcurve
