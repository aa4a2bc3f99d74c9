#pragma once

#include <map>
#include <string>
#include <string_view>

#include "galcurve/profile.hpp"

namespace galcurve {

enum class HelixType {
    straight_line,
    plane_curve,
    circular_helix,
    generalized_helix,
    salkowski,
    anti_salkowski,
    generic
};

std::string_view to_string(HelixType type);

/// Family flags, helix label and the diagnostic residuals behind them.
/// Flags test the sup norm of the corresponding curvature function
/// against the tolerance; the helix label follows the most specific match
/// in the order straight line, plane curve, circular helix, generalized
/// helix, Salkowski, anti-Salkowski, generic.
struct ClassificationReport {
    bool is_geodesic = false;
    bool is_asymptotic = false;
    bool is_line_of_curvature = false;
    HelixType helix_type = HelixType::generic;
    std::map<std::string, double> residuals;
    double tolerance = 0.0;
};

ClassificationReport classify_profile(const CurvatureProfile& p, double tol);

/// Sup norms of the four line-of-curvature family conditions, evaluated
/// with symbolic derivatives:
///   salkowski          kappa_g kappa_g' + kappa_n kappa_n'
///   circular_helix     the above plus kappa_n kappa_g'' - kappa_g kappa_n''
///   generalized_helix  constancy of tau/kappa under tau_g = 0
///   anti_salkowski     constancy of tau under tau_g = 0
std::map<std::string, double> line_of_curvature_residuals(
    const Expression& kappa_g, const Expression& kappa_n, const Grid& g);

}  // namespace galcurve
