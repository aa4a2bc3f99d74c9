#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "galcurve/galilean.hpp"
#include "galcurve/numerics.hpp"
#include "galcurve/profile.hpp"

namespace galcurve {

/// Curvature vanished where a frame, torsion or division by kappa^2 was
/// needed. nodes() lists the offending grid indices.
class DegenerateCurvatureError : public std::runtime_error {
public:
    DegenerateCurvatureError(const std::string& message, std::vector<int> nodes)
        : std::runtime_error(message), nodes_(std::move(nodes)) {}
    const std::vector<int>& nodes() const { return nodes_; }

private:
    std::vector<int> nodes_;
};

/// Admissible curve (x, y(x), z(x)) sampled on a grid. The first
/// coordinate of every point equals the grid node, i.e. the curve is
/// parameterized by Galilean arc length.
struct SampledCurve {
    Grid grid;
    std::vector<GalVec3> points;
    bool admissible = false;
};

/// Builds a SampledCurve and checks the arc-length parameterization.
SampledCurve make_sampled_curve(const Grid& g, std::vector<GalVec3> points);

template <typename FY, typename FZ>
SampledCurve sample_curve(const Grid& g, FY&& y, FZ&& z) {
    std::vector<GalVec3> pts(static_cast<size_t>(g.points()));
    for (int k = 0; k <= g.n; ++k) {
        const double x = g.node(k);
        pts[static_cast<size_t>(k)] = {x, y(x), z(x)};
    }
    return make_sampled_curve(g, std::move(pts));
}

struct FrenetApparatus {
    std::vector<GalVec3> T;
    std::vector<GalVec3> N;
    std::vector<GalVec3> B;
    std::vector<double> kappa;
    std::vector<double> tau;
};

struct FrenetOptions {
    /// Compute N, B and tau; requires kappa > kappa_min on the whole grid.
    bool frame = true;
    double kappa_min = 1e-8;
    /// Stencil accuracy for the first and second curve derivatives (2 or 4).
    /// Third derivatives always use noise-balanced strided windows.
    int accuracy = 4;
};

/// Frenet apparatus from samples. T keeps its exact unit first component;
/// kappa = ||alpha''||, tau = (y'' z''' - z'' y''') / kappa^2 in the
/// admissible form. Throws DegenerateCurvatureError when a frame is
/// requested across nodes with kappa <= kappa_min.
FrenetApparatus frenet_apparatus(const SampledCurve& c,
                                 const FrenetOptions& options = {});

struct DarbouxApparatus {
    std::vector<GalVec3> T;
    std::vector<GalVec3> Q;
    std::vector<GalVec3> n;
    std::vector<double> kappa_g;
    std::vector<double> kappa_n;
    std::vector<double> tau_g;
};

/// Darboux apparatus of a curve with respect to a surface normal field
/// supplied along it. Q = T x_G n, which matches the orientation of the
/// closed-form frame fields produced by synthesis; kappa_g = alpha''.Q,
/// kappa_n = alpha''.n, tau_g = Q'.n with Q' by finite differences.
/// The normals must be isotropic unit vectors.
DarbouxApparatus darboux_apparatus(const SampledCurve& c,
                                   std::span<const GalVec3> normal);

struct KtValues {
    double kappa_sq;
    double tau;
};

/// Compatibility relations between the Frenet and Darboux data:
/// kappa^2 = kappa_g^2 + kappa_n^2 and
/// tau = -tau_g + (kappa_g' kappa_n - kappa_g kappa_n') / kappa^2,
/// with the derivatives taken symbolically.
KtValues kt_relations(const CurvatureProfile& p, double x);

}  // namespace galcurve
