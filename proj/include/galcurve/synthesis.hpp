#pragma once

#include <stdexcept>
#include <vector>

#include "galcurve/frames.hpp"
#include "galcurve/galilean.hpp"
#include "galcurve/profile.hpp"

namespace galcurve {

/// The Darboux-coefficient construction divides by tau_g; it refuses
/// grids where the geodesic torsion gets within 1e-10 of zero.
class SingularTorsionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Turning angle t(x) = integral of tau_g from the left endpoint
/// (t(a) = 0) with its cosine and sine, the phase through which the
/// tangential-normal and the surface normal rotate in the isotropic plane.
struct TurningAngle {
    SampledFn t;
    SampledFn C;
    SampledFn S;
};

TurningAngle turning_angle(const CurvatureProfile& p);

/// Free constants of the special-family closed forms. c1..c4 weight the
/// line-of-curvature integrands; the defaults reproduce the tau_g -> 0
/// limit of the general synthesis at phase 0. phase shifts the turning
/// angle, rotating the frame in the isotropic plane.
struct FamilyConstants {
    double c1 = 0.0;
    double c2 = -1.0;
    double c3 = 1.0;
    double c4 = 0.0;
    double phase = 0.0;
};

/// Closed-form Darboux frame along the synthesized curve:
/// Q = (0, sin t, cos t), n = (0, cos t, -sin t) and the tangent with its
/// exact unit first component.
struct FrameFieldSet {
    std::vector<GalVec3> Q;
    std::vector<GalVec3> n;
    std::vector<GalVec3> T;
};

/// Reconstructs the curve whose Darboux curvature data against the frame
/// above equals the profile: the tangent derivative is
/// (0, kappa_g sin t + kappa_n cos t, kappa_g cos t - kappa_n sin t)
/// and is integrated twice from the left endpoint. The remaining
/// integration constants are affine in y and z and are taken as zero.
SampledCurve synthesize_natural(const CurvatureProfile& p, double phase = 0.0);

FrameFieldSet frame_fields(const CurvatureProfile& p, double phase = 0.0);

/// One-pass variant returning the curve together with its frame fields.
struct NaturalSynthesis {
    SampledCurve curve;
    FrameFieldSet frames;
};

NaturalSynthesis synthesize_with_frames(const CurvatureProfile& p,
                                        double phase = 0.0);

/// Position-vector coefficients beta = lambda1 T + lambda2 Q + lambda3 n
/// solving lambda1' = 1,
///         lambda1 kappa_g + lambda2' - lambda3 tau_g = 0,
///         lambda1 kappa_n + lambda2 tau_g + lambda3' = 0.
/// f is the forcing term lambda1 kappa_g / tau_g
/// - (lambda1 kappa_n / tau_g)' / tau_g, kept for diagnostics.
struct DarbouxCoefficients {
    SampledFn lambda1;
    SampledFn lambda2;
    SampledFn lambda3;
    SampledFn f;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

DarbouxCoefficients darboux_coefficients(const CurvatureProfile& p, double c1,
                                         double c2, double c3);

/// Family specializations. Geodesics have kappa_g = 0, asymptotic lines
/// kappa_n = 0; both delegate to synthesize_natural. Lines of curvature
/// (tau_g = 0) use the constant-coefficient closed form
/// beta = (x, iint(c1 kappa_g - c2 kappa_n), iint(c3 kappa_g - c4 kappa_n)).
SampledCurve synthesize_geodesic(const Expression& kappa_n,
                                 const Expression& tau_g, const Grid& g,
                                 double phase = 0.0);

SampledCurve synthesize_asymptotic(const Expression& kappa_g,
                                   const Expression& tau_g, const Grid& g,
                                   double phase = 0.0);

SampledCurve synthesize_line_of_curvature(const Expression& kappa_g,
                                          const Expression& kappa_n,
                                          const FamilyConstants& constants,
                                          const Grid& g);

}  // namespace galcurve
