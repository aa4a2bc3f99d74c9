#pragma once

#include <string>
#include <vector>

#include "galcurve/profile.hpp"

namespace galcurve {

struct VerifyCheck {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::vector<std::string> skipped;
    bool all_pass = true;
};

struct VerifyOptions {
    /// Tolerance for the round-trip recovery errors and the two-way
    /// square-curvature consistency gap, both relative to
    /// max(1, sup |reference|).
    double roundtrip_tol = 1e-3;
    /// Sup-norm tolerance for the coefficient ODE residuals.
    double ode_tol = 1e-6;
    /// Turning-angle phase used for the synthesis round trip.
    double phase = 0.0;
};

/// Round-trips the profile through synthesis and Darboux extraction,
/// checks the square-curvature identity two ways, and (when tau_g is
/// bounded away from zero) the coefficient ODE residuals. Checks that
/// cannot run are reported in skipped rather than failed.
VerifyReport verify_profile(const CurvatureProfile& p,
                            const VerifyOptions& options = {});

}  // namespace galcurve
