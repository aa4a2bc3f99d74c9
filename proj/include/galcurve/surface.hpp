#pragma once

#include <vector>

#include "galcurve/frames.hpp"
#include "galcurve/galilean.hpp"

namespace galcurve {

/// Demonstration surface carrying the sine-curvature geodesic:
/// phi(u, v) = (u + v, (u - sin(u+v)cos(u+v))/4, (sin(u+v)^2 - u^2)/4).
/// Its v = 0 parameter line is the geodesic below.
GalVec3 example_surface_point(double u, double v);

struct SurfaceMesh {
    std::vector<double> u;
    std::vector<double> v;
    std::vector<GalVec3> points;
};

/// Row-major mesh over u in [0, 3], v in [-1, 1] with nu and nv intervals
/// per axis ((nu+1)(nv+1) rows, u varying slowest).
SurfaceMesh example_surface_mesh(int nu, int nv);

/// The embedded geodesic (x, (x - sin x cos x)/4, (sin^2 x - x^2)/4)
/// sampled on [0, 3] with n intervals.
SampledCurve example_geodesic_curve(int n);

}  // namespace galcurve
