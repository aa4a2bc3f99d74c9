#include "galcurve/surface.hpp"

#include <cmath>

namespace galcurve {

GalVec3 example_surface_point(double u, double v) {
    const double s = std::sin(u + v);
    const double c = std::cos(u + v);
    return {u + v, (u - s * c) / 4.0, (s * s - u * u) / 4.0};
}

SurfaceMesh example_surface_mesh(int nu, int nv) {
    if (nu < 1 || nv < 1)
        throw std::invalid_argument("mesh needs at least one interval per axis");
    SurfaceMesh mesh;
    const size_t rows = static_cast<size_t>(nu + 1) * static_cast<size_t>(nv + 1);
    mesh.u.reserve(rows);
    mesh.v.reserve(rows);
    mesh.points.reserve(rows);
    for (int i = 0; i <= nu; ++i) {
        const double u = 3.0 * i / nu;
        for (int j = 0; j <= nv; ++j) {
            const double v = -1.0 + 2.0 * j / nv;
            mesh.u.push_back(u);
            mesh.v.push_back(v);
            mesh.points.push_back(example_surface_point(u, v));
        }
    }
    return mesh;
}

SampledCurve example_geodesic_curve(int n) {
    const Grid g(0.0, 3.0, n);
    return sample_curve(
        g,
        [](double x) { return (x - std::sin(x) * std::cos(x)) / 4.0; },
        [](double x) {
            const double s = std::sin(x);
            return (s * s - x * x) / 4.0;
        });
}

}  // namespace galcurve
