#pragma once

#include <cmath>

namespace galcurve {

/// Vector in the Galilean 3-space G3. The x component spans the
/// non-isotropic direction; a vector with x == 0 is isotropic and carries
/// the Euclidean geometry of the (y, z) plane. Isotropy is an exact
/// structural predicate, not a tolerance test.
struct GalVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool isotropic() const { return x == 0.0; }

    friend bool operator==(const GalVec3&, const GalVec3&) = default;
};

inline GalVec3 operator+(const GalVec3& v, const GalVec3& w) {
    return {v.x + w.x, v.y + w.y, v.z + w.z};
}

inline GalVec3 operator-(const GalVec3& v, const GalVec3& w) {
    return {v.x - w.x, v.y - w.y, v.z - w.z};
}

inline GalVec3 operator-(const GalVec3& v) { return {-v.x, -v.y, -v.z}; }

inline GalVec3 operator*(double s, const GalVec3& v) {
    return {s * v.x, s * v.y, s * v.z};
}

inline GalVec3 operator*(const GalVec3& v, double s) { return s * v; }

/// Galilean scalar product. The metric is degenerate: as soon as either
/// argument is non-isotropic only the x parts contribute; two isotropic
/// vectors see the Euclidean product of their (y, z) parts.
inline double dot_g(const GalVec3& v, const GalVec3& w) {
    if (v.x != 0.0 || w.x != 0.0) return v.x * w.x;
    return v.y * w.y + v.z * w.z;
}

inline double norm_g(const GalVec3& v) {
    return std::sqrt(std::fabs(dot_g(v, v)));
}

/// Galilean cross product: the formal determinant with first row
/// (0, e2, e3). The result is always isotropic.
inline GalVec3 cross_g(const GalVec3& v, const GalVec3& w) {
    return {0.0, v.z * w.x - v.x * w.z, v.x * w.y - v.y * w.x};
}

}  // namespace galcurve
