#include "galcurve/frames.hpp"

#include <cmath>
#include <utility>

namespace galcurve {

namespace {

SampledFn component(const SampledCurve& c, double GalVec3::* member) {
    SampledFn out{c.grid,
                  std::vector<double>(static_cast<size_t>(c.grid.points()))};
    for (int k = 0; k <= c.grid.n; ++k)
        out[k] = c.points[static_cast<size_t>(k)].*member;
    return out;
}

// Third-derivative stencils divide the roundoff of O(1) sample values by
// h^3, which swamps truncation on fine grids. The window is therefore
// strided so its effective step sits near 8e-3, where the two error
// sources balance for double-precision samples.
SampledFn third_derivative(const SampledFn& f) {
    const Grid& g = f.grid;
    int stride = std::max(1, static_cast<int>(std::lround(8e-3 / g.h)));
    stride = std::min(stride, std::max(1, g.n / 12));
    if (stride == 1) return derivative(f, 3, 4);

    SampledFn out{g, std::vector<double>(f.values.size())};
    const int span = 6 * stride;
    std::vector<double> offsets(7);
    for (int k = 0; k <= g.n; ++k) {
        int first = k - 3 * stride;
        first = std::max(first, 0);
        first = std::min(first, g.n - span);
        for (int j = 0; j < 7; ++j)
            offsets[static_cast<size_t>(j)] = (first + j * stride - k) * g.h;
        const auto w = fd_weights(0.0, offsets, 3);
        const double pivot = f[k];
        double acc = 0.0;
        for (int j = 0; j < 7; ++j)
            acc += w[static_cast<size_t>(j)] * (f[first + j * stride] - pivot);
        out[k] = acc;
    }
    return out;
}

void require_admissible(const SampledCurve& c) {
    if (!c.admissible)
        throw std::invalid_argument("frame operations need an admissible curve");
    if (c.points.size() != static_cast<size_t>(c.grid.points()))
        throw std::invalid_argument("curve sample length does not match grid");
}

}  // namespace

SampledCurve make_sampled_curve(const Grid& g, std::vector<GalVec3> points) {
    if (points.size() != static_cast<size_t>(g.points()))
        throw std::invalid_argument("curve sample length does not match grid");
    const double scale =
        std::max(1.0, std::max(std::fabs(g.a), std::fabs(g.b)));
    bool admissible = true;
    for (int k = 0; k <= g.n; ++k) {
        if (std::fabs(points[static_cast<size_t>(k)].x - g.node(k)) >
            1e-9 * scale) {
            admissible = false;
            break;
        }
    }
    return SampledCurve{g, std::move(points), admissible};
}

FrenetApparatus frenet_apparatus(const SampledCurve& c,
                                 const FrenetOptions& options) {
    require_admissible(c);
    const Grid& g = c.grid;
    const int m = g.points();

    const SampledFn y = component(c, &GalVec3::y);
    const SampledFn z = component(c, &GalVec3::z);
    const SampledFn y1 = derivative(y, 1, options.accuracy);
    const SampledFn z1 = derivative(z, 1, options.accuracy);
    const SampledFn y2 = derivative(y, 2, options.accuracy);
    const SampledFn z2 = derivative(z, 2, options.accuracy);

    FrenetApparatus out;
    out.T.resize(static_cast<size_t>(m));
    out.kappa.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        out.T[static_cast<size_t>(k)] = {1.0, y1[k], z1[k]};
        out.kappa[static_cast<size_t>(k)] = std::hypot(y2[k], z2[k]);
    }
    if (!options.frame) return out;

    std::vector<int> degenerate;
    for (int k = 0; k < m; ++k)
        if (out.kappa[static_cast<size_t>(k)] <= options.kappa_min)
            degenerate.push_back(k);
    if (!degenerate.empty()) {
        std::string message = "curvature at or below the floor at " +
                              std::to_string(degenerate.size()) +
                              " node(s); first at index " +
                              std::to_string(degenerate.front());
        throw DegenerateCurvatureError(std::move(message), std::move(degenerate));
    }

    const SampledFn y3 = third_derivative(y);
    const SampledFn z3 = third_derivative(z);
    out.N.resize(static_cast<size_t>(m));
    out.B.resize(static_cast<size_t>(m));
    out.tau.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double kap = out.kappa[static_cast<size_t>(k)];
        out.N[static_cast<size_t>(k)] = {0.0, y2[k] / kap, z2[k] / kap};
        out.B[static_cast<size_t>(k)] = {0.0, -z2[k] / kap, y2[k] / kap};
        const double ksq = y2[k] * y2[k] + z2[k] * z2[k];
        out.tau[static_cast<size_t>(k)] = (y2[k] * z3[k] - z2[k] * y3[k]) / ksq;
    }
    return out;
}

DarbouxApparatus darboux_apparatus(const SampledCurve& c,
                                   std::span<const GalVec3> normal) {
    require_admissible(c);
    const Grid& g = c.grid;
    const int m = g.points();
    if (normal.size() != static_cast<size_t>(m))
        throw std::invalid_argument("normal field length does not match grid");
    for (int k = 0; k < m; ++k) {
        const GalVec3& nk = normal[static_cast<size_t>(k)];
        if (!nk.isotropic())
            throw std::invalid_argument(
                "surface normal must be isotropic (zero first component)");
        if (std::fabs(dot_g(nk, nk) - 1.0) > 1e-9)
            throw std::invalid_argument("surface normal must have unit norm");
    }

    const SampledFn y = component(c, &GalVec3::y);
    const SampledFn z = component(c, &GalVec3::z);
    const SampledFn y1 = derivative(y, 1);
    const SampledFn z1 = derivative(z, 1);
    const SampledFn y2 = derivative(y, 2);
    const SampledFn z2 = derivative(z, 2);

    DarbouxApparatus out;
    out.T.resize(static_cast<size_t>(m));
    out.Q.resize(static_cast<size_t>(m));
    out.n.assign(normal.begin(), normal.end());
    out.kappa_g.resize(static_cast<size_t>(m));
    out.kappa_n.resize(static_cast<size_t>(m));
    out.tau_g.resize(static_cast<size_t>(m));

    SampledFn qy{g, std::vector<double>(static_cast<size_t>(m))};
    SampledFn qz{g, std::vector<double>(static_cast<size_t>(m))};
    for (int k = 0; k < m; ++k) {
        const GalVec3 T{1.0, y1[k], z1[k]};
        const GalVec3 Q = cross_g(T, normal[static_cast<size_t>(k)]);
        out.T[static_cast<size_t>(k)] = T;
        out.Q[static_cast<size_t>(k)] = Q;
        qy[k] = Q.y;
        qz[k] = Q.z;

        const GalVec3 acc{0.0, y2[k], z2[k]};
        out.kappa_g[static_cast<size_t>(k)] = dot_g(acc, Q);
        out.kappa_n[static_cast<size_t>(k)] =
            dot_g(acc, normal[static_cast<size_t>(k)]);
    }

    const SampledFn qy1 = derivative(qy, 1);
    const SampledFn qz1 = derivative(qz, 1);
    for (int k = 0; k < m; ++k) {
        const GalVec3 dQ{0.0, qy1[k], qz1[k]};
        out.tau_g[static_cast<size_t>(k)] =
            dot_g(dQ, normal[static_cast<size_t>(k)]);
    }
    return out;
}

KtValues kt_relations(const CurvatureProfile& p, double x) {
    const double kg = p.kappa_g.eval(x);
    const double kn = p.kappa_n.eval(x);
    const double tg = p.tau_g.eval(x);
    const double ksq = kg * kg + kn * kn;
    if (ksq == 0.0)
        throw DegenerateCurvatureError(
            "kappa_g^2 + kappa_n^2 vanishes; torsion undefined", {});
    const double dkg = p.kappa_g.derivative().eval(x);
    const double dkn = p.kappa_n.derivative().eval(x);
    return {ksq, -tg + (dkg * kn - kg * dkn) / ksq};
}

}  // namespace galcurve
