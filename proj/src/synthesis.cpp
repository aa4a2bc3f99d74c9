#include "galcurve/synthesis.hpp"

#include <cmath>
#include <utility>

namespace galcurve {

namespace {

struct Pipeline {
    SampledFn t;
    SampledFn S;
    SampledFn C;
    SampledFn kg;
    SampledFn kn;
};

Pipeline run_angle(const CurvatureProfile& p, double phase) {
    Pipeline pl{cumulative_integral(sample(p.domain, p.tau_g)),
                SampledFn{p.domain, {}},
                SampledFn{p.domain, {}},
                sample(p.domain, p.kappa_g),
                sample(p.domain, p.kappa_n)};
    const size_t m = pl.t.values.size();
    pl.S.values.resize(m);
    pl.C.values.resize(m);
    for (size_t k = 0; k < m; ++k) {
        const double t = pl.t.values[k] + phase;
        pl.t.values[k] = t;
        pl.S.values[k] = std::sin(t);
        pl.C.values[k] = std::cos(t);
    }
    return pl;
}

}  // namespace

TurningAngle turning_angle(const CurvatureProfile& p) {
    Pipeline pl = run_angle(p, 0.0);
    return {std::move(pl.t), std::move(pl.C), std::move(pl.S)};
}

NaturalSynthesis synthesize_with_frames(const CurvatureProfile& p,
                                        double phase) {
    const Grid& g = p.domain;
    const Pipeline pl = run_angle(p, phase);
    const int m = g.points();

    // tangent derivative = kappa_g Q + kappa_n n, componentwise
    SampledFn ddy{g, std::vector<double>(static_cast<size_t>(m))};
    SampledFn ddz{g, std::vector<double>(static_cast<size_t>(m))};
    for (int k = 0; k < m; ++k) {
        ddy[k] = pl.kg[k] * pl.S[k] + pl.kn[k] * pl.C[k];
        ddz[k] = pl.kg[k] * pl.C[k] - pl.kn[k] * pl.S[k];
    }
    const SampledFn ty = cumulative_integral(ddy);
    const SampledFn tz = cumulative_integral(ddz);
    const SampledFn y = cumulative_integral(ty);
    const SampledFn z = cumulative_integral(tz);

    NaturalSynthesis out{
        SampledCurve{g, std::vector<GalVec3>(static_cast<size_t>(m)), true},
        FrameFieldSet{}};
    out.frames.Q.resize(static_cast<size_t>(m));
    out.frames.n.resize(static_cast<size_t>(m));
    out.frames.T.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        out.curve.points[static_cast<size_t>(k)] = {g.node(k), y[k], z[k]};
        out.frames.Q[static_cast<size_t>(k)] = {0.0, pl.S[k], pl.C[k]};
        out.frames.n[static_cast<size_t>(k)] = {0.0, pl.C[k], -pl.S[k]};
        out.frames.T[static_cast<size_t>(k)] = {1.0, ty[k], tz[k]};
    }
    return out;
}

SampledCurve synthesize_natural(const CurvatureProfile& p, double phase) {
    return synthesize_with_frames(p, phase).curve;
}

FrameFieldSet frame_fields(const CurvatureProfile& p, double phase) {
    return synthesize_with_frames(p, phase).frames;
}

DarbouxCoefficients darboux_coefficients(const CurvatureProfile& p, double c1,
                                         double c2, double c3) {
    const Grid& g = p.domain;
    const int m = g.points();

    const SampledFn tg = sample(g, p.tau_g);
    for (int k = 0; k < m; ++k)
        if (std::fabs(tg[k]) < 1e-10)
            throw SingularTorsionError(
                "tau_g vanishes at grid node " + std::to_string(k) +
                "; the coefficient construction divides by tau_g");

    // f = lambda1 kappa_g / tau_g - (lambda1 kappa_n / tau_g)' / tau_g with
    // the derivative taken symbolically, so the forcing term carries no
    // stencil error into the quadratures below.
    const Expression lam1 =
        Expression::variable() + Expression::constant(c1);
    const Expression f_expr =
        lam1 * p.kappa_g / p.tau_g -
        (lam1 * p.kappa_n / p.tau_g).derivative() / p.tau_g;

    const Pipeline pl = run_angle(p, 0.0);
    SampledFn fs{g, std::vector<double>(static_cast<size_t>(m))};
    SampledFn fts{g, std::vector<double>(static_cast<size_t>(m))};
    SampledFn ftc{g, std::vector<double>(static_cast<size_t>(m))};
    for (int k = 0; k < m; ++k) {
        fs[k] = f_expr.eval(g.node(k));
        fts[k] = fs[k] * tg[k] * pl.S[k];
        ftc[k] = fs[k] * tg[k] * pl.C[k];
    }
    const SampledFn is = cumulative_integral(fts);
    const SampledFn ic = cumulative_integral(ftc);

    DarbouxCoefficients out{
        SampledFn{g, std::vector<double>(static_cast<size_t>(m))},
        SampledFn{g, std::vector<double>(static_cast<size_t>(m))},
        SampledFn{g, std::vector<double>(static_cast<size_t>(m))},
        fs,
        c1,
        c2,
        c3};
    for (int k = 0; k < m; ++k) {
        const double A = c2 - is[k];
        const double B = c3 + ic[k];
        out.lambda1[k] = g.node(k) + c1;
        out.lambda2[k] = -out.lambda1[k] * pl.kn[k] / tg[k] +
                         A * pl.S[k] - B * pl.C[k];
        out.lambda3[k] = A * pl.C[k] + B * pl.S[k];
    }
    return out;
}

SampledCurve synthesize_geodesic(const Expression& kappa_n,
                                 const Expression& tau_g, const Grid& g,
                                 double phase) {
    return synthesize_natural({Expression::constant(0.0), kappa_n, tau_g, g},
                              phase);
}

SampledCurve synthesize_asymptotic(const Expression& kappa_g,
                                   const Expression& tau_g, const Grid& g,
                                   double phase) {
    return synthesize_natural({kappa_g, Expression::constant(0.0), tau_g, g},
                              phase);
}

SampledCurve synthesize_line_of_curvature(const Expression& kappa_g,
                                          const Expression& kappa_n,
                                          const FamilyConstants& constants,
                                          const Grid& g) {
    const SampledFn kg = sample(g, kappa_g);
    const SampledFn kn = sample(g, kappa_n);
    const int m = g.points();
    SampledFn ddy{g, std::vector<double>(static_cast<size_t>(m))};
    SampledFn ddz{g, std::vector<double>(static_cast<size_t>(m))};
    for (int k = 0; k < m; ++k) {
        ddy[k] = constants.c1 * kg[k] - constants.c2 * kn[k];
        ddz[k] = constants.c3 * kg[k] - constants.c4 * kn[k];
    }
    const SampledFn y = cumulative_integral(cumulative_integral(ddy));
    const SampledFn z = cumulative_integral(cumulative_integral(ddz));

    SampledCurve out{g, std::vector<GalVec3>(static_cast<size_t>(m)), true};
    for (int k = 0; k < m; ++k)
        out.points[static_cast<size_t>(k)] = {g.node(k), y[k], z[k]};
    return out;
}

}  // namespace galcurve
