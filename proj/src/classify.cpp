#include "galcurve/classify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace galcurve {

std::string_view to_string(HelixType type) {
    switch (type) {
        case HelixType::straight_line: return "straight_line";
        case HelixType::plane_curve: return "plane_curve";
        case HelixType::circular_helix: return "circular_helix";
        case HelixType::generalized_helix: return "generalized_helix";
        case HelixType::salkowski: return "salkowski";
        case HelixType::anti_salkowski: return "anti_salkowski";
        case HelixType::generic: return "generic";
    }
    return "generic";
}

namespace {

double sup_abs(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::fabs(x));
    return s;
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sup_deviation(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s = std::max(s, std::fabs(x - m));
    return s;
}

double sup_abs_expr(const Expression& e, const Grid& g) {
    double s = 0.0;
    for (int k = 0; k <= g.n; ++k) s = std::max(s, std::fabs(e.eval(g.node(k))));
    return s;
}

}  // namespace

std::map<std::string, double> line_of_curvature_residuals(
    const Expression& kappa_g, const Expression& kappa_n, const Grid& g) {
    const Expression dkg = kappa_g.derivative();
    const Expression dkn = kappa_n.derivative();
    const Expression ddkg = dkg.derivative();
    const Expression ddkn = dkn.derivative();
    const Expression kg = kappa_g;
    const Expression kn = kappa_n;

    const Expression salkowski = kg * dkg + kn * dkn;
    const Expression circular_second = kn * ddkg - kg * ddkn;
    const Expression generalized =
        ddkg * kn * kn * kn + ddkg * kn * kg * kg - kn * kn * kg * ddkn -
        Expression::constant(3.0) * kn * kn * dkg * dkn -
        Expression::constant(3.0) * kn * kg * dkg * dkg +
        Expression::constant(3.0) * kn * kg * dkn * dkn - kg * kg * kg * ddkn +
        Expression::constant(3.0) * kg * kg * dkg * dkn;
    const Expression anti =
        ddkg * kg * kg * kn + ddkg * kn * kn * kn - ddkn * kg * kg * kg -
        ddkn * kg * kn * kn -
        Expression::constant(2.0) * dkg * dkg * kg * kn +
        Expression::constant(2.0) * dkg * dkn * kg * kg -
        Expression::constant(2.0) * dkg * dkn * kn * kn +
        Expression::constant(2.0) * dkn * dkn * kg * kn;

    const double r_s = sup_abs_expr(salkowski, g);
    return {{"salkowski", r_s},
            {"circular_helix", std::max(r_s, sup_abs_expr(circular_second, g))},
            {"generalized_helix", sup_abs_expr(generalized, g)},
            {"anti_salkowski", sup_abs_expr(anti, g)}};
}

ClassificationReport classify_profile(const CurvatureProfile& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const Grid& g = p.domain;
    const int m = g.points();

    const SampledFn kg = sample(g, p.kappa_g);
    const SampledFn kn = sample(g, p.kappa_n);
    const SampledFn tg = sample(g, p.tau_g);
    const Expression dkg_e = p.kappa_g.derivative();
    const Expression dkn_e = p.kappa_n.derivative();

    ClassificationReport r;
    r.tolerance = tol;
    r.is_geodesic = sup_abs(kg.values) < tol;
    r.is_asymptotic = sup_abs(kn.values) < tol;
    r.is_line_of_curvature = sup_abs(tg.values) < tol;

    std::vector<double> kappa(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) kappa[static_cast<size_t>(k)] =
        std::hypot(kg[k], kn[k]);

    // torsion via the compatibility relation, only where kappa clears the
    // tolerance floor (the relation divides by kappa^2)
    std::vector<double> tau;
    tau.reserve(static_cast<size_t>(m));
    int excluded = 0;
    for (int k = 0; k < m; ++k) {
        if (kappa[static_cast<size_t>(k)] <= tol) {
            ++excluded;
            continue;
        }
        const double x = g.node(k);
        const double ksq = kg[k] * kg[k] + kn[k] * kn[k];
        tau.push_back(-tg[k] +
                      (dkg_e.eval(x) * kn[k] - kg[k] * dkn_e.eval(x)) / ksq);
    }

    std::vector<double> abs_tau(tau.size());
    std::vector<double> ratio;
    ratio.reserve(tau.size());
    {
        size_t i = 0;
        for (int k = 0; k < m; ++k) {
            if (kappa[static_cast<size_t>(k)] <= tol) continue;
            abs_tau[i] = std::fabs(tau[i]);
            ratio.push_back(tau[i] / kappa[static_cast<size_t>(k)]);
            ++i;
        }
    }

    const double sup_kappa = sup_abs(kappa);
    const double kappa_dev = sup_deviation(kappa);
    const double tau_dev = sup_deviation(tau);
    const double abs_tau_dev = sup_deviation(abs_tau);
    const double ratio_dev = sup_deviation(ratio);

    r.residuals["sup_kappa_g"] = sup_abs(kg.values);
    r.residuals["sup_kappa_n"] = sup_abs(kn.values);
    r.residuals["sup_tau_g"] = sup_abs(tg.values);
    r.residuals["kappa_mean"] = mean(kappa);
    r.residuals["kappa_dev"] = kappa_dev;
    r.residuals["tau_mean"] = mean(tau);
    r.residuals["tau_dev"] = tau_dev;
    r.residuals["tau_over_kappa_dev"] = ratio_dev;
    r.residuals["tau_excluded_nodes"] = static_cast<double>(excluded);
    for (const auto& [key, value] :
         line_of_curvature_residuals(p.kappa_g, p.kappa_n, g))
        r.residuals[key + "_residual"] = value;

    if (sup_kappa < tol) {
        r.helix_type = HelixType::straight_line;
    } else if (excluded > 0 || tau.empty()) {
        // kappa vanishes on part of the grid: torsion-based labels are
        // unavailable there, so only kappa-based information remains
        r.helix_type = HelixType::generic;
    } else if (sup_abs(tau) < tol) {
        r.helix_type = HelixType::plane_curve;
    } else if (kappa_dev < tol && abs_tau_dev < tol && mean(abs_tau) >= tol) {
        r.helix_type = HelixType::circular_helix;
    } else if (ratio_dev < tol) {
        r.helix_type = HelixType::generalized_helix;
    } else if (kappa_dev < tol) {
        r.helix_type = HelixType::salkowski;
    } else if (tau_dev < tol) {
        r.helix_type = HelixType::anti_salkowski;
    } else {
        r.helix_type = HelixType::generic;
    }
    return r;
}

}  // namespace galcurve
