#include "galcurve/numerics.hpp"

#include <algorithm>
#include <cstddef>

namespace galcurve {

SampledFn cumulative_integral(const SampledFn& f) {
    const Grid& g = f.grid;
    if (f.values.size() != static_cast<size_t>(g.points()))
        throw std::invalid_argument("sample length does not match grid");

    SampledFn out{g, std::vector<double>(f.values.size(), 0.0)};
    const double h = g.h;
    for (int k = 1; k <= g.n; ++k) {
        double step;
        if (k == 1) {
            step = 9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3];
        } else if (k == g.n) {
            step = f[k - 3] - 5.0 * f[k - 2] + 19.0 * f[k - 1] + 9.0 * f[k];
        } else {
            step = -f[k - 2] + 13.0 * f[k - 1] + 13.0 * f[k] - f[k + 1];
        }
        out[k] = out[k - 1] + h / 24.0 * step;
    }
    return out;
}

std::vector<double> fd_weights(double z, std::span<const double> nodes,
                               int order) {
    // B. Fornberg, Math. Comp. 51 (1988): weights on arbitrarily spaced
    // grids, built by the standard recursion over node count.
    const int nd = static_cast<int>(nodes.size()) - 1;
    if (nd < order) throw std::invalid_argument("not enough nodes for order");

    std::vector<std::vector<double>> c(
        nodes.size(), std::vector<double>(static_cast<size_t>(order) + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i <= nd; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        double c5 = c4;
        c4 = nodes[static_cast<size_t>(i)] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 =
                nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }

    std::vector<double> w(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        w[i] = c[i][static_cast<size_t>(order)];
    return w;
}

namespace {

std::vector<double> relative_offsets(int first, int count, int center, double h) {
    std::vector<double> rel(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        rel[static_cast<size_t>(i)] = (first + i - center) * h;
    return rel;
}

// Weights for order >= 1 annihilate constants, so the pivot drops out
// exactly; working with differences keeps the 1/h^order weights from
// amplifying roundoff of O(1) sample values.
double apply(const SampledFn& f, std::span<const double> w, int first,
             int center) {
    const double pivot = f[center];
    double s = 0.0;
    for (size_t i = 0; i < w.size(); ++i)
        s += w[i] * (f[first + static_cast<int>(i)] - pivot);
    return s;
}

}  // namespace

SampledFn derivative(const SampledFn& f, int order, int accuracy) {
    const Grid& g = f.grid;
    if (order < 1 || order > 3)
        throw std::invalid_argument("derivative order must be 1, 2 or 3");
    if (accuracy != 2 && accuracy != 4)
        throw std::invalid_argument("derivative accuracy must be 2 or 4");
    if (f.values.size() != static_cast<size_t>(g.points()))
        throw std::invalid_argument("sample length does not match grid");

    int p_int = order + accuracy - 1;
    if (p_int % 2 == 0) ++p_int;  // centered windows are odd-sized
    const int p_edge = order + accuracy;
    if (g.points() < std::max(p_int, p_edge))
        throw std::invalid_argument("grid too coarse for requested stencil");

    const int half = (p_int - 1) / 2;
    const auto w_int =
        fd_weights(0.0, relative_offsets(-half, p_int, 0, g.h), order);

    SampledFn out{g, std::vector<double>(f.values.size(), 0.0)};
    for (int k = 0; k <= g.n; ++k) {
        if (k < half) {
            const auto w = fd_weights(0.0, relative_offsets(0, p_edge, k, g.h),
                                      order);
            out[k] = apply(f, w, 0, k);
        } else if (k > g.n - half) {
            const int first = g.n - p_edge + 1;
            const auto w = fd_weights(
                0.0, relative_offsets(first, p_edge, k, g.h), order);
            out[k] = apply(f, w, first, k);
        } else {
            out[k] = apply(f, w_int, k - half, k);
        }
    }
    return out;
}

}  // namespace galcurve
