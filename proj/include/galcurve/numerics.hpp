#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace galcurve {

/// Uniform grid of n intervals on [a, b]. n must be even and at least 8;
/// the cumulative integrator pairs intervals and the derivative stencils
/// need room for their one-sided windows.
struct Grid {
    double a;
    double b;
    int n;
    double h;

    Grid(double a_, double b_, int n_) : a(a_), b(b_), n(n_), h((b_ - a_) / n_) {
        if (!(a < b)) throw std::invalid_argument("grid requires a < b");
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("grid requires an even n >= 8");
    }

    double node(int k) const { return a + k * h; }
    int points() const { return n + 1; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Real function sampled at every node of a grid.
struct SampledFn {
    Grid grid;
    std::vector<double> values;

    double operator[](int k) const { return values[static_cast<size_t>(k)]; }
    double& operator[](int k) { return values[static_cast<size_t>(k)]; }
};

template <typename F>
SampledFn sample(const Grid& g, F&& f) {
    SampledFn out{g, std::vector<double>(static_cast<size_t>(g.points()))};
    for (int k = 0; k <= g.n; ++k) out[k] = f(g.node(k));
    return out;
}

/// Running antiderivative with F(a) = 0. Every interval is integrated by
/// the cubic through its four surrounding nodes (one-sided at the two
/// ends), so the rule is exact for cubics and fourth-order everywhere,
/// and the accumulated error varies smoothly along the grid instead of
/// alternating with node parity. Differentiating the result therefore
/// keeps its accuracy.
SampledFn cumulative_integral(const SampledFn& f);

/// Finite-difference derivative of the samples, order 1..3.
///
/// accuracy 2 (the default) uses the classical stencils: central
/// differences in the interior and one-sided second-order stencils at the
/// boundary nodes. accuracy 4 brings fourth-order windows throughout.
SampledFn derivative(const SampledFn& f, int order, int accuracy = 2);

/// Fornberg weights: coefficients w such that sum w[i] f(nodes[i])
/// approximates the order-th derivative of f at z. Exact for polynomials
/// of degree nodes.size() - 1.
std::vector<double> fd_weights(double z, std::span<const double> nodes,
                               int order);

}  // namespace galcurve
