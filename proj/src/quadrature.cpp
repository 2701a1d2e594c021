#include "fraccalc/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccalc {

double singular_moment(double x, double c, double sigma) {
    if (c > x) throw std::domain_error("singular_moment: requires c <= x");
    if (!(sigma > -1.0 && sigma < 1.0))
        throw std::domain_error("singular_moment: sigma must lie in (-1,1)");
    if (x == c) return 0.0;
    return std::pow(x - c, sigma + 1.0) / (sigma + 1.0);
}

KernelWeights product_weights(const Grid& grid, int j, double sigma) {
    if (sigma <= -1.0 || sigma >= 1.0 || sigma == 0.0)
        throw std::domain_error("product_weights: sigma must lie in (-1,1) \\ {0}");
    if (j < 1 || j > grid.n) throw std::domain_error("product_weights: node index out of range");
    const double h = grid.h();
    const double s1 = sigma + 1.0, s2 = sigma + 2.0;
    KernelWeights kw;
    kw.exponent = sigma;
    kw.node_weights.assign(j + 1, 0.0);
    for (int k = 0; k < j; ++k) {
        // cell [t_k, t_{k+1}], kernel distance w = x_j - t in [wr, wl]
        const double wl = (j - k) * h, wr = (j - k - 1) * h;
        const double m0 = (std::pow(wl, s1) - std::pow(wr, s1)) / s1;
        const double m1 = wl * m0 - (std::pow(wl, s2) - std::pow(wr, s2)) / s2;
        kw.node_weights[k] += m0 - m1 / h;
        kw.node_weights[k + 1] += m1 / h;
    }
    return kw;
}

KernelWeights trapezoid_weights(const Grid& grid, int j) {
    if (j < 1 || j > grid.n) throw std::domain_error("trapezoid_weights: node index out of range");
    const double h = grid.h();
    KernelWeights kw;
    kw.exponent = 0.0;
    kw.node_weights.assign(j + 1, h);
    kw.node_weights[0] = kw.node_weights[j] = h / 2.0;
    return kw;
}

KernelMoments::KernelMoments(const Grid& grid, double sigma_) {
    if (sigma_ + 1.0 == 0.0 || sigma_ + 2.0 == 0.0)
        throw std::domain_error("KernelMoments: sigma+1 and sigma+2 must be nonzero");
    sigma = sigma_;
    h = grid.h();
    p1.resize(grid.n + 1);
    p2.resize(grid.n + 1);
    for (int m = 0; m <= grid.n; ++m) {
        const double w = m * h;
        p1[m] = std::pow(w, sigma + 1.0);
        p2[m] = std::pow(w, sigma + 2.0);
    }
}

double KernelMoments::convolve_linear(const std::vector<double>& values, int j) const {
    const double s1 = sigma + 1.0, s2 = sigma + 2.0;
    double acc = 0.0;
    for (int k = 0; k < j; ++k) {
        const int m = j - k; // distance in cells to the left node of the cell
        const double m0 = (p1[m] - p1[m - 1]) / s1;
        const double m1 = (m * h) * m0 - (p2[m] - p2[m - 1]) / s2;
        acc += values[k] * (m0 - m1 / h) + values[k + 1] * (m1 / h);
    }
    return acc;
}

double KernelMoments::convolve_cellwise(const std::vector<double>& cellvals, int j) const {
    const double s1 = sigma + 1.0;
    double acc = 0.0;
    for (int k = 0; k < j; ++k) acc += cellvals[k] * (p1[j - k] - p1[j - k - 1]);
    return acc / s1;
}

} // namespace fraccalc
