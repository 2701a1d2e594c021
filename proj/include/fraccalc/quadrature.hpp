#ifndef FRACCALC_QUADRATURE_HPP
#define FRACCALC_QUADRATURE_HPP

#include <vector>

#include "fraccalc/grid.hpp"

namespace fraccalc {

/// Product-integration weights at evaluation node j: the weighted sum of the
/// node samples integrates the piecewise-linear interpolant against
/// (x_j - t)^sigma over [a, x_j] exactly.
struct KernelWeights {
    double exponent = 0.0;
    std::vector<double> node_weights; // size j+1
};

/// (x - c)^{sigma+1} / (sigma+1), the moment of the kernel over [c, x];
/// zero when x == c. Requires c <= x and sigma in (-1, 1).
double singular_moment(double x, double c, double sigma);

/// Closed-form product-trapezoidal weights for the kernel (x_j - t)^sigma,
/// sigma in (-1,1) \ {0}. The sigma = 0 case is plain trapezoid and handled
/// by trapezoid_weights.
KernelWeights product_weights(const Grid& grid, int j, double sigma);

/// Plain trapezoid weights over [a, x_j] (the sigma = 0 path).
KernelWeights trapezoid_weights(const Grid& grid, int j);

/// Precomputed kernel moments for a uniform grid: p1[m] = (m h)^{sigma+1},
/// p2[m] = (m h)^{sigma+2}. All per-node product weights are closed forms in
/// these arrays, so operators pay O(n) pow calls per application. Valid for
/// any sigma with sigma+1, sigma+2 != 0 (covers the Marchaud kernel
/// sigma = -1-s as well).
struct KernelMoments {
    double sigma = 0.0;
    double h = 0.0;
    std::vector<double> p1, p2; // size n+1

    KernelMoments(const Grid& grid, double sigma);

    /// Integral of the PL interpolant of `values` (cells 0..j-1) against
    /// (x_j - t)^sigma. Not normalized by Gamma.
    double convolve_linear(const std::vector<double>& values, int j) const;

    /// Same for a piecewise-constant integrand (cell k value = cellvals[k]):
    /// sum_k cellvals[k] * moment of the kernel over cell k.
    double convolve_cellwise(const std::vector<double>& cellvals, int j) const;
};

} // namespace fraccalc

#endif
