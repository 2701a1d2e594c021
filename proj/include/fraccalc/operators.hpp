#ifndef FRACCALC_OPERATORS_HPP
#define FRACCALC_OPERATORS_HPP

#include <vector>

#include "fraccalc/funcspace.hpp"
#include "fraccalc/grid.hpp"

namespace fraccalc {

enum class Side { Left, Right };

struct FracParams {
    double s = 0.5;
    Side side = Side::Left;

    FracParams() = default;
    FracParams(double s_, Side side_ = Side::Left) : s(s_), side(side_) {
        if (!(s > 0.0 && s < 1.0)) throw std::domain_error("FracParams: s must lie in (0,1)");
    }
};

/// One analytic power contribution coef * (x - location)^exponent, active for
/// x > location (or x < location when reversed, for right-side operators).
/// exponent == 0 encodes a plain step.
struct PowerTerm {
    double coef = 0.0;
    double location = 0.0;
    double exponent = 0.0;
    bool reversed = false;

    /// Value at x with the open-at-location convention (0 at x == location
    /// for every exponent, matching the left-limit rule at jump nodes).
    double eval(double x) const;
};

/// Nodal values of an operator output plus the analytic power terms that were
/// added in closed form. values[j] already includes the terms at x_j (terms
/// contribute 0 exactly at their own location); values[0] is reported as 0
/// and singular_at_a set when the output blows up at the base point.
struct OperatorResult {
    Grid grid;
    std::vector<double> values;
    bool singular_at_a = false;
    std::vector<PowerTerm> terms;

    /// Nodal value with the analytic terms removed (the quadrature residual,
    /// interpreted as piecewise linear between nodes).
    double residual(int j) const;
};

/// Left RL fractional integral of order `order` in (0,1): product quadrature
/// on the AC part plus closed-form jump and base contributions.
OperatorResult rl_integral(const SbvFunction& u, double order);

/// Left RL derivative D^s = d/dx I^{1-s}, computed through the W^{1,1}
/// representation: base*(x-a)^{-s}/Gamma(1-s) + I^{1-s}[u'] plus a closed-form
/// (x-x_k)^{-s}/Gamma(1-s) term per jump (active strictly right of x_k).
OperatorResult rl_derivative(const SbvFunction& u, const FracParams& p);

/// Caputo derivative I^{1-s}[u']; rejects functions with jumps.
OperatorResult caputo_derivative(const SbvFunction& u, const FracParams& p);

/// Truncated Marchaud derivative with grid-aligned eps = m*h, m >= 1.
OperatorResult marchaud_derivative(const SbvFunction& u, const FracParams& p, double eps);

/// Right-side operators: reflect the input, apply the left operator, reflect
/// the output.
OperatorResult rl_integral_right(const SbvFunction& u, double order);
OperatorResult rl_derivative_right(const SbvFunction& u, const FracParams& p);

/// Mirror an operator result under x -> a+b-x.
OperatorResult reflect(const OperatorResult& r);

/// Reinterpret an integral-type result (no negative-exponent terms) as an
/// SbvFunction with zero jumps, for operator composition.
SbvFunction to_sbv(const OperatorResult& r);

namespace reference {

/// Serial reference implementations built directly on per-node
/// product_weights; used to cross-check the fused parallel kernels.
OperatorResult rl_integral(const SbvFunction& u, double order);
OperatorResult rl_derivative(const SbvFunction& u, const FracParams& p);

} // namespace reference

} // namespace fraccalc

#endif
