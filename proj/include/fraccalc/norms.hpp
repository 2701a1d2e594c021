#ifndef FRACCALC_NORMS_HPP
#define FRACCALC_NORMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "fraccalc/funcspace.hpp"
#include "fraccalc/operators.hpp"

namespace fraccalc {

enum class NormKind { Lp, Tv, Sbv, Gagliardo, HolderExponent };

struct NormValue {
    double value = 0.0;
    NormKind kind = NormKind::Lp;
    double p = 1.0;
    double s = 0.0;
};

/// L^p norm of an operator output over [a,b] (optionally a subinterval
/// [lo, b]): trapezoid on the quadrature residual plus analytic integration
/// of the recorded singular power terms, with a dominance split where a term
/// is unbounded. For p > 1 a term with exponent*p <= -1 makes the norm
/// infinite and a domain error is thrown.
NormValue lp_norm(const OperatorResult& r, double p, double lo);
NormValue lp_norm(const OperatorResult& r, double p);

/// L^p norm of an SBV function (exact piecewise integration for p = 1).
NormValue lp_norm(const SbvFunction& u, double p);

/// L^1 distance between an operator output and an SBV function (the
/// function's jumps are folded in as analytic step terms).
double l1_distance(const OperatorResult& r, const SbvFunction& u);
double l1_distance(const OperatorResult& r, const OperatorResult& q);

/// L^1 distance between an operator output and a pointwise-evaluable
/// function over [lo, b].
double l1_distance(const OperatorResult& r, const std::function<double(double)>& f, double lo);

/// Pairing integral of an operator output against a smooth test function:
/// trapezoid on the residual plus semi-analytic term integrals (exact moment
/// times a centroid evaluation on the partial cell at each term origin).
double pairing(const OperatorResult& r, const std::function<double(double)>& phi);

/// Total variation: sum of |slope|*h over cells plus sum of |p_k|.
NormValue total_variation(const SbvFunction& u);

/// SBV norm |u(a+)| + int |u'| + sum |p_k|.
NormValue sbv_norm(const SbvFunction& u);

/// Gagliardo semi-norm [u]_{W^{s,p}}: near-diagonal cell pairs in closed
/// form, far field by tensor Gauss quadrature, jumps handled analytically in
/// the near field. Throws std::domain_error when the defining integral
/// diverges (jump present and s*p >= 1).
NormValue gagliardo_seminorm(const SbvFunction& u, double s, double p);

/// Empirical Hoelder exponent: log-log regression of the dyadic modulus of
/// continuity sup_{|i-j|=d} |v_i - v_j| over d = 1,2,4,...,n/8, clipped to
/// [0,1]. A constant input returns 1 by convention.
NormValue holder_exponent(const std::vector<double>& node_values, double h);
NormValue holder_exponent(const SbvFunction& u);
NormValue holder_exponent(const OperatorResult& r);

} // namespace fraccalc

#endif
