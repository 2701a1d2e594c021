#ifndef FRACCALC_SPECIAL_HPP
#define FRACCALC_SPECIAL_HPP

namespace fraccalc {

/// Gamma function for strictly positive arguments.
/// Lanczos approximation with fixed embedded coefficients; relative error
/// below 1e-12 on [1e-3, 50]. Throws std::domain_error for x <= 0 or
/// non-finite x.
double gamma_fn(double x);

/// Euler Beta function B(p,q) = Gamma(p)Gamma(q)/Gamma(p+q), p,q > 0.
double beta_fn(double p, double q);

} // namespace fraccalc

#endif
