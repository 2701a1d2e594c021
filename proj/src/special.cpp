#include "fraccalc/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccalc {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    constexpr double sqrt_two_pi = 2.5066282746310005;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("gamma_fn: argument must be finite and > 0");
    if (x < 0.5) return lanczos_gamma(x + 1.0) / x;
    return lanczos_gamma(x);
}

double beta_fn(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("beta_fn: arguments must be > 0");
    return gamma_fn(p) * gamma_fn(q) / gamma_fn(p + q);
}

} // namespace fraccalc
