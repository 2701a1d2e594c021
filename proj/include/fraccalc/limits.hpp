#ifndef FRACCALC_LIMITS_HPP
#define FRACCALC_LIMITS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fraccalc/funcspace.hpp"
#include "fraccalc/norms.hpp"
#include "fraccalc/operators.hpp"

namespace fraccalc {

/// One convergence experiment: functional values along a monotone parameter
/// sequence, with an optional analytic target.
struct SweepReport {
    std::string parameter_name;                    // "s" or "eps"
    std::vector<std::pair<double, double>> points; // (parameter, functional)
    std::optional<double> target;
    bool converged = false;
    double tolerance = 0.0;
    /// Secondary series where an experiment tracks two functionals
    /// (s->1 with u(a) != 0 also records ||u' - D^s u||_L1).
    std::vector<std::pair<double, double>> secondary;
    std::optional<double> secondary_target;
};

/// C^1 test function with derivative, for measure pairings.
struct TestFunction {
    std::string name;
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
};

/// The default weak-* family {1, x, x^2, cos x}.
std::vector<TestFunction> default_test_functions();

struct MeasureTestResult {
    std::string test_function;
    double computed_pairing = 0.0;
    double analytic_limit = 0.0;
    double s_used = 0.0;
};

/// ||I^s u - u||_L1 along a decreasing s-list; target 0.
SweepReport sweep_s_to_zero(const SbvFunction& u, const std::vector<double>& s_list,
                            double tolerance = 1e-2);

/// ||D^s u||_L1 along an increasing s-list; target sbv_norm(u) when
/// u(a+) = 0. When u(a+) != 0 the report additionally records
/// ||u' - D^s u||_L1 with target |u(a+)|.
SweepReport sweep_s_to_one_norm(const SbvFunction& u, const std::vector<double>& s_list,
                                double tolerance = 2e-2);

/// Pairings of D^s u against C^1 test functions versus the analytic limit
/// measure u' L^1 + u(a+) delta_a + sum p_k delta_{x_k}.
std::vector<MeasureTestResult> weak_star_test(const SbvFunction& u, double s,
                                              const std::vector<TestFunction>& phis);

/// |LHS - RHS| of the fractional integration-by-parts identity, all four
/// terms computed numerically.
double ipp_residual(const SbvFunction& u, const SbvFunction& v, double s);

/// Cauchy increments ||M_eps_i - M_eps_{i+1}||_L1 along a decreasing
/// grid-aligned eps-list. Convergence additionally requires the sup-node
/// increment near the base point not to grow (it diverges like eps^{-s}
/// when u(a) != 0). When a reference f with u = I^s[f] is supplied, the
/// report records ||M(eps_min) - f||_L1 as its target distance.
SweepReport marchaud_eps_diagnostic(const SbvFunction& u, double s,
                                    const std::vector<double>& eps_list,
                                    const SbvFunction* reference = nullptr);

struct EmbeddingReport {
    double lhs = 0.0;   // ||D^s u||_L1
    double rhs = 0.0;   // ||u||_L1 + [u]_{G,s',1}
    double ratio = 0.0; // 0 when both sides vanish
};

/// Ratio ||D^s u||_L1 / (||u||_L1 + [u]_{G,s',1}) for s < s'; report-only,
/// no verdict.
EmbeddingReport embedding_report(const SbvFunction& u, double s, double s_prime);

/// Default sweep grids.
std::vector<double> default_s_to_one_list();  // {0.5, 0.9, 0.99, 0.995, 0.999}
std::vector<double> default_s_to_zero_list(); // {0.5, 0.1, 0.01, 0.001}

} // namespace fraccalc

#endif
