#include "fraccalc/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccalc {

namespace {

// Gauss-4 per cell is plenty for the smooth integrands below.
constexpr double kG4x[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                            0.8611363115940526};
constexpr double kG4w[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                            0.3478548451374538};

double integral_uprime_phi(const SbvFunction& u, const std::function<double(double)>& phi) {
    const Grid& g = u.grid();
    const double h = g.h();
    double acc = 0.0;
    for (int k = 0; k < g.n; ++k) {
        const double c = g.node(k) + 0.5 * h, hw = 0.5 * h;
        double cell = 0.0;
        for (int i = 0; i < 4; ++i) cell += kG4w[i] * phi(c + hw * kG4x[i]);
        acc += u.slope(k) * cell * hw;
    }
    return acc;
}

// Cellwise-constant derivative of the AC part, re-expressed as an SBV
// function (a step at every interior node).
SbvFunction ac_derivative(const SbvFunction& u) {
    const Grid& g = u.grid();
    std::vector<double> ac(g.n + 1, 0.0);
    std::vector<Jump> steps;
    for (int k = 1; k < g.n; ++k) {
        const double d = u.slope(k) - u.slope(k - 1);
        if (d != 0.0) steps.push_back({g.node(k), d});
    }
    return SbvFunction(g, std::move(ac), std::move(steps), u.slope(0));
}

} // namespace

std::vector<TestFunction> default_test_functions() {
    return {
        {"1", [](double) { return 1.0; }, [](double) { return 0.0; }},
        {"x", [](double x) { return x; }, [](double) { return 1.0; }},
        {"x^2", [](double x) { return x * x; }, [](double x) { return 2.0 * x; }},
        {"cos", [](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); }},
    };
}

SweepReport sweep_s_to_zero(const SbvFunction& u, const std::vector<double>& s_list,
                            double tolerance) {
    SweepReport rep;
    rep.parameter_name = "s";
    rep.target = 0.0;
    rep.tolerance = tolerance;
    for (double s : s_list) rep.points.emplace_back(s, l1_distance(rl_integral(u, s), u));
    rep.converged = !rep.points.empty() && rep.points.back().second <= tolerance;
    return rep;
}

SweepReport sweep_s_to_one_norm(const SbvFunction& u, const std::vector<double>& s_list,
                                double tolerance) {
    SweepReport rep;
    rep.parameter_name = "s";
    rep.tolerance = tolerance;
    rep.target = sbv_norm(u).value;
    const bool with_secondary = u.base_value() != 0.0;
    SbvFunction uprime = with_secondary ? ac_derivative(u) : u;
    for (double s : s_list) {
        const OperatorResult d = rl_derivative(u, FracParams{s});
        rep.points.emplace_back(s, lp_norm(d, 1.0).value);
        if (with_secondary) rep.secondary.emplace_back(s, l1_distance(d, uprime));
    }
    if (with_secondary) rep.secondary_target = std::abs(u.base_value());
    rep.converged =
        !rep.points.empty() && std::abs(rep.points.back().second - *rep.target) <= tolerance;
    return rep;
}

std::vector<MeasureTestResult> weak_star_test(const SbvFunction& u, double s,
                                              const std::vector<TestFunction>& phis) {
    const OperatorResult d = rl_derivative(u, FracParams{s});
    std::vector<MeasureTestResult> out;
    out.reserve(phis.size());
    for (const auto& tf : phis) {
        MeasureTestResult r;
        r.test_function = tf.name;
        r.s_used = s;
        r.computed_pairing = pairing(d, tf.phi);
        r.analytic_limit = integral_uprime_phi(u, tf.phi) + u.base_value() * tf.phi(u.grid().a);
        for (const auto& jp : u.jumps()) r.analytic_limit += jp.height * tf.phi(jp.location);
        out.push_back(std::move(r));
    }
    return out;
}

double ipp_residual(const SbvFunction& u, const SbvFunction& v, double s) {
    if (!(u.grid() == v.grid())) throw std::domain_error("ipp_residual: grids differ");
    const FracParams p{s};
    const double lhs =
        pairing(rl_derivative(u, p), [&](double x) { return v.eval(x); });
    double rhs = pairing(rl_derivative_right(v, p), [&](double x) { return u.eval(x); });
    const int n = u.grid().n;
    rhs += u.node_value(n) * rl_integral_right(v, 1.0 - s).values[n];
    rhs -= rl_integral(u, 1.0 - s).values[0] * v.node_value(0);
    return std::abs(lhs - rhs);
}

SweepReport marchaud_eps_diagnostic(const SbvFunction& u, double s,
                                    const std::vector<double>& eps_list,
                                    const SbvFunction* reference) {
    if (eps_list.size() < 2)
        throw std::domain_error("marchaud_eps_diagnostic: need at least two eps values");
    SweepReport rep;
    rep.parameter_name = "eps";
    const Grid& g = u.grid();
    const FracParams p{s};

    std::vector<OperatorResult> ms;
    ms.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (!ms.empty() && eps >= eps_list[ms.size() - 1])
            throw std::domain_error("marchaud_eps_diagnostic: eps list must decrease");
        ms.push_back(marchaud_derivative(u, p, eps));
    }

    // L1 Cauchy increments plus the sup increment over the nodes within the
    // widest truncation window; the latter blows up like eps^{-s} when
    // u(a+) != 0 even though the L1 increments keep shrinking.
    const int near = std::max(1, static_cast<int>(std::lround(eps_list.front() / g.h())));
    bool l1_monotone = true, near_ok = true;
    double prev_inc = 0.0, prev_near = 0.0;
    for (std::size_t i = 1; i < ms.size(); ++i) {
        const double inc = l1_distance(ms[i], ms[i - 1]);
        rep.points.emplace_back(eps_list[i], inc);
        double sup_near = 0.0;
        for (int j = 0; j <= std::min(near, g.n); ++j)
            sup_near = std::max(sup_near, std::abs(ms[i].values[j] - ms[i - 1].values[j]));
        if (i > 1) {
            if (inc > prev_inc) l1_monotone = false;
            if (sup_near > 1.05 * prev_near && sup_near > 1e-12) near_ok = false;
        }
        prev_inc = inc;
        prev_near = sup_near;
    }
    rep.converged = l1_monotone && near_ok;
    if (reference) {
        for (std::size_t i = 0; i < ms.size(); ++i)
            rep.secondary.emplace_back(eps_list[i], l1_distance(ms[i], *reference));
        rep.secondary_target = 0.0;
    }
    return rep;
}

EmbeddingReport embedding_report(const SbvFunction& u, double s, double s_prime) {
    if (!(s < s_prime))
        throw std::domain_error("embedding_report: requires s < s'");
    EmbeddingReport rep;
    rep.lhs = lp_norm(rl_derivative(u, FracParams{s}), 1.0).value;
    rep.rhs = lp_norm(u, 1.0).value + gagliardo_seminorm(u, s_prime, 1.0).value;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

std::vector<double> default_s_to_one_list() { return {0.5, 0.9, 0.99, 0.995, 0.999}; }
std::vector<double> default_s_to_zero_list() { return {0.5, 0.1, 0.01, 0.001}; }

} // namespace fraccalc
