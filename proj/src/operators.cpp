#include "fraccalc/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fraccalc/quadrature.hpp"
#include "fraccalc/special.hpp"

namespace fraccalc {

double PowerTerm::eval(double x) const {
    if (!reversed) {
        if (x <= location) return 0.0;
        return coef * std::pow(x - location, exponent);
    }
    if (x >= location) return 0.0;
    return coef * std::pow(location - x, exponent);
}

double OperatorResult::residual(int j) const {
    double r = values[j];
    const double x = grid.node(j);
    for (const auto& t : terms) r -= t.eval(x);
    return r;
}

namespace {

void check_order(double order, const char* what) {
    if (!(order > 0.0 && order < 1.0))
        throw std::domain_error(std::string(what) + ": order must lie in (0,1)");
}

// Closed-form contribution of the base value and the jumps to I^order[u]:
// c * (x - x0)^order / Gamma(order+1) per step of height c at x0.
void append_step_terms(const SbvFunction& u, double order, double scale,
                       OperatorResult& out) {
    if (u.base_value() != 0.0)
        out.terms.push_back({u.base_value() * scale, u.grid().a, order, false});
    for (const auto& jp : u.jumps())
        if (jp.height != 0.0) out.terms.push_back({jp.height * scale, jp.location, order, false});
}

void add_terms_to_values(OperatorResult& out) {
    const int n = out.grid.n;
#pragma omp parallel for schedule(static)
    for (int j = 0; j <= n; ++j) {
        const double x = out.grid.node(j);
        for (const auto& t : out.terms) out.values[j] += t.eval(x);
    }
}

} // namespace

OperatorResult rl_integral(const SbvFunction& u, double order) {
    check_order(order, "rl_integral");
    const Grid& g = u.grid();
    OperatorResult out{g, std::vector<double>(g.n + 1, 0.0), false, {}};

    const KernelMoments km(g, order - 1.0);
    const double inv_gamma = 1.0 / gamma_fn(order);
    const auto& ac = u.ac_values();
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= g.n; ++j) out.values[j] = inv_gamma * km.convolve_linear(ac, j);

    append_step_terms(u, order, 1.0 / gamma_fn(order + 1.0), out);
    add_terms_to_values(out);
    return out;
}

OperatorResult rl_derivative(const SbvFunction& u, const FracParams& p) {
    const double s = p.s;
    if (p.side == Side::Right) return rl_derivative_right(u, {s, Side::Left});
    const Grid& g = u.grid();
    OperatorResult out{g, std::vector<double>(g.n + 1, 0.0), false, {}};

    // W^{1,1} route: I^{1-s}[u'] by product quadrature on the cellwise slopes,
    // plus c (x-x0)^{-s} / Gamma(1-s) per step.
    std::vector<double> slopes(g.n);
    for (int k = 0; k < g.n; ++k) slopes[k] = u.slope(k);

    const KernelMoments km(g, -s);
    const double inv_g1 = 1.0 / gamma_fn(1.0 - s);
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= g.n; ++j) out.values[j] = inv_g1 * km.convolve_cellwise(slopes, j);

    append_step_terms(u, -s, inv_g1, out);
    add_terms_to_values(out);
    out.singular_at_a = u.base_value() != 0.0;
    return out;
}

OperatorResult caputo_derivative(const SbvFunction& u, const FracParams& p) {
    if (!u.jumps().empty())
        throw std::domain_error("caputo_derivative: input must have no jump part");
    const double s = p.s;
    const Grid& g = u.grid();
    OperatorResult out{g, std::vector<double>(g.n + 1, 0.0), false, {}};

    std::vector<double> slopes(g.n);
    for (int k = 0; k < g.n; ++k) slopes[k] = u.slope(k);

    const KernelMoments km(g, -s);
    const double inv_g1 = 1.0 / gamma_fn(1.0 - s);
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= g.n; ++j) out.values[j] = inv_g1 * km.convolve_cellwise(slopes, j);
    return out;
}

OperatorResult marchaud_derivative(const SbvFunction& u, const FracParams& p, double eps) {
    const double s = p.s;
    const Grid& g = u.grid();
    const double h = g.h();
    const double ratio = eps / h;
    const int m = static_cast<int>(std::lround(ratio));
    if (m < 1 || std::abs(ratio - m) > 1e-9 * ratio || m >= g.n)
        throw std::domain_error("marchaud_derivative: eps must equal m*h with 1 <= m < n");

    OperatorResult out{g, std::vector<double>(g.n + 1, 0.0), false, {}};

    // Combined form: D_eps(x) = u(x) eps^{-s}/Gamma(1-s)
    //                           - (s/Gamma(1-s)) * int_a^{x-eps} u(t)(x-t)^{-1-s} dt.
    // For x <= a+eps the tail integral is empty (zero-extension of u).
    const double inv_g1 = 1.0 / gamma_fn(1.0 - s);
    const double eps_pow = std::pow(eps, -s);
    const KernelMoments km(g, -1.0 - s);
    const double s1 = -s, s2 = 1.0 - s;

    std::vector<double> ac_plus_base(g.n + 1);
    for (int j = 0; j <= g.n; ++j) ac_plus_base[j] = u.ac_values()[j] + u.base_value();

#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= g.n; ++j) {
        const double xj = g.node(j);
        double tail = 0.0;
        if (j > m) {
            // AC + base part, piecewise linear over cells 0..j-m-1.
            for (int k = 0; k < j - m; ++k) {
                const int d = j - k;
                const double m0 = (km.p1[d] - km.p1[d - 1]) / s1;
                const double m1 = (d * h) * m0 - (km.p2[d] - km.p2[d - 1]) / s2;
                tail += ac_plus_base[k] * (m0 - m1 / h) + ac_plus_base[k + 1] * (m1 / h);
            }
            // Jump steps, integrated in closed form over [x_k, x_j - eps].
            for (const auto& jp : u.jumps()) {
                if (jp.location >= xj - eps) break;
                tail += jp.height * (eps_pow - std::pow(xj - jp.location, -s)) / s;
            }
        }
        out.values[j] = inv_g1 * (u.node_value(j) * eps_pow - s * tail);
    }
    return out;
}

OperatorResult reflect(const OperatorResult& r) {
    OperatorResult out{r.grid, std::vector<double>(r.grid.n + 1), r.singular_at_a, {}};
    for (int j = 0; j <= r.grid.n; ++j) out.values[j] = r.values[r.grid.n - j];
    const double mid = r.grid.a + r.grid.b;
    out.terms.reserve(r.terms.size());
    for (const auto& t : r.terms)
        out.terms.push_back({t.coef, mid - t.location, t.exponent, !t.reversed});
    return out;
}

OperatorResult rl_integral_right(const SbvFunction& u, double order) {
    return reflect(rl_integral(fraccalc::reflect(u), order));
}

OperatorResult rl_derivative_right(const SbvFunction& u, const FracParams& p) {
    return reflect(rl_derivative(fraccalc::reflect(u), {p.s, Side::Left}));
}

SbvFunction to_sbv(const OperatorResult& r) {
    if (r.singular_at_a) throw std::domain_error("to_sbv: result is singular at the base point");
    for (const auto& t : r.terms)
        if (t.exponent < 0.0)
            throw std::domain_error("to_sbv: result carries a singular power term");
    std::vector<double> ac(r.values.size());
    for (std::size_t j = 0; j < r.values.size(); ++j) ac[j] = r.values[j] - r.values[0];
    return SbvFunction(r.grid, std::move(ac), {}, r.values[0]);
}

namespace reference {

OperatorResult rl_integral(const SbvFunction& u, double order) {
    check_order(order, "rl_integral");
    const Grid& g = u.grid();
    OperatorResult out{g, std::vector<double>(g.n + 1, 0.0), false, {}};
    const double inv_gamma = 1.0 / gamma_fn(order);
    const auto& ac = u.ac_values();
    for (int j = 1; j <= g.n; ++j) {
        const KernelWeights kw = product_weights(g, j, order - 1.0);
        double acc = 0.0;
        for (int k = 0; k <= j; ++k) acc += kw.node_weights[k] * ac[k];
        out.values[j] = inv_gamma * acc;
    }
    append_step_terms(u, order, 1.0 / gamma_fn(order + 1.0), out);
    for (int j = 0; j <= g.n; ++j) {
        const double x = g.node(j);
        for (const auto& t : out.terms) out.values[j] += t.eval(x);
    }
    return out;
}

OperatorResult rl_derivative(const SbvFunction& u, const FracParams& p) {
    const double s = p.s;
    const Grid& g = u.grid();
    const double h = g.h();
    OperatorResult out{g, std::vector<double>(g.n + 1, 0.0), false, {}};
    const double inv_g2 = 1.0 / gamma_fn(2.0 - s);
    for (int j = 1; j <= g.n; ++j) {
        const double xj = g.node(j);
        double acc = 0.0;
        for (int k = 0; k < j; ++k)
            acc += u.slope(k) *
                   (std::pow(xj - g.node(k), 1.0 - s) - std::pow(xj - g.node(k + 1), 1.0 - s));
        out.values[j] = inv_g2 * acc;
    }
    const double inv_g1 = 1.0 / gamma_fn(1.0 - s);
    append_step_terms(u, -s, inv_g1, out);
    for (int j = 0; j <= g.n; ++j) {
        const double x = g.node(j);
        for (const auto& t : out.terms) out.values[j] += t.eval(x);
    }
    out.singular_at_a = u.base_value() != 0.0;
    return out;
}

} // namespace reference

} // namespace fraccalc
