#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fraccalc/operators.hpp"
#include "fraccalc/special.hpp"

using namespace fraccalc;

namespace {

SbvFunction sample_fn(const char* spec, int n) {
    return sample(CorpusFunction::parse(spec), Grid{0.0, 1.0, n});
}

double max_node_diff(const OperatorResult& a, const OperatorResult& b, int from = 0) {
    double m = 0.0;
    for (int j = from; j <= a.grid.n; ++j) m = std::max(m, std::abs(a.values[j] - b.values[j]));
    return m;
}

} // namespace

TEST_CASE("power term evaluation is open at its location") {
    const PowerTerm t{2.0, 0.5, -0.5, false};
    CHECK(t.eval(0.5) == 0.0);
    CHECK(t.eval(0.4) == 0.0);
    CHECK(t.eval(0.75) == doctest::Approx(2.0 * std::pow(0.25, -0.5)));
    const PowerTerm r{1.0, 0.5, -0.5, true};
    CHECK(r.eval(0.5) == 0.0);
    CHECK(r.eval(0.75) == 0.0);
    CHECK(r.eval(0.25) == doctest::Approx(std::pow(0.25, -0.5)));
}

TEST_CASE("rl_integral matches the power closed form") {
    const int n = 1024;
    for (double k : {1.0, 2.0}) {
        const SbvFunction u = sample_fn(k == 1.0 ? "power:1" : "power:2", n);
        for (double s : {0.3, 0.5, 0.8}) {
            const OperatorResult r = rl_integral(u, s);
            const double c = gamma_fn(k + 1.0) / gamma_fn(k + 1.0 + s);
            double worst = 0.0;
            for (int j = 0; j <= n; ++j) {
                const double x = r.grid.node(j);
                worst = std::max(worst, std::abs(r.values[j] - c * std::pow(x, k + s)));
            }
            CHECK(worst < 1e-5);
        }
    }
}

TEST_CASE("rl_derivative of heaviside is the exact jump term") {
    const int n = 256;
    const SbvFunction u = sample_fn("heaviside:0.25", n);
    const double s = 0.4;
    const OperatorResult r = rl_derivative(u, FracParams{s});
    REQUIRE(r.terms.size() == 1);
    CHECK_FALSE(r.singular_at_a);
    const double g1 = gamma_fn(1.0 - s);
    for (int j = 0; j <= n; ++j) {
        const double x = r.grid.node(j);
        const double exact = x > 0.25 ? std::pow(x - 0.25, -s) / g1 : 0.0;
        CHECK(r.values[j] == doctest::Approx(exact).epsilon(1e-12));
    }
    // left-limit convention exactly at the jump node
    CHECK(r.values[n / 4] == 0.0);
}

TEST_CASE("rl_derivative of x^k vs closed form away from the origin") {
    const int n = 2048;
    const SbvFunction u = sample_fn("power:2", n);
    const double s = 0.5;
    const OperatorResult r = rl_derivative(u, FracParams{s});
    const double c = gamma_fn(3.0) / gamma_fn(3.0 - s);
    double worst = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double x = r.grid.node(j);
        if (x < 0.1) continue;
        const double exact = c * std::pow(x, 2.0 - s);
        worst = std::max(worst, std::abs(r.values[j] - exact) / exact);
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("derivative inverts the integral on smooth functions") {
    const int n = 1024;
    const SbvFunction f = sample_fn("power:1", n);
    for (double s : {0.3, 0.7}) {
        const SbvFunction u = to_sbv(rl_integral(f, s));
        const OperatorResult d = rl_derivative(u, FracParams{s});
        double worst = 0.0;
        for (int j = n / 10; j <= n; ++j)
            worst = std::max(worst, std::abs(d.values[j] - f.node_value(j)));
        CHECK(worst < 1e-3);
    }
}

TEST_CASE("semigroup of fractional integrals") {
    const int n = 1024;
    const SbvFunction f = sample_fn("power:2", n);
    const OperatorResult lhs = rl_integral(to_sbv(rl_integral(f, 0.4)), 0.3);
    const OperatorResult rhs = rl_integral(f, 0.7);
    CHECK(max_node_diff(lhs, rhs) < 1e-5);
}

TEST_CASE("operators are linear") {
    const int n = 128;
    const Grid g{0.0, 1.0, n};
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> a(n + 1, 0.0), b(n + 1, 0.0), c(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) {
        a[j] = dist(rng);
        b[j] = dist(rng);
        c[j] = 2.0 * a[j] - 3.0 * b[j];
    }
    const SbvFunction ua(g, a, {}, 1.0), ub(g, b, {}, -0.5);
    const SbvFunction uc(g, c, {}, 2.0 * 1.0 - 3.0 * -0.5);
    const FracParams p{0.6};
    const OperatorResult da = rl_derivative(ua, p), db = rl_derivative(ub, p),
                         dc = rl_derivative(uc, p);
    for (int j = 1; j <= n; ++j)
        CHECK(dc.values[j] ==
              doctest::Approx(2.0 * da.values[j] - 3.0 * db.values[j]).epsilon(1e-10));
}

TEST_CASE("caputo relation and jump rejection") {
    const int n = 512;
    const SbvFunction u = sample_fn("poly:1,0,1", n);
    const double s = 0.5;
    const OperatorResult d = rl_derivative(u, FracParams{s});
    const OperatorResult c = caputo_derivative(u, FracParams{s});
    const double g1 = gamma_fn(1.0 - s);
    for (int j = 1; j <= n; ++j) {
        const double x = d.grid.node(j);
        CHECK(d.values[j] - c.values[j] ==
              doctest::Approx(std::pow(x, -s) / g1).epsilon(1e-12));
    }
    CHECK_THROWS_AS(caputo_derivative(sample_fn("heaviside:0.5", n), FracParams{s}),
                    std::domain_error);
}

TEST_CASE("marchaud approaches the RL derivative as eps shrinks") {
    const int n = 512;
    const double s = 0.5, h = 1.0 / n;
    const SbvFunction u = to_sbv(rl_integral(sample_fn("power:1", n), s)); // u(a) = 0, C^1
    const OperatorResult d = rl_derivative(u, FracParams{s});
    double prev = 1e300;
    for (double eps : {8 * h, 4 * h, 2 * h}) {
        const OperatorResult m = marchaud_derivative(u, FracParams{s}, eps);
        const double diff = max_node_diff(m, d, 1);
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("marchaud eps validation") {
    const int n = 64;
    const SbvFunction u = sample_fn("power:1", n);
    const FracParams p{0.5};
    CHECK_THROWS_AS(marchaud_derivative(u, p, 0.3 / 64.0), std::domain_error);
    CHECK_THROWS_AS(marchaud_derivative(u, p, 2.0), std::domain_error);
    CHECK_NOTHROW(marchaud_derivative(u, p, 4.0 / 64.0));
}

TEST_CASE("marchaud of a constant keeps the closed form") {
    const int n = 256;
    const SbvFunction u = sample_fn("constant:1", n);
    const double s = 0.3, eps = 8.0 / n;
    const OperatorResult m = marchaud_derivative(u, FracParams{s}, eps);
    const double g1 = gamma_fn(1.0 - s);
    for (int j = 0; j <= n; ++j) {
        const double x = m.grid.node(j);
        // combined truncated form evaluated analytically for u = 1
        const double exact = x <= eps ? std::pow(eps, -s) / g1
                                      : (std::pow(eps, -s) -
                                         (std::pow(eps, -s) - std::pow(x, -s))) / g1;
        CHECK(m.values[j] == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("right-side operators mirror the left ones") {
    const int n = 256;
    const SbvFunction c1 = sample_fn("constant:1", n);
    const double s = 0.5;
    const OperatorResult ir = rl_integral_right(c1, s);
    for (int j = 0; j <= n; ++j) {
        const double x = ir.grid.node(j);
        CHECK(ir.values[j] ==
              doctest::Approx(std::pow(1.0 - x, s) / gamma_fn(1.0 + s)).epsilon(1e-12));
    }
    const OperatorResult dr = rl_derivative_right(c1, FracParams{s});
    const double g1 = gamma_fn(1.0 - s);
    for (int j = 0; j < n; ++j) {
        const double x = dr.grid.node(j);
        CHECK(dr.values[j] == doctest::Approx(std::pow(1.0 - x, -s) / g1).epsilon(1e-12));
    }
    CHECK(dr.values[n] == 0.0); // base point of the right operator
}

TEST_CASE("reflection of results is an involution") {
    const int n = 64;
    const SbvFunction u = sample_fn("power:2", n);
    const OperatorResult r = rl_derivative(u, FracParams{0.4});
    const OperatorResult rr = reflect(reflect(r));
    CHECK(max_node_diff(r, rr) == 0.0);
    REQUIRE(rr.terms.size() == r.terms.size());
}

TEST_CASE("serial reference implementations agree with the fused kernels") {
    const int n = 300;
    const Grid g{0.0, 1.0, n};
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> ac(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) ac[j] = dist(rng);
    const SbvFunction u(g, ac, {{0.37, 0.8}}, 0.6);
    for (double s : {0.25, 0.5, 0.9}) {
        const OperatorResult a = rl_integral(u, s);
        const OperatorResult b = reference::rl_integral(u, s);
        for (int j = 0; j <= n; ++j)
            CHECK(a.values[j] == doctest::Approx(b.values[j]).epsilon(1e-10));
        const OperatorResult da = rl_derivative(u, FracParams{s});
        const OperatorResult db = reference::rl_derivative(u, FracParams{s});
        for (int j = 1; j <= n; ++j)
            CHECK(da.values[j] == doctest::Approx(db.values[j]).epsilon(1e-10));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FracParams{0.0}, std::domain_error);
    CHECK_THROWS_AS(FracParams{1.0}, std::domain_error);
    const SbvFunction u = sample_fn("power:1", 32);
    CHECK_THROWS_AS(rl_integral(u, 0.0), std::domain_error);
    CHECK_THROWS_AS(rl_integral(u, 1.0), std::domain_error);
}

TEST_CASE("to_sbv rejects singular results") {
    const SbvFunction u = sample_fn("constant:1", 64);
    const OperatorResult d = rl_derivative(u, FracParams{0.5});
    CHECK(d.singular_at_a);
    CHECK_THROWS_AS(to_sbv(d), std::domain_error);
    CHECK_NOTHROW(to_sbv(rl_integral(u, 0.5)));
}
