#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fraccalc/norms.hpp"
#include "fraccalc/special.hpp"

using namespace fraccalc;

namespace {

SbvFunction sample_fn(const char* spec, int n) {
    return sample(CorpusFunction::parse(spec), Grid{0.0, 1.0, n});
}

SbvFunction scaled(const SbvFunction& u, double c) {
    std::vector<double> ac(u.ac_values());
    for (double& v : ac) v *= c;
    std::vector<Jump> js(u.jumps());
    for (auto& j : js) j.height *= c;
    return SbvFunction(u.grid(), std::move(ac), std::move(js), c * u.base_value());
}

} // namespace

TEST_CASE("lp_norm of sbv functions is exact on affine pieces") {
    const int n = 64;
    const SbvFunction x = sample_fn("power:1", n);
    CHECK(lp_norm(x, 1.0).value == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(lp_norm(x, 2.0).value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    const SbvFunction h = sample_fn("heaviside:0.25", n);
    CHECK(lp_norm(h, 1.0).value == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(lp_norm(h, 3.0).value == doctest::Approx(std::pow(0.75, 1.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("analytic jump path reproduces the heaviside derivative norm to 1e-8") {
    const int n = 256;
    const SbvFunction u = sample_fn("heaviside:0.25", n);
    for (double s : {0.25, 0.5, 0.9, 0.999}) {
        const double v = lp_norm(rl_derivative(u, FracParams{s}), 1.0).value;
        const double exact = std::pow(0.75, 1.0 - s) / gamma_fn(2.0 - s);
        CHECK(v == doctest::Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("lp_norm over a subinterval") {
    const int n = 64;
    const OperatorResult r{Grid{0.0, 1.0, n},
                           [&] {
                               std::vector<double> v(n + 1);
                               for (int j = 0; j <= n; ++j) v[j] = j / double(n);
                               return v;
                           }(),
                           false,
                           {}};
    CHECK(lp_norm(r, 1.0, 0.5).value == doctest::Approx(0.375).epsilon(1e-13));
    CHECK(lp_norm(r, 1.0).value == doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(lp_norm(r, 1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(lp_norm(r, 0.5), std::domain_error);
}

TEST_CASE("norm homogeneity and distance identities") {
    const int n = 128;
    const SbvFunction u = sample_fn("poly:0,1,-0.5", n);
    CHECK(lp_norm(scaled(u, 2.0), 1.0).value ==
          doctest::Approx(2.0 * lp_norm(u, 1.0).value).epsilon(1e-12));
    const OperatorResult d = rl_derivative(sample_fn("heaviside:0.5", n), FracParams{0.5});
    CHECK(l1_distance(d, d) == doctest::Approx(0.0));
    const OperatorResult i = rl_integral(u, 0.5);
    CHECK(l1_distance(i, to_sbv(i)) < 1e-12);
}

TEST_CASE("l1 distance against a pointwise oracle") {
    const int n = 512;
    const OperatorResult d = rl_derivative(sample_fn("power:2", n), FracParams{0.5});
    const double c = gamma_fn(3.0) / gamma_fn(2.5);
    const double dist =
        l1_distance(d, [&](double x) { return c * std::pow(x, 1.5); }, 0.0);
    CHECK(dist < 1e-4);
}

TEST_CASE("pairing with the constant test function equals the signed integral") {
    const int n = 256;
    const SbvFunction u = sample_fn("heaviside:0.25", n);
    const double s = 0.5;
    const OperatorResult d = rl_derivative(u, FracParams{s});
    const double exact = std::pow(0.75, 1.0 - s) / gamma_fn(2.0 - s);
    CHECK(pairing(d, [](double) { return 1.0; }) == doctest::Approx(exact).epsilon(1e-10));
    // against phi = x^2 the moment integral is computable in closed form:
    // int_alpha^1 (x-alpha)^{-s} x^2 dx expanded around x = alpha + t
    const double a = 0.25;
    double exact2 = 0.0;
    const double t1 = std::pow(0.75, 1.0 - s);
    exact2 += a * a * t1 / (1.0 - s);
    exact2 += 2.0 * a * std::pow(0.75, 2.0 - s) / (2.0 - s);
    exact2 += std::pow(0.75, 3.0 - s) / (3.0 - s);
    exact2 /= gamma_fn(1.0 - s);
    CHECK(pairing(d, [](double x) { return x * x; }) ==
          doctest::Approx(exact2).epsilon(1e-6));
}

TEST_CASE("total variation and sbv norm") {
    const int n = 32;
    const Grid g{0.0, 1.0, n};
    std::vector<double> ac(n + 1);
    for (int j = 0; j <= n; ++j) ac[j] = g.node(j); // slope 1
    const SbvFunction u(g, ac, {{0.3, 1.0}, {0.7, -2.0}}, 0.5);
    CHECK(total_variation(u).value == doctest::Approx(1.0 + 3.0).epsilon(1e-13));
    CHECK(sbv_norm(u).value == doctest::Approx(4.5).epsilon(1e-13));
}

TEST_CASE("gagliardo seminorm basics") {
    const int n = 64;
    CHECK(gagliardo_seminorm(sample_fn("constant:1", n), 0.5, 1.0).value ==
          doctest::Approx(0.0));
    // heaviside at 1/2, s = 1/2, p = 1: closed form 8(sqrt(2)-1)
    const SbvFunction h = sample_fn("heaviside:0.5", n);
    CHECK(gagliardo_seminorm(h, 0.5, 1.0).value ==
          doctest::Approx(8.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-9));
    CHECK(gagliardo_seminorm(scaled(h, 3.0), 0.5, 1.0).value ==
          doctest::Approx(24.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-9));
    CHECK_THROWS_AS(gagliardo_seminorm(h, 0.6, 2.0), std::domain_error);
    CHECK_THROWS_AS(gagliardo_seminorm(h, 1.2, 1.0), std::domain_error);
}

TEST_CASE("gagliardo seminorm is stable under grid refinement") {
    for (double p : {1.0, 2.0}) {
        const double s = 0.4;
        const double v1 = gagliardo_seminorm(sample_fn("power:2", 64), s, p).value;
        const double v2 = gagliardo_seminorm(sample_fn("power:2", 128), s, p).value;
        CHECK(std::abs(v2 / v1 - 1.0) < 0.02);
    }
}

TEST_CASE("gagliardo closed form for the linear function") {
    // u = x on [0,1], p = 1: int int |x-y|^{-s} = 2/((1-s)(2-s))
    const double s = 0.5;
    const double v = gagliardo_seminorm(sample_fn("power:1", 32), s, 1.0).value;
    CHECK(v == doctest::Approx(2.0 / ((1.0 - s) * (2.0 - s))).epsilon(1e-9));
}

TEST_CASE("holder exponent estimates") {
    const int n = 1024;
    CHECK(holder_exponent(sample_fn("power:1", n)).value == doctest::Approx(1.0).epsilon(0.02));
    CHECK(holder_exponent(sample_fn("constant:1", n)).value == doctest::Approx(1.0));
    CHECK(holder_exponent(sample_fn("heaviside:0.5", n)).value < 0.05);
    const double est = holder_exponent(sample_fn("power:0.5", n)).value;
    CHECK(est == doctest::Approx(0.5).epsilon(0.1));
    CHECK_THROWS_AS(holder_exponent(std::vector<double>(4, 0.0), 0.25), std::domain_error);
}
