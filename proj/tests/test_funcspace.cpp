#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fraccalc/funcspace.hpp"

using namespace fraccalc;

namespace {
Grid g16{0.0, 1.0, 16};
}

TEST_CASE("sbv evaluation is right-continuous at jumps") {
    std::vector<double> ac(17, 0.0);
    SbvFunction u(g16, ac, {{0.5, 2.0}}, 1.0);
    CHECK(u.eval(0.0) == doctest::Approx(1.0));
    CHECK(u.eval(0.5) == doctest::Approx(3.0));
    CHECK(u.eval(0.5 - 1e-12) == doctest::Approx(1.0));
    CHECK(u.eval(1.0) == doctest::Approx(3.0));
    CHECK(u.node_value(8) == doctest::Approx(3.0));
    CHECK(u.node_value_left(8) == doctest::Approx(1.0));
}

TEST_CASE("sbv validation") {
    std::vector<double> ac(17, 0.0);
    CHECK_THROWS_AS(SbvFunction(g16, {0.0, 1.0}, {}, 0.0), std::domain_error); // wrong size
    ac[0] = 0.5;
    CHECK_THROWS_AS(SbvFunction(g16, ac, {}, 0.0), std::domain_error); // ac not pinned
    ac[0] = 0.0;
    CHECK_THROWS_AS(SbvFunction(g16, ac, {{1.5, 1.0}}, 0.0), std::domain_error); // jump outside
}

TEST_CASE("json round trip") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> ac(17, 0.0);
        for (int j = 1; j <= 16; ++j) ac[j] = dist(rng);
        SbvFunction u(g16, ac, {{0.25, dist(rng)}, {0.8, dist(rng)}}, dist(rng));
        const SbvFunction v = SbvFunction::from_json(u.to_json());
        REQUIRE(v.grid() == u.grid());
        for (int j = 0; j <= 16; ++j) CHECK(v.node_value(j) == doctest::Approx(u.node_value(j)));
        CHECK(v.jumps().size() == u.jumps().size());
        CHECK(v.base_value() == doctest::Approx(u.base_value()));
    }
}

TEST_CASE("reflection involution and value identity") {
    std::vector<double> ac(17);
    for (int j = 0; j <= 16; ++j) ac[j] = std::sin(2.5 * g16.node(j)) - 0.0;
    ac[0] = 0.0;
    SbvFunction u(g16, ac, {{0.3, 1.5}}, 0.5);
    const SbvFunction r = reflect(u);
    // r(x) should equal u(a+b-x) wherever both sides are continuity points
    for (double x : {0.05, 0.2, 0.41, 0.66, 0.9}) {
        CHECK(r.eval(x) == doctest::Approx(u.eval(1.0 - x)).epsilon(1e-10));
    }
    const SbvFunction rr = reflect(r);
    for (int j = 0; j <= 16; ++j)
        CHECK(rr.node_value(j) == doctest::Approx(u.node_value(j)).epsilon(1e-12));
}

TEST_CASE("cantor-vitali iterates") {
    CHECK(cantor_vitali_eval(12, 0.0) == doctest::Approx(0.0));
    CHECK(cantor_vitali_eval(12, 1.0) == doctest::Approx(1.0));
    CHECK(cantor_vitali_eval(12, 0.5) == doctest::Approx(0.5));
    CHECK(cantor_vitali_eval(3, 1.0 / 9.0) == doctest::Approx(0.25));
    CHECK(cantor_vitali_eval(12, 0.4) == doctest::Approx(0.5)); // middle-third plateau
    // monotone nondecreasing
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        double x = dist(rng), y = dist(rng);
        if (x > y) std::swap(x, y);
        CHECK(cantor_vitali_eval(12, x) <= cantor_vitali_eval(12, y) + 1e-15);
    }
    // refinement: consecutive iterates differ by at most 2^-level
    for (double x : {0.1, 0.37, 0.5, 0.81}) {
        CHECK(std::abs(cantor_vitali_eval(11, x) - cantor_vitali_eval(12, x)) <=
              std::pow(2.0, -11));
    }
}

TEST_CASE("weierstrass series vs long-double reference") {
    auto ref = [](double q, int terms, double a, double x) {
        long double acc = 0.0L;
        for (int k = 0; k < terms; ++k) {
            const long double qa = std::pow((long double)q, (long double)k);
            acc += (std::cos(qa * (long double)x) - std::cos(qa * (long double)a)) /
                   std::pow((long double)q, (long double)k);
        }
        return (double)acc;
    };
    for (double x : {0.0, 0.1, 0.33, 0.77, 1.0}) {
        CHECK(weierstrass_eval(2.0, 20, 0.0, x) ==
              doctest::Approx(ref(2.0, 20, 0.0, x)).epsilon(1e-12));
    }
    CHECK(weierstrass_eval(2.0, 20, 0.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("corpus parse and evaluation") {
    const CorpusFunction p = CorpusFunction::parse("power:1.5");
    CHECK(p.kind() == CorpusFunction::Kind::Power);
    CHECK(p.eval(0.0, 1.0, 0.25) == doctest::Approx(std::pow(0.25, 1.5)));

    const CorpusFunction h = CorpusFunction::parse("heaviside:0.25");
    CHECK(h.eval(0.0, 1.0, 0.1) == doctest::Approx(0.0));
    CHECK(h.eval(0.0, 1.0, 0.3) == doctest::Approx(1.0));

    const CorpusFunction poly = CorpusFunction::parse("poly:1,0,-0.5");
    CHECK(poly.eval(0.0, 1.0, 0.5) == doctest::Approx(1.0 - 0.5 * 0.25));

    CHECK(CorpusFunction::parse("cantor:12").kind() == CorpusFunction::Kind::CantorVitali);
    CHECK(CorpusFunction::parse("weierstrass:2:20").kind() ==
          CorpusFunction::Kind::Weierstrass);
    CHECK(CorpusFunction::parse("log-reciprocal").eval(0.0, 1.0, 0.0) == doctest::Approx(0.0));
    CHECK(CorpusFunction::parse("constant:2").eval(0.0, 1.0, 0.5) == doctest::Approx(2.0));

    CHECK_THROWS_AS(CorpusFunction::parse("nope:1"), std::domain_error);
    CHECK_THROWS_AS(CorpusFunction::parse("power:-1.5"), std::domain_error);
    CHECK_THROWS_AS(CorpusFunction::parse("cantor:xyz"), std::domain_error);
}

TEST_CASE("sampling emits heaviside as an exact jump") {
    const SbvFunction u = sample(CorpusFunction::parse("heaviside:0.25"), g16);
    REQUIRE(u.jumps().size() == 1);
    CHECK(u.jumps()[0].location == doctest::Approx(0.25));
    CHECK(u.jumps()[0].height == doctest::Approx(1.0));
    for (double v : u.ac_values()) CHECK(v == 0.0);
    CHECK(u.base_value() == 0.0);
}

TEST_CASE("sampling splits smooth functions into base plus pinned AC part") {
    const SbvFunction u = sample(CorpusFunction::parse("poly:1,0,1"), g16); // 1 + x^2
    CHECK(u.base_value() == doctest::Approx(1.0));
    CHECK(u.ac_values()[0] == 0.0);
    CHECK(u.jumps().empty());
    CHECK(u.node_value(8) == doctest::Approx(1.25));
}
