#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "fraccalc/operators.hpp"
#include "fraccalc/parallel.hpp"

namespace {

using namespace fraccalc;
using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<OperatorResult()>& f, int reps) {
    double best = 1e300;
    volatile double sink = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        const OperatorResult out = f();
        const auto t1 = clock_type::now();
        sink = sink + out.values.back();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
    configure_threads();
    std::printf("%8s %12s %14s %14s %8s\n", "n", "kernel", "parallel[ms]", "serial[ms]",
                "speedup");
    for (int n : {1024, 4096, 16384}) {
        Grid g{0.0, 1.0, n};
        std::vector<double> ac(n + 1);
        for (int j = 0; j <= n; ++j) ac[j] = std::sin(3.0 * g.node(j)) * g.node(j);
        const SbvFunction u(g, std::move(ac), {{0.4, 1.0}}, 0.0);
        const int reps = n >= 16384 ? 3 : 7;

        const double ip = time_ms([&] { return rl_integral(u, 0.5); }, reps);
        const double is = time_ms([&] { return reference::rl_integral(u, 0.5); }, reps);
        std::printf("%8d %12s %14.3f %14.3f %8.2f\n", n, "rl_integral", ip, is, is / ip);

        const FracParams p{0.5};
        const double dp = time_ms([&] { return rl_derivative(u, p); }, reps);
        const double ds = time_ms([&] { return reference::rl_derivative(u, p); }, reps);
        std::printf("%8d %12s %14.3f %14.3f %8.2f\n", n, "rl_derivative", dp, ds, ds / dp);
    }
    return 0;
}
