#ifndef FRACCALC_GRID_HPP
#define FRACCALC_GRID_HPP

#include <stdexcept>
#include <vector>

namespace fraccalc {

/// Uniform partition of [a,b] with n cells and n+1 nodes.
struct Grid {
    double a = 0.0;
    double b = 1.0;
    int n = 2;

    Grid() = default;
    Grid(double a_, double b_, int n_) : a(a_), b(b_), n(n_) {
        if (!(a < b)) throw std::domain_error("Grid: requires a < b");
        if (n < 2) throw std::domain_error("Grid: requires n >= 2");
    }

    double h() const { return (b - a) / n; }
    double node(int j) const { return a + j * (b - a) / n; }

    std::vector<double> nodes() const {
        std::vector<double> x(n + 1);
        for (int j = 0; j <= n; ++j) x[j] = node(j);
        return x;
    }

    bool operator==(const Grid& o) const { return a == o.a && b == o.b && n == o.n; }
};

} // namespace fraccalc

#endif
