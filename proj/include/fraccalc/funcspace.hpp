#ifndef FRACCALC_FUNCSPACE_HPP
#define FRACCALC_FUNCSPACE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fraccalc/grid.hpp"

namespace fraccalc {

/// A signed jump p at an interior location.
struct Jump {
    double location = 0.0;
    double height = 0.0;
};

/// SBV decomposition on a grid: piecewise-linear absolutely continuous part
/// (pinned to 0 at a) plus a finite sorted jump list plus the right limit
/// u(a+). Evaluation is right-continuous at every jump.
class SbvFunction {
public:
    SbvFunction(Grid grid, std::vector<double> ac_values, std::vector<Jump> jumps,
                double base_value);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& ac_values() const { return ac_; }
    const std::vector<Jump>& jumps() const { return jumps_; }
    double base_value() const { return base_; }

    /// Slope of the AC interpolant on cell k (between nodes k and k+1).
    double slope(int k) const { return (ac_[k + 1] - ac_[k]) / grid_.h(); }

    /// Right-continuous value anywhere in [a,b].
    double eval(double x) const;

    /// Value at node j (right-continuous: jumps located exactly at the node
    /// are included).
    double node_value(int j) const;

    /// Left-limit value at node j (jumps located exactly at the node are
    /// excluded).
    double node_value_left(int j) const;

    /// Sum of jump heights strictly left of x.
    double jump_sum_left(double x) const;

    /// JSON document {a, b, n, ac_values, jumps:[{x,p}], base_value}.
    std::string to_json() const;
    static SbvFunction from_json(const std::string& text);
    static SbvFunction load(const std::string& path);

private:
    Grid grid_;
    std::vector<double> ac_;
    std::vector<Jump> jumps_;
    double base_;
};

/// Reflection x -> a+b-x: reflect(u)(x) = u(a+b-x), re-expressed in the
/// right-continuous SBV representation.
SbvFunction reflect(const SbvFunction& u);

/// Cantor-Vitali iterate c_level on [0,1]; c_0(x) = x.
double cantor_vitali_eval(int level, double x);

/// Real part of the Weierstrass-type series sum q^{-n}(e^{i q^n x} - e^{i q^n a}),
/// truncated to `terms` terms; vanishes at x = a.
double weierstrass_eval(double q, int terms, double a, double x);

/// Analytic corpus: exact pointwise evaluators plus closed-form fractional
/// integrals/derivatives where available.
class CorpusFunction {
public:
    enum class Kind { Power, Constant, Heaviside, Polynomial, CantorVitali, Weierstrass, LogReciprocal };

    static CorpusFunction power(double k);
    static CorpusFunction constant(double c);
    static CorpusFunction heaviside(double alpha);
    static CorpusFunction polynomial(std::vector<double> coeffs);
    static CorpusFunction cantor_vitali(int level);
    static CorpusFunction weierstrass(double q, int terms);
    static CorpusFunction log_reciprocal();

    /// Parse a CLI spec such as "power:1.5", "heaviside:0.25", "constant:1",
    /// "poly:1,0,-0.5", "cantor:12", "weierstrass:2:20", "log-reciprocal".
    static CorpusFunction parse(const std::string& spec);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    /// Exact pointwise value on [a,b]; removable endpoint singularities
    /// evaluate to 0 (e.g. log_reciprocal at 0, power with negative exponent
    /// at a).
    double eval(double a, double b, double x) const;

    /// Closed-form left RL derivative of order s, where the corpus carries
    /// one (power/constant/heaviside/polynomial).
    bool has_exact_rl_derivative() const;
    double exact_rl_derivative(double a, double s, double x) const;

    /// Closed-form left RL integral of order s, where available.
    bool has_exact_rl_integral() const;
    double exact_rl_integral(double a, double s, double x) const;

    /// Scalar parameter of the kind (power exponent, constant value,
    /// heaviside location, weierstrass base q).
    double param() const { return p0_; }

private:
    CorpusFunction(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    double p0_ = 0.0;   // power k / constant c / heaviside alpha / weierstrass q
    int i0_ = 0;        // cantor level / weierstrass terms
    std::vector<double> coeffs_;
};

/// Sample a corpus function on a grid. Heaviside steps are emitted as exact
/// jumps, never as ramps; all other kinds sample the AC part at the nodes.
SbvFunction sample(const CorpusFunction& f, const Grid& grid);

} // namespace fraccalc

#endif
