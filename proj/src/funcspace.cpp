#include "fraccalc/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fraccalc/special.hpp"

namespace fraccalc {

SbvFunction::SbvFunction(Grid grid, std::vector<double> ac_values, std::vector<Jump> jumps,
                         double base_value)
    : grid_(grid), ac_(std::move(ac_values)), jumps_(std::move(jumps)), base_(base_value) {
    if (static_cast<int>(ac_.size()) != grid_.n + 1)
        throw std::domain_error("SbvFunction: ac_values must have n+1 entries");
    if (ac_[0] != 0.0)
        throw std::domain_error("SbvFunction: AC part must be pinned to 0 at a");
    for (double v : ac_)
        if (!std::isfinite(v)) throw std::domain_error("SbvFunction: non-finite AC sample");
    double prev = grid_.a;
    for (const Jump& jp : jumps_) {
        if (!(jp.location > grid_.a && jp.location < grid_.b))
            throw std::domain_error("SbvFunction: jump location outside (a,b)");
        if (!(jp.location > prev))
            throw std::domain_error("SbvFunction: jumps must be strictly sorted by location");
        if (jp.height == 0.0) throw std::domain_error("SbvFunction: zero jump height");
        prev = jp.location;
    }
}

double SbvFunction::eval(double x) const {
    const double a = grid_.a, b = grid_.b, h = grid_.h();
    if (x < a || x > b) throw std::domain_error("SbvFunction::eval: x outside [a,b]");
    int k = std::min(static_cast<int>((x - a) / h), grid_.n - 1);
    double t = (x - grid_.node(k)) / h;
    double v = base_ + ac_[k] * (1.0 - t) + ac_[k + 1] * t;
    for (const Jump& jp : jumps_) {
        if (jp.location <= x) v += jp.height;
        else break;
    }
    return v;
}

double SbvFunction::node_value(int j) const {
    double x = grid_.node(j);
    double v = base_ + ac_[j];
    for (const Jump& jp : jumps_) {
        if (jp.location <= x) v += jp.height;
        else break;
    }
    return v;
}

double SbvFunction::node_value_left(int j) const {
    double x = grid_.node(j);
    double v = base_ + ac_[j];
    for (const Jump& jp : jumps_) {
        if (jp.location < x) v += jp.height;
        else break;
    }
    return v;
}

double SbvFunction::jump_sum_left(double x) const {
    double v = 0.0;
    for (const Jump& jp : jumps_) {
        if (jp.location < x) v += jp.height;
        else break;
    }
    return v;
}

std::string SbvFunction::to_json() const {
    nlohmann::json doc;
    doc["a"] = grid_.a;
    doc["b"] = grid_.b;
    doc["n"] = grid_.n;
    doc["ac_values"] = ac_;
    doc["base_value"] = base_;
    auto& arr = doc["jumps"] = nlohmann::json::array();
    for (const Jump& jp : jumps_) arr.push_back({{"x", jp.location}, {"p", jp.height}});
    return doc.dump(2);
}

SbvFunction SbvFunction::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Grid g(doc.at("a").get<double>(), doc.at("b").get<double>(), doc.at("n").get<int>());
    std::vector<double> ac = doc.at("ac_values").get<std::vector<double>>();
    std::vector<Jump> jumps;
    for (const auto& j : doc.at("jumps"))
        jumps.push_back({j.at("x").get<double>(), j.at("p").get<double>()});
    return SbvFunction(g, std::move(ac), std::move(jumps),
                       doc.at("base_value").get<double>());
}

SbvFunction SbvFunction::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

SbvFunction reflect(const SbvFunction& u) {
    const Grid& g = u.grid();
    const int n = g.n;
    std::vector<double> ac(n + 1);
    for (int j = 0; j <= n; ++j) ac[j] = u.ac_values()[n - j] - u.ac_values()[n];
    std::vector<Jump> jumps;
    const auto& src = u.jumps();
    for (auto it = src.rbegin(); it != src.rend(); ++it)
        jumps.push_back({g.a + g.b - it->location, -it->height});
    double total_jump = 0.0;
    for (const Jump& jp : src) total_jump += jp.height;
    double base = u.base_value() + u.ac_values()[n] + total_jump; // u(b)
    return SbvFunction(g, std::move(ac), std::move(jumps), base);
}

double cantor_vitali_eval(int level, double x) {
    if (level < 1) throw std::domain_error("cantor_vitali_eval: level must be >= 1");
    if (x < 0.0 || x > 1.0) throw std::domain_error("cantor_vitali_eval: x outside [0,1]");
    double value = 0.0, scale = 0.5;
    for (int m = 0; m < level; ++m) {
        if (x < 1.0 / 3.0) {
            x *= 3.0;
        } else if (x <= 2.0 / 3.0) {
            return value + scale;
        } else {
            value += scale;
            x = 3.0 * x - 2.0;
        }
        scale *= 0.5;
    }
    return value + 2.0 * scale * x; // remaining c_0(x) = x at weight 2*scale
}

double weierstrass_eval(double q, int terms, double a, double x) {
    if (!(q > 1.0)) throw std::domain_error("weierstrass_eval: q must exceed 1");
    if (terms < 1) throw std::domain_error("weierstrass_eval: terms must be >= 1");
    double sum = 0.0, qn = 1.0;
    for (int m = 0; m < terms; ++m) {
        sum += (std::cos(qn * x) - std::cos(qn * a)) / qn;
        qn *= q;
    }
    return sum;
}

CorpusFunction CorpusFunction::power(double k) {
    if (!(k > -1.0)) throw std::domain_error("power: exponent must exceed -1");
    CorpusFunction f(Kind::Power, "power");
    f.p0_ = k;
    return f;
}

CorpusFunction CorpusFunction::constant(double c) {
    CorpusFunction f(Kind::Constant, "constant");
    f.p0_ = c;
    return f;
}

CorpusFunction CorpusFunction::heaviside(double alpha) {
    CorpusFunction f(Kind::Heaviside, "heaviside");
    f.p0_ = alpha;
    return f;
}

CorpusFunction CorpusFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) throw std::domain_error("polynomial: empty coefficient list");
    CorpusFunction f(Kind::Polynomial, "poly");
    f.coeffs_ = std::move(coeffs);
    return f;
}

CorpusFunction CorpusFunction::cantor_vitali(int level) {
    if (level < 1) throw std::domain_error("cantor_vitali: level must be >= 1");
    CorpusFunction f(Kind::CantorVitali, "cantor");
    f.i0_ = level;
    return f;
}

CorpusFunction CorpusFunction::weierstrass(double q, int terms) {
    if (!(q > 1.0)) throw std::domain_error("weierstrass: q must exceed 1");
    if (terms < 1) throw std::domain_error("weierstrass: terms must be >= 1");
    CorpusFunction f(Kind::Weierstrass, "weierstrass");
    f.p0_ = q;
    f.i0_ = terms;
    return f;
}

CorpusFunction CorpusFunction::log_reciprocal() {
    return CorpusFunction(Kind::LogReciprocal, "log-reciprocal");
}

CorpusFunction CorpusFunction::parse(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::domain_error("empty function spec");
    const std::string& head = parts[0];
    auto num = [&](size_t i) {
        if (i >= parts.size()) throw std::domain_error("function spec missing parameter: " + spec);
        try {
            std::size_t pos = 0;
            const double v = std::stod(parts[i], &pos);
            if (pos != parts[i].size()) throw std::domain_error("");
            return v;
        } catch (const std::exception&) {
            throw std::domain_error("bad numeric parameter in function spec: " + spec);
        }
    };
    if (head == "power") return power(num(1));
    if (head == "constant") return constant(num(1));
    if (head == "heaviside") return heaviside(num(1));
    if (head == "cantor") return cantor_vitali(static_cast<int>(num(1)));
    if (head == "weierstrass") return weierstrass(num(1), static_cast<int>(num(2)));
    if (head == "log-reciprocal") return log_reciprocal();
    if (head == "poly") {
        if (parts.size() < 2) throw std::domain_error("poly spec needs coefficients");
        std::vector<double> coeffs;
        std::stringstream cs(parts[1]);
        while (std::getline(cs, item, ',')) {
            try {
                coeffs.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw std::domain_error("bad coefficient in poly spec: " + spec);
            }
        }
        return polynomial(std::move(coeffs));
    }
    throw std::domain_error("unknown function spec: " + spec);
}

double CorpusFunction::eval(double a, double b, double x) const {
    switch (kind_) {
        case Kind::Power: {
            double t = x - a;
            if (t == 0.0) return p0_ == 0.0 ? 1.0 : 0.0; // value 0 assigned at a for k < 0
            return std::pow(t, p0_);
        }
        case Kind::Constant:
            return p0_;
        case Kind::Heaviside:
            return x >= p0_ ? 1.0 : 0.0;
        case Kind::Polynomial: {
            double v = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
            return v;
        }
        case Kind::CantorVitali:
            if (a != 0.0 || b != 1.0)
                throw std::domain_error("cantor corpus function is defined on [0,1]");
            return cantor_vitali_eval(i0_, x);
        case Kind::Weierstrass:
            return weierstrass_eval(p0_, i0_, a, x);
        case Kind::LogReciprocal: {
            if (a != 0.0 || b != 1.0)
                throw std::domain_error("log-reciprocal corpus function is defined on [0,1]");
            if (x == 0.0) return 0.0;
            return 1.0 / std::log(x / 2.0);
        }
    }
    return 0.0;
}

bool CorpusFunction::has_exact_rl_derivative() const {
    return kind_ == Kind::Power || kind_ == Kind::Constant || kind_ == Kind::Heaviside ||
           kind_ == Kind::Polynomial;
}

namespace {

// Shift polynomial coefficients from the x basis to the (x-a) basis via
// x^m = ((x-a)+a)^m.
std::vector<double> shift_poly(const std::vector<double>& c, double a) {
    std::vector<double> out(c.size(), 0.0);
    std::vector<std::vector<double>> binom(c.size(), std::vector<double>(c.size(), 0.0));
    for (size_t m = 0; m < c.size(); ++m) {
        binom[m][0] = 1.0;
        for (size_t j = 1; j <= m; ++j)
            binom[m][j] = binom[m - 1][j - 1] + (j <= m - 1 ? binom[m - 1][j] : 0.0);
    }
    for (size_t m = 0; m < c.size(); ++m)
        for (size_t k = 0; k <= m; ++k)
            out[k] += c[m] * binom[m][k] * std::pow(a, double(m - k));
    return out;
}

} // namespace

double CorpusFunction::exact_rl_derivative(double a, double s, double x) const {
    switch (kind_) {
        case Kind::Power: {
            // Gamma(k+1)/Gamma(k-s+1) * (x-a)^{k-s}; identically 0 when
            // k-s+1 hits a non-positive integer pole (k = s-1).
            double denom_arg = p0_ - s + 1.0;
            if (denom_arg <= 0.0) {
                if (std::abs(denom_arg) < 1e-12) return 0.0; // 1/Gamma(0) = 0
                throw std::domain_error("exact_rl_derivative: pole outside supported range");
            }
            if (x == a) return 0.0;
            return gamma_fn(p0_ + 1.0) / gamma_fn(denom_arg) * std::pow(x - a, p0_ - s);
        }
        case Kind::Constant:
            if (x == a) return 0.0;
            return p0_ * std::pow(x - a, -s) / gamma_fn(1.0 - s);
        case Kind::Heaviside:
            if (x <= p0_) return 0.0;
            return std::pow(x - p0_, -s) / gamma_fn(1.0 - s);
        case Kind::Polynomial: {
            auto shifted = shift_poly(coeffs_, a);
            double v = 0.0;
            for (size_t k = 0; k < shifted.size(); ++k) {
                if (shifted[k] == 0.0) continue;
                if (k == 0) {
                    if (x > a) v += shifted[k] * std::pow(x - a, -s) / gamma_fn(1.0 - s);
                } else {
                    v += shifted[k] * gamma_fn(double(k) + 1.0) / gamma_fn(double(k) - s + 1.0) *
                         std::pow(x - a, double(k) - s);
                }
            }
            return v;
        }
        default:
            throw std::domain_error("no exact RL derivative for this corpus function");
    }
}

bool CorpusFunction::has_exact_rl_integral() const { return has_exact_rl_derivative(); }

double CorpusFunction::exact_rl_integral(double a, double s, double x) const {
    switch (kind_) {
        case Kind::Power:
            if (x == a) return 0.0;
            return gamma_fn(p0_ + 1.0) / gamma_fn(p0_ + 1.0 + s) * std::pow(x - a, p0_ + s);
        case Kind::Constant:
            if (x == a) return 0.0;
            return p0_ * std::pow(x - a, s) / gamma_fn(1.0 + s);
        case Kind::Heaviside:
            if (x <= p0_) return 0.0;
            return std::pow(x - p0_, s) / gamma_fn(1.0 + s);
        case Kind::Polynomial: {
            auto shifted = shift_poly(coeffs_, a);
            double v = 0.0;
            for (size_t k = 0; k < shifted.size(); ++k)
                if (shifted[k] != 0.0 && x > a)
                    v += shifted[k] * gamma_fn(double(k) + 1.0) / gamma_fn(double(k) + 1.0 + s) *
                         std::pow(x - a, double(k) + s);
            return v;
        }
        default:
            throw std::domain_error("no exact RL integral for this corpus function");
    }
}

SbvFunction sample(const CorpusFunction& f, const Grid& grid) {
    const int n = grid.n;
    if (f.kind() == CorpusFunction::Kind::Heaviside) {
        double alpha = f.param();
        if (!(alpha > grid.a && alpha < grid.b))
            throw std::domain_error("heaviside step location outside (a,b)");
        std::vector<double> ac(n + 1, 0.0);
        return SbvFunction(grid, std::move(ac), {Jump{alpha, 1.0}}, 0.0);
    }
    double base = f.eval(grid.a, grid.b, grid.a);
    std::vector<double> ac(n + 1);
    for (int j = 0; j <= n; ++j) ac[j] = f.eval(grid.a, grid.b, grid.node(j)) - base;
    return SbvFunction(grid, std::move(ac), {}, base);
}

} // namespace fraccalc
