#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fraccalc/io.hpp"
#include "fraccalc/limits.hpp"
#include "fraccalc/norms.hpp"
#include "fraccalc/operators.hpp"
#include "fraccalc/parallel.hpp"
#include "fraccalc/special.hpp"
#include "fraccalc/verify.hpp"

namespace {

using namespace fraccalc;
using nlohmann::json;

struct BadSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool looks_like_path(const std::string& spec) {
    return spec.size() > 5 && spec.substr(spec.size() - 5) == ".json";
}

// Either a corpus function sampled on the requested grid or a JSON-supplied
// SbvFunction (which carries its own grid).
struct LoadedFunction {
    SbvFunction u;
    std::optional<CorpusFunction> corpus; // set when a closed-form oracle may exist
};

LoadedFunction load_function(const std::string& spec, double a, double b, int n) {
    if (looks_like_path(spec)) {
        try {
            return {SbvFunction::load(spec), std::nullopt};
        } catch (const std::exception& e) {
            throw BadSpec(std::string("cannot load '") + spec + "': " + e.what());
        }
    }
    try {
        CorpusFunction f = CorpusFunction::parse(spec);
        Grid g{a, b, n};
        return {sample(f, g), f};
    } catch (const std::domain_error& e) {
        throw BadSpec(e.what());
    }
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-")
        std::cout << content;
    else
        io::write_file(out, content);
}

std::string rows_as_json(const std::vector<std::string>& cols,
                         const std::vector<std::vector<double>>& rows) {
    json doc;
    doc["version"] = io::kVersion;
    doc["columns"] = cols;
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

void emit_table(const std::string& out, const std::string& format, const std::string& title,
                const std::vector<std::string>& cols,
                const std::vector<std::vector<double>>& rows) {
    if (format == "csv") {
        emit(out, io::csv_table(cols, rows));
    } else if (format == "json") {
        emit(out, rows_as_json(cols, rows));
    } else if (format == "svg") {
        std::vector<io::Series> series;
        for (std::size_t c = 1; c < cols.size(); ++c) {
            io::Series s{cols[c], {}};
            for (const auto& row : rows) s.points.emplace_back(row[0], row[c]);
            series.push_back(std::move(s));
        }
        emit(out, io::svg_plot(title, cols[0], "value", series));
    } else {
        throw BadSpec("unknown format '" + format + "'");
    }
}

// Fill unset flags from a JSON config document; flags given on the command
// line win.
void apply_config(CLI::App& app, const json& cfg) {
    for (auto& [key, value] : cfg.items()) {
        CLI::Option* opt = app.get_option_no_throw("--" + key);
        if (!opt) continue;
        if (opt->count() > 0) continue;
        if (value.is_array()) {
            std::vector<std::string> vals;
            for (const auto& v : value) vals.push_back(v.is_string() ? v.get<std::string>()
                                                                     : v.dump());
            opt->add_result(vals);
        } else {
            opt->add_result(value.is_string() ? value.get<std::string>() : value.dump());
        }
        opt->run_callback();
    }
}

struct CommonFlags {
    std::string fn, out, format = "csv", config;
    double a = 0.0, b = 1.0;
    int grid_n = 4096;
};

void add_common(CLI::App* cmd, CommonFlags& c, bool with_fn = true) {
    if (with_fn)
        cmd->add_option("--fn", c.fn,
                        "corpus spec (power:1.5, heaviside:0.25, constant:1, poly:1,0,-0.5, "
                        "cantor:12, weierstrass:2:20, log-reciprocal) or SbvFunction JSON path");
    cmd->add_option("--grid-n", c.grid_n, "grid size n (>= 16)")->check(CLI::Range(16, 1 << 24));
    cmd->add_option("--interval", [&c](const std::vector<std::string>& v) {
        if (v.size() != 2) return false;
        c.a = std::stod(v[0]);
        c.b = std::stod(v[1]);
        return true;
    }, "interval endpoints a b")->expected(2);
    cmd->add_option("--out", c.out, "output path ('-' = stdout)");
    cmd->add_option("--format", c.format, "csv | svg | json")
        ->check(CLI::IsMember({"csv", "svg", "json"}));
    cmd->add_option("--config", c.config, "JSON config file; explicit flags win");
}

int run(int argc, char** argv) {
    CLI::App app{"fractional-calculus operators, norms and limit experiments"};
    app.require_subcommand(1);

    CommonFlags cf;
    double s = 0.5, eps = 0.0, s2 = 0.0;
    std::string op = "rl-der", kind = "s-to-one", only, fn2;
    std::vector<double> s_list, eps_list;

    CLI::App* compute = app.add_subcommand("compute", "apply one operator, tabulate x,value");
    add_common(compute, cf);
    compute->add_option("--op", op, "rl-int | rl-der | caputo | marchaud | rl-int-right | rl-der-right")
        ->check(CLI::IsMember({"rl-int", "rl-der", "caputo", "marchaud", "rl-int-right",
                               "rl-der-right"}));
    compute->add_option("--s", s, "fractional order in (0,1)");
    compute->add_option("--eps", eps, "marchaud truncation (default h)");

    CLI::App* sweep = app.add_subcommand("sweep", "run a limit experiment");
    add_common(sweep, cf);
    sweep->add_option("--kind", kind, "s-to-one | s-to-zero | marchaud-eps")
        ->check(CLI::IsMember({"s-to-one", "s-to-zero", "marchaud-eps"}));
    sweep->add_option("--s", s, "fractional order (marchaud-eps)");
    sweep->add_option("--s-list", s_list, "override the s grid")->delimiter(',');
    sweep->add_option("--eps-list", eps_list, "override the eps grid")->delimiter(',');

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    add_common(verify_cmd, cf, false);
    verify_cmd->add_option("--only", only, "substring filter on criterion names");

    CLI::App* ipp = app.add_subcommand("ipp", "integration-by-parts residual for a pair");
    add_common(ipp, cf);
    ipp->add_option("--fn2", fn2, "second function (the v of the pairing)");
    ipp->add_option("--s", s, "fractional order in (0,1)");

    CLI::App* report = app.add_subcommand("report", "embedding ratios and Weierstrass bounds");
    add_common(report, cf, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    CLI::App* sub = app.get_subcommands().front();
    if (!cf.config.empty()) {
        std::ifstream in(cf.config);
        if (!in) throw BadSpec("cannot open config file '" + cf.config + "'");
        try {
            apply_config(*sub, json::parse(in, nullptr, true, true));
        } catch (const json::exception& e) {
            throw BadSpec(std::string("bad config file: ") + e.what());
        }
    }
    configure_threads();
    if (cf.b <= cf.a) throw BadSpec("interval must satisfy a < b");

    if (sub == verify_cmd) {
        const auto results = fraccalc::verify::run_all(cf.grid_n, only);
        if (results.empty()) throw BadSpec("no criterion matches --only '" + only + "'");
        bool ok = true;
        for (const auto& r : results) {
            std::cout << fraccalc::verify::format_line(r) << "\n";
            if (!r.pass && !r.report_only) ok = false;
        }
        return ok ? 0 : 1;
    }

    if (sub == compute) {
        if (cf.fn.empty()) throw BadSpec("compute requires --fn");
        LoadedFunction lf = load_function(cf.fn, cf.a, cf.b, cf.grid_n);
        const Grid& g = lf.u.grid();
        const FracParams p{s};
        OperatorResult r = [&] {
            if (op == "rl-int") return rl_integral(lf.u, s);
            if (op == "rl-der") return rl_derivative(lf.u, p);
            if (op == "caputo") return caputo_derivative(lf.u, p);
            if (op == "rl-int-right") return rl_integral_right(lf.u, s);
            if (op == "rl-der-right") return rl_derivative_right(lf.u, p);
            return marchaud_derivative(lf.u, p, eps > 0.0 ? eps : g.h());
        }();
        std::function<double(double)> oracle;
        if (lf.corpus && op == "rl-der" && lf.corpus->has_exact_rl_derivative())
            oracle = [&](double x) { return lf.corpus->exact_rl_derivative(g.a, s, x); };
        if (lf.corpus && op == "rl-int" && lf.corpus->has_exact_rl_integral())
            oracle = [&](double x) { return lf.corpus->exact_rl_integral(g.a, s, x); };
        std::vector<std::string> cols = {"x", "value"};
        if (oracle) {
            cols.push_back("exact");
            cols.push_back("abs_error");
        }
        std::vector<std::vector<double>> rows;
        for (int j = 0; j <= g.n; ++j) {
            const double x = g.node(j);
            std::vector<double> row = {x, r.values[j]};
            if (oracle) {
                const double e = oracle(x);
                row.push_back(e);
                row.push_back(std::abs(r.values[j] - e));
            }
            rows.push_back(std::move(row));
        }
        emit_table(cf.out, cf.format, op + " " + cf.fn + " s=" + std::to_string(s), cols, rows);
        return 0;
    }

    if (sub == sweep) {
        if (cf.fn.empty()) throw BadSpec("sweep requires --fn");
        LoadedFunction lf = load_function(cf.fn, cf.a, cf.b, cf.grid_n);
        SweepReport rep;
        if (kind == "s-to-one") {
            rep = sweep_s_to_one_norm(lf.u, s_list.empty() ? default_s_to_one_list() : s_list);
        } else if (kind == "s-to-zero") {
            rep = sweep_s_to_zero(lf.u, s_list.empty() ? default_s_to_zero_list() : s_list);
        } else {
            if (eps_list.empty()) {
                const double h = lf.u.grid().h();
                eps_list = {16 * h, 8 * h, 4 * h, 2 * h, h};
            }
            rep = marchaud_eps_diagnostic(lf.u, s, eps_list);
        }
        std::vector<std::vector<double>> rows;
        for (const auto& [param, val] : rep.points)
            rows.push_back({param, val, rep.target.value_or(std::nan("")),
                            rep.converged ? 1.0 : 0.0});
        emit_table(cf.out, cf.format, "sweep " + kind + " " + cf.fn,
                   {rep.parameter_name, "functional", "target", "converged"}, rows);
        return 0;
    }

    if (sub == ipp) {
        if (cf.fn.empty() || fn2.empty()) throw BadSpec("ipp requires --fn and --fn2");
        LoadedFunction u = load_function(cf.fn, cf.a, cf.b, cf.grid_n);
        LoadedFunction v = load_function(fn2, cf.a, cf.b, cf.grid_n);
        const double res = ipp_residual(u.u, v.u, s);
        if (!cf.out.empty() && cf.out != "-")
            emit_table(cf.out, cf.format, "ipp residual", {"s", "residual"}, {{s, res}});
        std::printf("ipp residual (s=%.6g): %.12g\n", s, res);
        return 0;
    }

    // report
    std::vector<std::vector<double>> rows;
    double max_ratio = 0.0;
    const std::vector<std::string> corpus = {"power:1", "power:2", "heaviside:0.5",
                                             "poly:1,0,-0.5"};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        LoadedFunction lf = load_function(corpus[i], cf.a, cf.b, cf.grid_n);
        const EmbeddingReport er = embedding_report(lf.u, 0.3, 0.6);
        rows.push_back({static_cast<double>(i), er.lhs, er.rhs, er.ratio});
        max_ratio = std::max(max_ratio, er.ratio);
        std::printf("embedding %-14s lhs=%.6g rhs=%.6g ratio=%.6g\n", corpus[i].c_str(), er.lhs,
                    er.rhs, er.ratio);
    }
    std::printf("max embedding ratio: %.6g\n", max_ratio);
    LoadedFunction w = load_function("weierstrass:2:20", cf.a, cf.b, cf.grid_n);
    for (double sv : {0.25, 0.5, 0.75, 0.9}) {
        const OperatorResult d = rl_derivative(w.u, FracParams{sv});
        double linf = 0.0;
        for (int j = 1; j <= w.u.grid().n; ++j) linf = std::max(linf, std::abs(d.values[j]));
        std::printf("weierstrass Linf(D^%.2f W) = %.6g\n", sv, linf);
    }
    if (!cf.out.empty() && cf.out != "-")
        emit_table(cf.out, cf.format, "embedding report",
                   {"corpus_index", "lhs", "rhs", "ratio"}, rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BadSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
