// Command-line front end for the ssx extrapolation library.
//
// Subcommands:
//   extrapolate  amplitude of one approximant family on a series file
//   exponent     critical-exponent estimate from a series file
//   bench        full corpus regression against recorded reference values
//   curve        (x, f*(x)) samples for external plotting
//   eos          hard-sphere equation-of-state record and curve
//
// Exit codes: 0 success, 1 usage error, 2 method failure (complex branch,
// domain error, or any other legitimate non-existence of the approximant).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ssx/bench.hpp"
#include "ssx/corpus.hpp"
#include "ssx/exponent.hpp"
#include "ssx/factor.hpp"
#include "ssx/pade.hpp"
#include "ssx/roots.hpp"
#include "ssx/transform.hpp"

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ssx::FactorMode parse_mode(const std::string& mode) {
    if (mode == "free") return ssx::FactorMode::Free;
    if (mode == "constrained") return ssx::FactorMode::Constrained;
    if (mode == "scale-fixed") return ssx::FactorMode::ScaleFixed;
    if (mode == "variational") return ssx::FactorMode::Variational;
    throw Usage("unknown --mode '" + mode + "'");
}

ssx::ReducedExpansion<double> load_input(const std::string& path) {
    return ssx::to_double_expansion(ssx::load_series_file(path));
}

double require_beta(const std::optional<double>& beta, const std::string& method) {
    if (!beta) throw Usage("--beta is required for method '" + method + "'");
    return *beta;
}

struct Row {
    std::string label;
    double amplitude;
    double exponent;
};

void emit(const std::vector<Row>& rows, const std::string& format) {
    if (format == "csv") {
        std::printf("label,amplitude,exponent\n");
        for (const auto& r : rows)
            std::printf("%s,%.10g,%.10g\n", r.label.c_str(), r.amplitude, r.exponent);
        return;
    }
    if (format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"label", r.label}, {"amplitude", r.amplitude}, {"exponent", r.exponent}});
        std::printf("%s\n", out.dump(2).c_str());
        return;
    }
    for (const auto& r : rows)
        std::printf("%-24s amplitude = %.10g   exponent = %.10g\n", r.label.c_str(), r.amplitude,
                    r.exponent);
}

int cmd_extrapolate(const std::string& input, const std::string& method, int k, int p,
                    std::optional<double> beta, const std::string& mode_name,
                    const std::string& format) {
    ssx::ReducedExpansion<double> f = load_input(input);
    std::vector<Row> rows;
    if (method == "factor") {
        ssx::FactorMode mode = parse_mode(mode_name);
        std::optional<double> b = beta;
        if (mode == ssx::FactorMode::Free) b.reset();
        else require_beta(b, method);
        ssx::AsymptoticForm a = amplitude_factor(build_factor(f, k, mode, b));
        rows.push_back({method + ":k" + std::to_string(k), a.amplitude_B, a.exponent_beta});
    } else if (method == "root") {
        ssx::AsymptoticForm a =
            amplitude_iterated_root(build_iterated_root(f, k, require_beta(beta, method)));
        rows.push_back({method + ":k" + std::to_string(k), a.amplitude_B, a.exponent_beta});
    } else if (method == "corrected-root") {
        auto base = build_iterated_root(f, k, require_beta(beta, method));
        ssx::AsymptoticForm a = amplitude_corrected(build_corrected(base, f, p));
        rows.push_back({method + ":k" + std::to_string(k) + "p" + std::to_string(p), a.amplitude_B,
                        a.exponent_beta});
    } else if (method == "power-factor" || method == "power-root") {
        auto family = method == "power-factor" ? ssx::TransformFamily::Factor
                                               : ssx::TransformFamily::IteratedRoot;
        auto sols = power_transform_extrapolate(f, k, require_beta(beta, method), family);
        if (sols.empty()) throw ssx::NoRealSolution("no stationary transform power found");
        int i = 0;
        for (const auto& s : sols)
            rows.push_back({method + ":k" + std::to_string(k) + ":sol" + std::to_string(++i),
                            s.amplitude.amplitude_B, s.amplitude.exponent_beta});
    } else if (method == "double") {
        ssx::DoubleRenormResult r = double_renorm_amplitude(f, k, require_beta(beta, method));
        rows.push_back({method + ":k" + std::to_string(k), r.amplitude_B_star,
                        require_beta(beta, method)});
        std::fprintf(stderr, "# ladder top x = %g, last-step change = %.3g\n", r.x_eval,
                     r.quad_error);
    } else if (method == "pade") {
        double b = require_beta(beta, method);
        rows.push_back({method + ":k" + std::to_string(k), pade_amplitude(f, k, b), b});
    } else {
        throw Usage("unknown --method '" + method + "'");
    }
    emit(rows, format);
    return 0;
}

int cmd_exponent(const std::string& input, const std::string& method, int k, int p,
                 const std::string& mode_name, const std::string& format) {
    ssx::ReducedExpansion<double> f = load_input(input);
    double est = 0.0;
    std::string label;
    if (method == "factor") {
        est = estimate_exponent_factor(f, k, parse_mode(mode_name));
        label = "exponent-factor:k" + std::to_string(k);
    } else if (method == "root") {
        est = estimate_exponent_root(f, k);
        label = "exponent-root:k" + std::to_string(k);
    } else if (method == "corrected") {
        est = estimate_exponent_corrected(f, k, p);
        label = "exponent-corrected:k" + std::to_string(k) + "p" + std::to_string(p);
    } else {
        throw Usage("unknown --method '" + method + "' (factor | root | corrected)");
    }
    emit({{label, est, est}}, format);
    return 0;
}

int cmd_bench(const std::string& corpus_dir, const std::vector<std::string>& families,
              const std::string& report_path) {
    std::string dir = corpus_dir.empty() ? ssx::default_corpus_dir() : corpus_dir;
    auto cases = ssx::load_corpus(dir);
    auto rows = ssx::run_bench(cases, families);
    std::string csv = ssx::report_csv(rows);
    std::string summary = ssx::report_summary(rows);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Usage("cannot write report file '" + report_path + "'");
        out << csv;
    }
    std::fputs(csv.c_str(), stdout);
    std::fputs(summary.c_str(), stdout);
    return 0;
}

int cmd_curve(const std::string& input, const std::string& method, int k, int p,
              std::optional<double> beta, double xmin, double xmax, int points) {
    if (xmin <= 0.0 || xmax <= xmin || points < 2) throw Usage("need 0 < xmin < xmax, points >= 2");
    ssx::ReducedExpansion<double> f = load_input(input);
    std::function<double(double)> eval;
    if (method == "factor") {
        auto fa = build_factor(f, k, ssx::FactorMode::Constrained, require_beta(beta, method));
        eval = [fa](double x) { return eval_factor(fa, x); };
    } else if (method == "root") {
        auto r = build_iterated_root(f, k, require_beta(beta, method));
        eval = [r](double x) { return eval_iterated_root(r, x); };
    } else if (method == "corrected-root") {
        auto base = build_iterated_root(f, k, require_beta(beta, method));
        auto c = build_corrected(base, f, p);
        eval = [c](double x) { return eval_corrected(c, x); };
    } else {
        throw Usage("curve supports --method factor | root | corrected-root");
    }
    std::printf("x,f\n");
    for (int i = 0; i < points; ++i) {
        double t = double(i) / (points - 1);
        double x = xmin * std::pow(xmax / xmin, t);
        try {
            std::printf("%.10g,%.10g\n", x, eval(x));
        } catch (const ssx::Error&) {
            std::printf("%.10g,\n", x); // gap marker
        }
    }
    return 0;
}

int cmd_eos(int points) {
    ssx::EosRecord rec = ssx::eos_equation_of_state();
    std::printf("# A2 = %.12f  b = %.12f\n", rec.A2, rec.b);
    std::printf("rho_rel,energy\n");
    for (int i = 1; i < points; ++i) {
        double rho = double(i) / points; // (0, 1) open interval
        std::printf("%.10g,%.10g\n", rho, rec.energy(rho));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-similar extrapolation of truncated power series"};
    app.require_subcommand(1);

    std::string input, method, mode = "constrained", format = "text";
    std::string corpus_dir, report_path;
    std::vector<std::string> families;
    int order = 2, p = 2, points = 64;
    double xmin = 1e-2, xmax = 1e2;
    std::optional<double> beta;
    double beta_raw = 0.0;

    auto* ex = app.add_subcommand("extrapolate", "amplitude of one approximant family");
    ex->add_option("input", input, "series file (JSON literal)")->required();
    ex->add_option("--method", method,
                   "factor | root | corrected-root | power-factor | power-root | double | pade")
        ->required();
    ex->add_option("--order", order, "approximation order k")->required();
    ex->add_option("--p", p, "correction order for corrected-root");
    auto* exb = ex->add_option("--beta", beta_raw, "target large-x exponent");
    ex->add_option("--mode", mode, "factor mode: free | constrained | scale-fixed | variational");
    ex->add_option("--format", format, "text | csv | json");

    auto* eo = app.add_subcommand("exponent", "critical-exponent estimate");
    eo->add_option("input", input, "series file (JSON literal)")->required();
    eo->add_option("--method", method, "factor | root | corrected")->required();
    eo->add_option("--order", order, "approximation order k")->required();
    eo->add_option("--p", p, "correction order for corrected");
    eo->add_option("--mode", mode, "factor mode");
    eo->add_option("--format", format, "text | csv | json");

    auto* be = app.add_subcommand("bench", "corpus regression");
    be->add_option("--corpus-dir", corpus_dir, "corpus directory (default: bundled)");
    be->add_option("--families", families, "restrict to these method families")->delimiter(',');
    be->add_option("--report", report_path, "also write the CSV table to this file");

    auto* cu = app.add_subcommand("curve", "plot-ready (x, f*(x)) samples");
    cu->add_option("input", input, "series file (JSON literal)")->required();
    cu->add_option("--method", method, "factor | root | corrected-root")->required();
    cu->add_option("--order", order, "approximation order k")->required();
    cu->add_option("--p", p, "correction order for corrected-root");
    auto* cub = cu->add_option("--beta", beta_raw, "target large-x exponent");
    cu->add_option("--xmin", xmin, "smallest abscissa (log grid)");
    cu->add_option("--xmax", xmax, "largest abscissa (log grid)");
    cu->add_option("--points", points, "number of samples");

    auto* es = app.add_subcommand("eos", "hard-sphere equation of state");
    es->add_option("--points", points, "number of density samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // CLI11 prints the message; nonzero on error
    }

    try {
        if (ex->parsed()) {
            if (exb->count()) beta = beta_raw;
            return cmd_extrapolate(input, method, order, p, beta, mode, format);
        }
        if (eo->parsed()) return cmd_exponent(input, method, order, p, mode, format);
        if (be->parsed()) return cmd_bench(corpus_dir, families, report_path);
        if (cu->parsed()) {
            if (cub->count()) beta = beta_raw;
            return cmd_curve(input, method, order, p, beta, xmin, xmax, points);
        }
        if (es->parsed()) return cmd_eos(points);
    } catch (const Usage& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const ssx::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const ssx::Error& e) {
        std::fprintf(stderr, "method failed: %s\n", e.what());
        return 2;
    }
    return 1;
}
