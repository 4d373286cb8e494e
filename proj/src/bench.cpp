#include "ssx/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ssx/exponent.hpp"
#include "ssx/factor.hpp"
#include "ssx/pade.hpp"
#include "ssx/roots.hpp"
#include "ssx/transform.hpp"

namespace ssx {
namespace {

bool numeric_reference(const std::string& s) {
    return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' ||
                          s[0] == '+' || s[0] == '.');
}

struct Tag {
    std::string family;
    int k = 0;
    int p = 0;
    std::string extra; // mode or solN
};

Tag parse_tag(const std::string& tag) {
    std::vector<std::string> parts;
    std::stringstream ss(tag);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 2) throw Error("bad method tag '" + tag + "'");
    Tag t;
    t.family = parts[0];
    const std::string& ord = parts[1];
    if (ord.size() < 2 || ord[0] != 'k') throw Error("bad order spec in '" + tag + "'");
    auto ppos = ord.find('p');
    t.k = std::stoi(ord.substr(1, ppos == std::string::npos ? std::string::npos : ppos - 1));
    if (ppos != std::string::npos) t.p = std::stoi(ord.substr(ppos + 1));
    if (parts.size() > 2) t.extra = parts[2];
    return t;
}

double require_beta(const BenchmarkCase& c) {
    if (!c.target_beta) throw Error(c.id + ": method needs target_beta");
    return *c.target_beta;
}

double solution_pick(const std::vector<PowerTransformSolution>& sols, const std::string& extra) {
    if (sols.empty()) throw NoRealSolution("no stationary transform power found");
    std::vector<double> amps;
    for (const auto& s : sols) amps.push_back(s.amplitude.amplitude_B);
    std::sort(amps.begin(), amps.end());
    amps.erase(std::unique(amps.begin(), amps.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               amps.end());
    if (extra.empty()) {
        if (amps.size() != 1)
            throw Error("transform has " + std::to_string(amps.size()) +
                        " solutions; use :solN");
        return amps[0];
    }
    if (extra.rfind("sol", 0) != 0) throw Error("bad solution selector '" + extra + "'");
    std::size_t idx = static_cast<std::size_t>(std::stoi(extra.substr(3)));
    if (idx < 1 || idx > amps.size())
        throw NoRealSolution("solution index " + extra + " out of range (" +
                             std::to_string(amps.size()) + " found)");
    return amps[idx - 1];
}

double execute(const BenchmarkCase& c, const Tag& t) {
    const ReducedExpansion<double>& f = c.series;
    if (t.family == "factor") {
        std::optional<double> beta = c.target_beta;
        FactorMode mode = FactorMode::Constrained;
        if (t.extra == "free") { mode = FactorMode::Free; beta = std::nullopt; }
        else if (t.extra == "variational") mode = FactorMode::Variational;
        else if (t.extra == "scale-fixed") mode = FactorMode::ScaleFixed;
        if (mode != FactorMode::Free && !beta) throw Error(c.id + ": factor needs target_beta");
        return amplitude_factor(build_factor(f, t.k, mode, beta)).amplitude_B;
    }
    if (t.family == "root")
        return amplitude_iterated_root(build_iterated_root(f, t.k, require_beta(c))).amplitude_B;
    if (t.family == "corrected-root") {
        IteratedRoot<double> base = build_iterated_root(f, t.k, require_beta(c));
        return amplitude_corrected(build_corrected(base, f, t.p)).amplitude_B;
    }
    if (t.family == "corrected-factor") {
        // Even-k bases keep all k+1 conditions by pinning A_1 = 1; odd-k bases
        // are exactly determined without pinning.
        FactorMode base_mode = (t.k % 2 == 0) ? FactorMode::ScaleFixed : FactorMode::Constrained;
        FactorApproximant base = build_factor(f, t.k, base_mode, require_beta(c));
        return amplitude_corrected(build_corrected_factor(base, f, t.p)).amplitude_B;
    }
    if (t.family == "power-factor")
        return solution_pick(
            power_transform_extrapolate(f, t.k, require_beta(c), TransformFamily::Factor),
            t.extra);
    if (t.family == "power-root")
        return solution_pick(
            power_transform_extrapolate(f, t.k, require_beta(c), TransformFamily::IteratedRoot),
            t.extra);
    if (t.family == "double")
        return double_renorm_amplitude(f, t.k, require_beta(c)).amplitude_B_star;
    if (t.family == "pade") return pade_amplitude(f, t.k, require_beta(c));
    if (t.family == "exponent-factor") {
        FactorMode mode = FactorMode::Constrained;
        if (t.extra == "scale-fixed") mode = FactorMode::ScaleFixed;
        return estimate_exponent_factor(f, t.k, mode);
    }
    if (t.family == "exponent-root") return estimate_exponent_root(f, t.k);
    if (t.family == "exponent-corrected") return estimate_exponent_corrected(f, t.k, t.p);
    throw Error("unknown method family '" + t.family + "'");
}

std::string classify(const Error& e) {
    if (dynamic_cast<const ComplexBranch*>(&e) || dynamic_cast<const NegativeTower*>(&e) ||
        dynamic_cast<const NoRealSolution*>(&e))
        return "complex";
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const NegativeBase*>(&e) ||
        dynamic_cast<const NegativeRatio*>(&e) || dynamic_cast<const ZeroGamma*>(&e) ||
        dynamic_cast<const NoFiniteLimit*>(&e) || dynamic_cast<const VelocityZeroCrossing*>(&e) ||
        dynamic_cast<const InversionDomain*>(&e) || dynamic_cast<const DegenerateMoments*>(&e) ||
        dynamic_cast<const SingularPadeSystem*>(&e) || dynamic_cast<const QuadratureFailure*>(&e))
        return "domain-error";
    return "skipped";
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

double reference_tolerance(const std::string& printed) {
    auto dot = printed.find('.');
    if (dot == std::string::npos) return 2.0;
    int digits = 0;
    for (std::size_t i = dot + 1; i < printed.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(printed[i]))) break;
        ++digits;
    }
    return 2.0 * std::pow(10.0, -digits);
}

RunReport run_method(const BenchmarkCase& c, const std::string& tag,
                     const std::string& reference) {
    RunReport r;
    r.case_id = c.id;
    r.method_tag = tag;
    r.reference = reference;
    try {
        r.value = execute(c, parse_tag(tag));
        r.status = "ok";
    } catch (const Error& e) {
        r.status = classify(e);
        r.error_tag = e.what();
    }
    if (!reference.empty()) {
        r.compared = true;
        if (numeric_reference(reference)) {
            r.tolerance = reference_tolerance(reference);
            if (r.value) {
                double ref = std::strtod(reference.c_str(), nullptr);
                r.abs_error = std::abs(*r.value - ref);
                r.pass = *r.abs_error <= r.tolerance;
            }
        } else {
            // Expected-status reference (e.g. "complex").
            r.pass = (r.status == reference);
        }
    }
    return r;
}

std::vector<RunReport> run_bench(const std::vector<BenchmarkCase>& cases,
                                 const std::vector<std::string>& families) {
    std::vector<RunReport> rows;
    for (const BenchmarkCase& c : cases) {
        for (const auto& [tag, ref] : c.paper_values) {
            if (!families.empty()) {
                std::string fam = tag.substr(0, tag.find(':'));
                if (std::find(families.begin(), families.end(), fam) == families.end()) continue;
            }
            rows.push_back(run_method(c, tag, ref));
        }
    }
    return rows; // cases and paper_values are already sorted
}

std::string report_csv(const std::vector<RunReport>& rows) {
    std::string out = "case_id,method_tag,value,reference,abs_error,status\n";
    for (const RunReport& r : rows) {
        out += r.case_id + "," + r.method_tag + ",";
        out += r.value ? format_value(*r.value) : r.status;
        out += "," + r.reference + ",";
        if (r.abs_error) out += format_value(*r.abs_error);
        out += "," + r.status + "\n";
    }
    return out;
}

std::string report_summary(const std::vector<RunReport>& rows) {
    int compared = 0, passed = 0;
    for (const RunReport& r : rows)
        if (r.compared) {
            ++compared;
            if (r.pass) ++passed;
        }
    return "compared " + std::to_string(compared) + " passed " + std::to_string(passed) +
           " failed " + std::to_string(compared - passed) + "\n";
}

} // namespace ssx
