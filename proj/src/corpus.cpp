#include "ssx/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace ssx {
namespace {

using nlohmann::json;

Rational scalar_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return parse_rational(j.dump()); // keep printed decimal exact
    throw ParseError(where + ": expected number or rational string");
}

ReducedExpansion<Rational> series_from_json(const json& j, const std::string& where) {
    if (!j.contains("prefactor") || !j.contains("coeffs"))
        throw ParseError(where + ": series literal needs prefactor and coeffs");
    const json& pf = j.at("prefactor");
    Prefactor<Rational> prefactor{scalar_from_json(pf.at("A"), where + ".prefactor.A"),
                                  pf.at("alpha").get<double>()};
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(c, where + ".coeffs"));
    if (coeffs.empty() || coeffs[0] != Rational(1))
        throw ParseError(where + ": coeffs[0] must equal 1");
    return {prefactor, PowerSeries<Rational>(std::move(coeffs))};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

VariableTransform transform_from_string(const std::string& s, const std::string& id) {
    if (s == "none") return VariableTransform::None;
    if (s == "square-variable") return VariableTransform::SquareVariable;
    if (s == "eos-variable") return VariableTransform::EosVariable;
    throw ParseError(id + ": unknown transform '" + s + "'");
}

std::optional<double> opt_number(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    const json& v = j.at(key);
    if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
    return v.get<double>();
}

} // namespace

ReducedExpansion<Rational> load_series_file(const std::string& path) {
    return series_from_json(read_json_file(path), path);
}

BenchmarkCase load_case_file(const std::string& path) {
    json j = read_json_file(path);
    BenchmarkCase c;
    try {
        c.id = j.at("id").get<std::string>();
        c.series_exact = series_from_json(j, c.id);
        c.series = to_double_expansion(c.series_exact);
        c.target_beta = opt_number(j, "target_beta");
        c.exact_amplitude = opt_number(j, "exact_amplitude");
        c.exact_limit = opt_number(j, "exact_limit");
        c.exact_exponent = opt_number(j, "exact_exponent");
        if (j.contains("transform"))
            c.transform = transform_from_string(j.at("transform").get<std::string>(), c.id);
        if (j.contains("provenance")) c.provenance = j.at("provenance").get<std::string>();
        if (j.contains("paper_values"))
            for (const auto& [tag, val] : j.at("paper_values").items())
                c.paper_values.emplace_back(tag, val.get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    std::sort(c.paper_values.begin(), c.paper_values.end());
    if (!c.exact_amplitude && !c.exact_limit && !c.exact_exponent && c.paper_values.empty())
        throw InvariantViolation(c.id + ": no reference values at all");
    return c;
}

std::vector<BenchmarkCase> load_corpus(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<BenchmarkCase> cases;
    if (!fs::exists(path)) throw ParseError("corpus directory not found: " + path);
    for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.path().extension() == ".json") cases.push_back(load_case_file(entry.path().string()));
    }
    std::sort(cases.begin(), cases.end(),
              [](const BenchmarkCase& a, const BenchmarkCase& b) { return a.id < b.id; });
    return cases;
}

std::string default_corpus_dir() {
    if (const char* env = std::getenv("SSX_CORPUS_DIR")) return env;
#ifdef SSX_CORPUS_DEFAULT_DIR
    return SSX_CORPUS_DEFAULT_DIR;
#else
    return "corpus";
#endif
}

} // namespace ssx
