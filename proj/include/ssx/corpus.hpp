#ifndef SSX_CORPUS_HPP
#define SSX_CORPUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssx/series.hpp"

namespace ssx {

enum class VariableTransform { None, SquareVariable, EosVariable };

/// One benchmark case: a reduced expansion plus every reference value the
/// literature provides for it.
struct BenchmarkCase {
    std::string id;
    ReducedExpansion<Rational> series_exact; // decimals parse to exact rationals
    ReducedExpansion<double> series;
    std::optional<double> target_beta;
    std::optional<double> exact_amplitude;
    std::optional<double> exact_limit;
    std::optional<double> exact_exponent;
    VariableTransform transform = VariableTransform::None;
    std::string provenance;
    std::vector<std::pair<std::string, std::string>> paper_values; // tag -> printed value
};

/// Series literal shared by corpus files and CLI inputs:
/// {"prefactor": {"A": <number|"p/q">, "alpha": <number>}, "coeffs": [...]}
ReducedExpansion<Rational> load_series_file(const std::string& path);

BenchmarkCase load_case_file(const std::string& path);

/// All *.json cases in a directory, sorted by id.
std::vector<BenchmarkCase> load_corpus(const std::string& path);

/// Corpus directory: SSX_CORPUS_DIR override, else the bundled default.
std::string default_corpus_dir();

/// Independent coefficient oracle for the closed-form functions; returns the
/// raw coefficients c_0..c_order of the function's own expansion convention.
PowerSeries<double> oracle_expand(const std::string& function_id, int order);

/// Hard-sphere equation of state assembled from the k = 2 iterated root on
/// the transformed low-density expansion with the close-packed constraint.
struct EosRecord {
    double A2;                             // tower coefficient, 2*sqrt(2)/pi
    double b;                              // 2*sqrt(2)/pi - 1
    std::function<double(double)> energy;  // E/N per rho/rho0, units m = a_s = 1
    std::function<double(double)> energy_x; // same energy in the x variable
};

EosRecord eos_equation_of_state();

} // namespace ssx

#endif
