#ifndef SSX_BENCH_HPP
#define SSX_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssx/corpus.hpp"

namespace ssx {

/// One (case x method) execution; reference is the verbatim printed value
/// (or an expected status like "complex") when the corpus carries one.
struct RunReport {
    std::string case_id;
    std::string method_tag;
    std::optional<double> value;
    std::string error_tag; // status detail when value is absent
    std::string reference;
    std::optional<double> abs_error;
    std::string status; // ok | complex | domain-error | skipped
    double tolerance = 0.0;
    bool compared = false;
    bool pass = false;
};

/// +-2 units in the last printed digit.
double reference_tolerance(const std::string& printed);

/// Execute one method tag ("factor:k4:constrained", "root:k2",
/// "corrected-root:k2p2", "power-root:k4:sol1", "double:k4", "pade:k4",
/// "exponent-factor:k3", "exponent-corrected:k2p2", ...) against a case.
RunReport run_method(const BenchmarkCase& c, const std::string& tag,
                     const std::string& reference = "");

/// Every paper_values entry of every case, optionally filtered by family
/// prefix; deterministic order (case id, then tag).
std::vector<RunReport> run_bench(const std::vector<BenchmarkCase>& cases,
                                 const std::vector<std::string>& families = {});

std::string report_csv(const std::vector<RunReport>& rows);
std::string report_summary(const std::vector<RunReport>& rows);

} // namespace ssx

#endif
