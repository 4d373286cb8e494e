#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ssx/bench.hpp"
#include "ssx/corpus.hpp"

using ssx::BenchmarkCase;
using ssx::run_bench;
using ssx::run_method;
using ssx::RunReport;

namespace {

const std::vector<BenchmarkCase>& corpus() {
    static const std::vector<BenchmarkCase> cases =
        ssx::load_corpus(ssx::default_corpus_dir());
    return cases;
}

const BenchmarkCase& find_case(const std::string& id) {
    for (const auto& c : corpus())
        if (c.id == id) return c;
    REQUIRE(false);
    return corpus().front();
}

} // namespace

TEST_CASE("reference tolerance is two units in the last printed digit") {
    CHECK(ssx::reference_tolerance("0.440") == doctest::Approx(2e-3));
    CHECK(ssx::reference_tolerance("1.496") == doctest::Approx(2e-3));
    CHECK(ssx::reference_tolerance("3.2924") == doctest::Approx(2e-4));
    CHECK(ssx::reference_tolerance("0.31") == doctest::Approx(2e-2));
    CHECK(ssx::reference_tolerance("2") == doctest::Approx(2.0));
}

TEST_CASE("numeric references compare against the computed value") {
    const auto& c = find_case("function-1");
    auto r = run_method(c, "factor:k4", "0.440");
    CHECK(r.status == "ok");
    REQUIRE(r.value.has_value());
    CHECK(r.compared);
    CHECK(r.pass);
    REQUIRE(r.abs_error.has_value());
    CHECK(*r.abs_error <= r.tolerance);
}

TEST_CASE("status references match classified failures") {
    const auto& c = find_case("oscillator");
    auto r = run_method(c, "root:k4", "complex");
    CHECK(!r.value.has_value());
    CHECK(r.status == "complex");
    CHECK(r.pass);

    auto wrong = run_method(c, "root:k4", "0.5");
    CHECK(!wrong.pass); // no value computed, numeric reference cannot pass
}

TEST_CASE("unknown families are recorded as skipped, not thrown") {
    const auto& c = find_case("function-1");
    auto r = run_method(c, "no-such-family:k2", "1.0");
    CHECK(r.status == "skipped");
    CHECK(!r.pass);
}

TEST_CASE("family filter restricts the run") {
    auto rows = run_bench(corpus(), {"pade"});
    CHECK(!rows.empty());
    for (const auto& r : rows) CHECK(r.method_tag.rfind("pade:", 0) == 0);
}

TEST_CASE("bench output is deterministic") {
    auto rows1 = run_bench(corpus(), {});
    auto rows2 = run_bench(corpus(), {});
    CHECK(ssx::report_csv(rows1) == ssx::report_csv(rows2));
    CHECK(ssx::report_summary(rows1) == ssx::report_summary(rows2));
}

TEST_CASE("csv layout is stable") {
    const auto& c = find_case("function-1");
    auto r = run_method(c, "pade:k4", "0.433");
    auto csv = ssx::report_csv({r});
    CHECK(csv.rfind("case_id,method_tag,value,reference,abs_error,status\n", 0) == 0);
    CHECK(csv.find("function-1,pade:k4,") != std::string::npos);
    CHECK(csv.find(",ok\n") != std::string::npos);
}

TEST_CASE("every corpus reference row has a parsable tag") {
    // run_method never throws on corpus rows; failures surface as statuses
    for (const auto& c : corpus())
        for (const auto& [tag, ref] : c.paper_values) {
            auto r = run_method(c, tag, ref);
            CHECK((r.status == "ok" || r.status == "complex" || r.status == "domain-error"));
        }
}

TEST_CASE("current corpus pass counts are frozen") {
    // Regression pin for the whole benchmark table.  Numbers move only when a
    // method or a reference row changes deliberately.
    auto rows = run_bench(corpus(), {});
    CHECK(ssx::report_summary(rows) == "compared 174 passed 115 failed 59\n");
}
