#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ssx/factor.hpp"

using ssx::build_factor;
using ssx::FactorMode;
using ssx::PowerSeries;
using ssx::ReducedExpansion;

namespace {

// (1 + 2x)^{1/2} (1 + x/2)^{-1/4}: a function inside the model class.
ReducedExpansion<double> model_function(int order) {
    std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
    std::vector<double> b(a);
    a[0] = b[0] = 1.0;
    if (order >= 1) {
        a[1] = 2.0;
        b[1] = 0.5;
    }
    PowerSeries<double> s =
        series_pow(PowerSeries<double>(std::move(a)), 0.5) *
        series_pow(PowerSeries<double>(std::move(b)), -0.25);
    return {{1.0, 0.0}, s};
}

ReducedExpansion<double> random_expansion(std::mt19937& rng, int order) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = 1.0;
    for (int n = 1; n <= order; ++n) c[n] = coeff(rng);
    return {{1.0, 0.0}, PowerSeries<double>(std::move(c))};
}

} // namespace

TEST_CASE("free mode recovers a function inside the model class") {
    auto f = model_function(4);
    auto fa = build_factor(f, 4, FactorMode::Free);
    auto a = amplitude_factor(fa);
    CHECK(a.exponent_beta == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(a.amplitude_B ==
          doctest::Approx(std::sqrt(2.0) * std::pow(0.5, -0.25)).epsilon(1e-8));

    auto sing = factor_singularities(fa);
    std::sort(sing.begin(), sing.end());
    REQUIRE(sing.size() == 2);
    CHECK(sing[0] == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(sing[1] == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("constrained re-expansion matches the input coefficients") {
    std::mt19937 rng(20240911);
    int built = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto f = random_expansion(rng, 3);
        try {
            auto fa = build_factor(f, 3, FactorMode::Constrained, 0.7);
            auto back = factor_series(fa, 3);
            for (int n = 0; n <= 3; ++n)
                CHECK(back[n] == doctest::Approx(f.series[n]).epsilon(1e-7).scale(1.0));
            ++built;
        } catch (const ssx::Error&) {
            // degenerate moment matrices and complex limits are legitimate
        }
    }
    CHECK(built > 150);
}

TEST_CASE("even-order constrained build drops the top moment") {
    std::mt19937 rng(20240912);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_expansion(rng, 4);
        try {
            double b4 = amplitude_factor(build_factor(f, 4, FactorMode::Constrained, 0.5)).amplitude_B;
            double b3 = amplitude_factor(build_factor(f, 3, FactorMode::Constrained, 0.5)).amplitude_B;
            CHECK(b4 == doctest::Approx(b3).epsilon(1e-10));
        } catch (const ssx::Error&) {
        }
    }
}

TEST_CASE("scale-fixed mode pins a node at one") {
    auto f = model_function(4);
    auto fa = build_factor(f, 4, FactorMode::ScaleFixed, 0.25);
    bool pinned = false;
    for (const auto& [node, power] : fa.pairs)
        if (std::abs(node - std::complex<double>(1.0, 0.0)) < 1e-9) pinned = true;
    CHECK(pinned);
    auto back = factor_series(fa, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(back[n] == doctest::Approx(f.series[n]).epsilon(1e-8).scale(1.0));
}

TEST_CASE("scaling covariance: a_n -> a_n lambda^n rescales B by lambda^beta") {
    const double lambda = 2.0, beta = 0.6;
    std::mt19937 rng(20240913);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_expansion(rng, 3);
        ReducedExpansion<double> g = f;
        double lp = 1.0;
        for (int n = 0; n <= 3; ++n) {
            g.series[n] *= lp;
            lp *= lambda;
        }
        try {
            double bf = amplitude_factor(build_factor(f, 3, FactorMode::Constrained, beta)).amplitude_B;
            double bg = amplitude_factor(build_factor(g, 3, FactorMode::Constrained, beta)).amplitude_B;
            CHECK(bg == doctest::Approx(bf * std::pow(lambda, beta)).epsilon(1e-8));
        } catch (const ssx::Error&) {
        }
    }
}

TEST_CASE("eval agrees with the amplitude at large x") {
    auto f = model_function(4);
    auto fa = build_factor(f, 4, FactorMode::Free);
    auto a = amplitude_factor(fa);
    double x = 1e8;
    CHECK(eval_factor(fa, x) / std::pow(x, a.exponent_beta) ==
          doctest::Approx(a.amplitude_B).epsilon(1e-6));
}
