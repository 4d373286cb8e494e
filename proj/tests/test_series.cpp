#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ssx/series.hpp"

using ssx::PowerSeries;
using ssx::Rational;

namespace {

// Deterministic random rational series with unit constant term.
PowerSeries<Rational> random_unit_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) c[n] = Rational(num(rng), den(rng));
    return PowerSeries<Rational>(std::move(c));
}

bool equal_series(const PowerSeries<Rational>& a, const PowerSeries<Rational>& b) {
    if (a.order() != b.order()) return false;
    for (int n = 0; n <= a.order(); ++n)
        if (a[n] != b[n]) return false;
    return true;
}

} // namespace

TEST_CASE("arithmetic truncates to the shorter operand") {
    PowerSeries<double> a(std::vector<double>{1.0, 2.0, 3.0});
    PowerSeries<double> b(std::vector<double>{1.0, -1.0});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    CHECK((a * b)[1] == doctest::Approx(1.0)); // 1*(-1) + 2*1
    CHECK((a - b)[1] == doctest::Approx(3.0));
}

TEST_CASE("Horner evaluation") {
    PowerSeries<double> s(std::vector<double>{1.0, 2.0, 3.0});
    CHECK(s.eval(2.0) == doctest::Approx(1.0 + 4.0 + 12.0));
}

TEST_CASE("log/exp/pow require the right constant term") {
    PowerSeries<double> bad(std::vector<double>{2.0, 1.0});
    CHECK_THROWS_AS((void)series_log(bad), ssx::NonUnitConstant);
    CHECK_THROWS_AS((void)series_pow(bad, 0.5), ssx::NonUnitConstant);
    CHECK_THROWS_AS((void)series_exp(bad), ssx::NonUnitConstant);
}

TEST_CASE("exp(log(s)) == s exactly on random rational series") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_unit_series(rng, 6);
        CHECK(equal_series(series_exp(series_log(s)), s));
    }
}

TEST_CASE("pow obeys the group law exactly") {
    std::mt19937 rng(20240902);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_unit_series(rng, 5);
        Rational m1(3, 2), m2(-5, 7);
        auto lhs = series_pow(s, m1) * series_pow(s, m2);
        auto rhs = series_pow(s, Rational(m1 + m2));
        CHECK(equal_series(lhs, rhs));
        // log s^m = m log s
        auto lg = series_log(series_pow(s, m1));
        auto ml = m1 * series_log(s);
        CHECK(equal_series(lg, ml));
    }
}

TEST_CASE("inverse is pow(-1)") {
    std::mt19937 rng(20240903);
    auto s = random_unit_series(rng, 6);
    auto prod = s * series_inverse(s);
    for (int n = 1; n <= prod.order(); ++n) CHECK(prod[n] == Rational(0));
    CHECK(prod[0] == Rational(1));
}

TEST_CASE("xdlog of (1+x)^m is m x/(1+x)") {
    PowerSeries<Rational> base(std::vector<Rational>{1, 1, 0, 0, 0});
    auto s = series_pow(base, Rational(7, 3));
    auto t = series_xdlog(s);
    // m x / (1+x) = m (x - x^2 + x^3 - ...)
    for (int n = 1; n <= t.order(); ++n)
        CHECK(t[n] == Rational(7, 3) * (n % 2 ? 1 : -1));
}

TEST_CASE("change of variable moves coefficients to multiples of p") {
    PowerSeries<Rational> s(std::vector<Rational>{1, 2, 3});
    auto t = change_variable_power(s, 3);
    CHECK(t.order() == 6);
    CHECK(t[0] == Rational(1));
    CHECK(t[3] == Rational(2));
    CHECK(t[6] == Rational(3));
    CHECK(t[1] == Rational(0));
    CHECK(t[4] == Rational(0));
}

TEST_CASE("normalize splits the leading power") {
    PowerSeries<Rational> raw(std::vector<Rational>{Rational(3, 2), Rational(3), Rational(-3, 4)});
    auto f = normalize(raw, 2);
    CHECK(f.prefactor.amplitude_A == Rational(3, 2));
    CHECK(f.prefactor.exponent_alpha == doctest::Approx(2.0));
    CHECK(f.series[0] == Rational(1));
    CHECK(f.series[1] == Rational(2));
    CHECK(f.series[2] == Rational(-1, 2));

    PowerSeries<Rational> zero_lead(std::vector<Rational>{0, 1});
    CHECK_THROWS_AS((void)normalize(zero_lead, 0), ssx::ZeroLeadingCoefficient);
}

TEST_CASE("scaling covariance of log and pow") {
    // s(lambda x) coefficients are s_n lambda^n; log/pow commute with scaling.
    std::mt19937 rng(20240904);
    Rational lambda(5, 3);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = random_unit_series(rng, 5);
        std::vector<Rational> scaled(s.coeffs());
        Rational lp = 1;
        for (int n = 0; n <= s.order(); ++n) {
            scaled[n] *= lp;
            lp *= lambda;
        }
        PowerSeries<Rational> sl{std::move(scaled)};
        auto lhs = series_pow(sl, Rational(1, 2));
        auto rhs = series_pow(s, Rational(1, 2));
        lp = 1;
        for (int n = 0; n <= lhs.order(); ++n) {
            CHECK(lhs[n] == rhs[n] * lp);
            lp *= lambda;
        }
    }
}
