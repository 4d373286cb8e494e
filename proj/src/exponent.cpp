#include "ssx/exponent.hpp"

#include <cmath>

#include "ssx/factor.hpp"
#include "ssx/roots.hpp"

namespace ssx {
namespace {

// First index n >= 1 with b_n != 0, or 0 when the whole tail vanishes.
int leading_index(const std::vector<double>& b) {
    for (std::size_t n = 1; n < b.size(); ++n)
        if (b[n] != 0.0) return static_cast<int>(n);
    return 0;
}

// Dressed tail b_s x^s (1 + h_1 x + ...): h_n = b_{s+n} / b_s.
ReducedExpansion<double> dress(const std::vector<double>& b, int s, int order) {
    std::vector<double> h(static_cast<std::size_t>(order) + 1, 0.0);
    h[0] = 1.0;
    for (int n = 1; n <= order; ++n) h[n] = b[s + n] / b[s];
    return {{b[s], double(s)}, PowerSeries<double>(std::move(h))};
}

} // namespace

ExponentSeries exponent_series(const ReducedExpansion<double>& f, int k) {
    if (f.series.order() < k) throw Error("series order too small for exponent expansion");
    PowerSeries<double> l = series_log(f.series.truncated(k));
    ExponentSeries es;
    es.source_order = k;
    es.b.resize(static_cast<std::size_t>(k) + 1);
    es.b[0] = f.prefactor.exponent_alpha;
    for (int n = 1; n <= k; ++n) es.b[n] = n * l[n];
    return es;
}

double estimate_exponent_factor(const ReducedExpansion<double>& f, int k, FactorMode mode) {
    const double b0 = f.prefactor.exponent_alpha;
    // b_0 != 0: the whole beta(x) series is dressed off b_0 and the factor
    // powers must sum to zero.  b_0 = 0: dress off the leading tail term.
    ExponentSeries probe = exponent_series(f, std::min(f.series.order(), k + 4));
    int s = leading_index(probe.b);
    if (s == 0) return b0; // beta(x) = b_0 exactly
    if (b0 != 0.0) {
        ExponentSeries es = exponent_series(f, k);
        std::vector<double> h(static_cast<std::size_t>(k) + 1, 0.0);
        h[0] = 1.0;
        for (int n = 1; n <= k; ++n) h[n] = es.b[n] / b0;
        ReducedExpansion<double> dressed{{b0, 0.0}, PowerSeries<double>(std::move(h))};
        FactorApproximant fa = build_factor(dressed, k, mode, 0.0);
        return amplitude_factor(fa).amplitude_B;
    }
    ExponentSeries es = exponent_series(f, s + k);
    ReducedExpansion<double> dressed = dress(es.b, s, k);
    FactorApproximant fa = build_factor(dressed, k, mode, 0.0);
    return b0 + amplitude_factor(fa).amplitude_B;
}

double estimate_exponent_root(const ReducedExpansion<double>& f, int k) {
    const double b0 = f.prefactor.exponent_alpha;
    ExponentSeries probe = exponent_series(f, std::min(f.series.order(), k + 4));
    int s = leading_index(probe.b);
    if (s == 0) return b0;
    ExponentSeries es = exponent_series(f, s + k);
    ReducedExpansion<double> tail = dress(es.b, s, k);
    IteratedRoot<double> root = build_iterated_root_gamma(tail, k, -double(s));
    return b0 + amplitude_iterated_root(root).amplitude_B;
}

double estimate_exponent_corrected(const ReducedExpansion<double>& f, int k, int p) {
    const double b0 = f.prefactor.exponent_alpha;
    ExponentSeries probe = exponent_series(f, std::min(f.series.order(), k + p + 4));
    int s = leading_index(probe.b);
    if (s == 0) return b0;
    ExponentSeries es = exponent_series(f, s + k + p);
    ReducedExpansion<double> tail = dress(es.b, s, k + p);
    IteratedRoot<double> base = build_iterated_root_gamma(tail, k, -double(s));
    CorrectedRoot<double> cr = build_corrected(base, tail, p);
    return b0 + amplitude_corrected(cr).amplitude_B;
}

} // namespace ssx
