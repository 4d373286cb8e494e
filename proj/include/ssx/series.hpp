#ifndef SSX_SERIES_HPP
#define SSX_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ssx/errors.hpp"
#include "ssx/scalar.hpp"

namespace ssx {

/// Truncated power series; coeffs[n] multiplies x^n.  Binary operations
/// truncate to the shorter order and never pad with fabricated zeros.
template <typename S>
class PowerSeries {
public:
    PowerSeries() : coeffs_(1, S(0)) {}
    explicit PowerSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(S(0));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    const S& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    S& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    PowerSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        return PowerSeries(std::vector<S>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    double eval(double x) const {
        double r = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + to_double(*it);
        return r;
    }

private:
    std::vector<S> coeffs_;
};

template <typename S>
PowerSeries<S> operator+(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    int k = std::min(a.order(), b.order());
    std::vector<S> c(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) c[n] = a[n] + b[n];
    return PowerSeries<S>(std::move(c));
}

template <typename S>
PowerSeries<S> operator-(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    int k = std::min(a.order(), b.order());
    std::vector<S> c(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) c[n] = a[n] - b[n];
    return PowerSeries<S>(std::move(c));
}

template <typename S>
PowerSeries<S> operator*(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    int k = std::min(a.order(), b.order());
    std::vector<S> c(static_cast<std::size_t>(k) + 1, S(0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) c[i + j] += a[i] * b[j];
    return PowerSeries<S>(std::move(c));
}

template <typename S>
PowerSeries<S> operator*(const S& s, const PowerSeries<S>& a) {
    std::vector<S> c = a.coeffs();
    for (auto& v : c) v = s * v;
    return PowerSeries<S>(std::move(c));
}

/// l with exp(l) == s through order k; requires s[0] == 1.
template <typename S>
PowerSeries<S> series_log(const PowerSeries<S>& s) {
    if (s[0] != S(1)) throw NonUnitConstant();
    int k = s.order();
    std::vector<S> l(static_cast<std::size_t>(k) + 1, S(0));
    for (int n = 1; n <= k; ++n) {
        S acc = s[n];
        for (int j = 1; j < n; ++j) acc -= S(j) * l[j] * s[n - j] / S(n);
        l[n] = acc;
    }
    return PowerSeries<S>(std::move(l));
}

/// exp of a series with zero constant term.
template <typename S>
PowerSeries<S> series_exp(const PowerSeries<S>& l) {
    if (l[0] != S(0)) throw NonUnitConstant();
    int k = l.order();
    std::vector<S> e(static_cast<std::size_t>(k) + 1, S(0));
    e[0] = S(1);
    for (int n = 1; n <= k; ++n) {
        S acc(0);
        for (int j = 1; j <= n; ++j) acc += S(j) * l[j] * e[n - j];
        e[n] = acc / S(n);
    }
    return PowerSeries<S>(std::move(e));
}

/// s^m via the J.C.P. Miller recurrence; requires s[0] == 1, m any scalar.
template <typename S>
PowerSeries<S> series_pow(const PowerSeries<S>& s, const S& m) {
    if (s[0] != S(1)) throw NonUnitConstant();
    int k = s.order();
    std::vector<S> p(static_cast<std::size_t>(k) + 1, S(0));
    p[0] = S(1);
    for (int n = 1; n <= k; ++n) {
        S acc(0);
        for (int j = 1; j <= n; ++j) acc += ((m + S(1)) * S(j) - S(n)) * s[j] * p[n - j];
        p[n] = acc / S(n);
    }
    return PowerSeries<S>(std::move(p));
}

template <typename S>
PowerSeries<S> series_inverse(const PowerSeries<S>& s) {
    return series_pow(s, S(-1));
}

/// x d/dx ln s, i.e. t_n = n * (log s)_n.
template <typename S>
PowerSeries<S> series_xdlog(const PowerSeries<S>& s) {
    PowerSeries<S> l = series_log(s);
    std::vector<S> t(l.coeffs());
    for (int n = 0; n <= l.order(); ++n) t[n] = S(n) * t[n];
    return PowerSeries<S>(std::move(t));
}

/// Substitute t = x^p: coefficient of t^n moves to x^{p n}.
template <typename S>
PowerSeries<S> change_variable_power(const PowerSeries<S>& s, int p) {
    std::vector<S> c(static_cast<std::size_t>(s.order()) * p + 1, S(0));
    for (int n = 0; n <= s.order(); ++n) c[static_cast<std::size_t>(n) * p] = s[n];
    return PowerSeries<S>(std::move(c));
}

/// Known leading factor f0(x) = A x^alpha.
template <typename S>
struct Prefactor {
    S amplitude_A;
    double exponent_alpha;

    double eval(double x) const { return to_double(amplitude_A) * real_pow(x, exponent_alpha); }
};

/// Reduced expansion f0(x) * (1 + a_1 x + ... + a_k x^k).
template <typename S>
struct ReducedExpansion {
    Prefactor<S> prefactor;
    PowerSeries<S> series;
};

/// Large-variable form B x^beta.
struct AsymptoticForm {
    double amplitude_B;
    double exponent_beta;
};

/// Split out the leading power and coefficient so the series starts at 1.
/// raw.coeffs[0] is the coefficient of x^{leading_power}.
template <typename S>
ReducedExpansion<S> normalize(const PowerSeries<S>& raw, int leading_power) {
    if (raw[0] == S(0)) throw ZeroLeadingCoefficient();
    std::vector<S> c(raw.coeffs());
    S lead = c[0];
    for (auto& v : c) v = v / lead;
    return ReducedExpansion<S>{Prefactor<S>{lead, static_cast<double>(leading_power)},
                               PowerSeries<S>(std::move(c))};
}

inline PowerSeries<double> to_double_series(const PowerSeries<Rational>& s) {
    std::vector<double> c(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) c[n] = to_double(s[n]);
    return PowerSeries<double>(std::move(c));
}

inline ReducedExpansion<double> to_double_expansion(const ReducedExpansion<Rational>& f) {
    return ReducedExpansion<double>{{to_double(f.prefactor.amplitude_A), f.prefactor.exponent_alpha},
                                    to_double_series(f.series)};
}

} // namespace ssx

#endif
