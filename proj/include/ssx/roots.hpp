#ifndef SSX_ROOTS_HPP
#define SSX_ROOTS_HPP

#include <cmath>
#include <span>
#include <vector>

#include "ssx/factor.hpp"
#include "ssx/series.hpp"

namespace ssx {

namespace detail {

inline bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

/// Truncated expansion of the nested tower
///   ((((1+A_1 x)^2 + A_2 x^2)^{3/2} + A_3 x^3)^{4/3} + ... + A_k x^k)^{ext}
/// with internal powers j/(j-1) fixed and external power `ext` applied after
/// level `ladder`.  A may be shorter than the ladder; missing entries are
/// zero, and the zero levels telescope as T_ladder = T_j^{ladder/j}.
template <typename S>
PowerSeries<S> tower_series(std::span<const S> A, int ladder, const S& ext, int trunc) {
    const int jmax = static_cast<int>(A.size());
    std::vector<S> t(static_cast<std::size_t>(trunc) + 1, S(0));
    t[0] = S(1);
    if (trunc >= 1 && jmax >= 1) t[1] = A[0];
    PowerSeries<S> T(std::move(t));
    for (int j = 2; j <= jmax; ++j) {
        T = series_pow(T, S(j) / S(j - 1));
        if (j <= trunc) T[j] += A[j - 1];
    }
    return series_pow(T, ext * S(ladder) / S(jmax));
}

/// Value of the pre-external tip ((A_1^2+A_2)^{3/2}+A_3)^{4/3}+...+A_k.
/// Raising to the external power is left to the caller.
inline double tower_tip(std::span<const double> A) {
    const int k = static_cast<int>(A.size());
    double t = A[0];
    if (k >= 2) t = t * t + A[1];
    for (int j = 3; j <= k; ++j) {
        if (t < 0.0) throw NegativeTower(j - 1);
        t = std::pow(t, double(j) / (j - 1)) + A[j - 1];
    }
    return t;
}

/// Pointwise nested evaluation at x >= 0.
inline double tower_eval(std::span<const double> A, double ext, double x) {
    const int k = static_cast<int>(A.size());
    double u = 1.0 + A[0] * x;
    if (k == 1) {
        if (u <= 0.0 && !near_integer(ext)) throw DomainError(x, "tower level 1 nonpositive");
        return std::pow(u, ext);
    }
    double xp = x * x;
    u = u * u + A[1] * xp;
    for (int j = 3; j <= k; ++j) {
        if (u < 0.0) throw DomainError(x, "tower level " + std::to_string(j - 1) + " negative");
        xp *= x;
        u = std::pow(u, double(j) / (j - 1)) + A[j - 1] * xp;
    }
    if (u <= 0.0 && !near_integer(ext)) throw DomainError(x, "tower top nonpositive");
    return std::pow(u, ext);
}

inline std::vector<double> to_double_vec(const std::vector<Rational>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
    return r;
}
inline const std::vector<double>& to_double_vec(const std::vector<double>& v) { return v; }

} // namespace detail

/// Iterated root approximant: internal powers (j+1)/j, external power gamma/k.
template <typename S>
struct IteratedRoot {
    std::vector<S> A;      // A_1 ... A_k
    S gamma;               // beta - alpha
    Prefactor<S> prefactor;
    int order_k = 0;

    S external_power() const { return gamma / S(order_k); }
};

/// Solve A_1..A_k sequentially; the order-j coefficient of the tower is
/// linear in A_j, so two expansions (A_j = 0 and A_j = 1) pin it down.
template <typename S>
IteratedRoot<S> build_iterated_root_gamma(const ReducedExpansion<S>& f, int k, const S& gamma) {
    if (gamma == S(0)) throw ZeroGamma();
    if (k < 1) throw Error("iterated root needs k >= 1");
    if (f.series.order() < k) throw Error("series order too small for requested k");
    IteratedRoot<S> r{{}, gamma, f.prefactor, k};
    const S ext = gamma / S(k);
    for (int j = 1; j <= k; ++j) {
        r.A.push_back(S(0));
        S c0 = detail::tower_series<S>(std::span<const S>(r.A.data(), r.A.size()), k, ext, j)[j];
        r.A.back() = S(1);
        S c1 = detail::tower_series<S>(std::span<const S>(r.A.data(), r.A.size()), k, ext, j)[j];
        if (c1 == c0) throw DegenerateMoments("tower coefficient insensitive to A_" + std::to_string(j));
        r.A.back() = (f.series[j] - c0) / (c1 - c0);
    }
    return r;
}

template <typename S>
IteratedRoot<S> build_iterated_root(const ReducedExpansion<S>& f, int k, double beta) {
    return build_iterated_root_gamma(f, k, S(beta) - S(f.prefactor.exponent_alpha));
}

// Rational-mode convenience keeping gamma exact.
inline IteratedRoot<Rational> build_iterated_root(const ReducedExpansion<Rational>& f, int k,
                                                  const Rational& beta) {
    Rational alpha(f.prefactor.exponent_alpha); // integer-valued alphas only in rational mode
    return build_iterated_root_gamma(f, k, Rational(beta - alpha));
}

template <typename S>
AsymptoticForm amplitude_iterated_root(const IteratedRoot<S>& r) {
    std::vector<double> A = detail::to_double_vec(r.A);
    double tip = detail::tower_tip(A);
    double ext = to_double(r.external_power());
    if (tip <= 0.0 && !detail::near_integer(ext)) throw NegativeTower(r.order_k);
    double beta = r.prefactor.exponent_alpha + to_double(r.gamma);
    return {to_double(r.prefactor.amplitude_A) * std::pow(tip, ext), beta};
}

template <typename S>
double eval_iterated_root(const IteratedRoot<S>& r, double x) {
    std::vector<double> A = detail::to_double_vec(r.A);
    return r.prefactor.eval(x) * detail::tower_eval(A, to_double(r.external_power()), x);
}

/// Re-expansion of the reduced tower through `order` (exact in rational mode).
template <typename S>
PowerSeries<S> iterated_root_series(const IteratedRoot<S>& r, int order) {
    return detail::tower_series<S>(std::span<const S>(r.A.data(), r.A.size()),
                                   r.order_k, r.external_power(), order);
}

/// Finite-limit multiplicative correction 1 + d x^{k+1} T_b(x)^{-(k+1)/(p-1)},
/// where T_b is a tower of order p-1 in the parameters b.
template <typename S>
struct Correction {
    S d = S(0);
    std::vector<S> b;
    int base_order = 0; // k of the corrected base
    int p = 0;
};

template <typename S>
PowerSeries<S> correction_series(const Correction<S>& c, int trunc) {
    std::vector<S> out(static_cast<std::size_t>(trunc) + 1, S(0));
    out[0] = S(1);
    const int k1 = c.base_order + 1;
    if (c.d != S(0) && trunc >= k1) {
        S ext = S(-k1) / S(c.p - 1);
        PowerSeries<S> w = detail::tower_series<S>(std::span<const S>(c.b.data(), c.b.size()),
                                                   c.p - 1, ext, trunc - k1);
        for (int i = 0; i + k1 <= trunc; ++i) out[i + k1] = c.d * w[i];
    }
    return PowerSeries<S>(std::move(out));
}

/// d, b_1..b_{p-1} from matching base*C against a_{k+1}..a_{k+p}.
template <typename S>
Correction<S> solve_correction(const PowerSeries<S>& base_series, std::span<const S> extra,
                               int k, int p) {
    if (p < 1 || static_cast<int>(extra.size()) < p) throw Error("correction needs p extra coefficients");
    if (base_series.order() < k + p) throw Error("base series too short for correction solve");
    Correction<S> c;
    c.base_order = k;
    c.p = p;
    c.d = extra[0] - base_series[k + 1];
    if (c.d == S(0)) return c; // base already matches; correction is identically 1
    if (p == 1) throw NoFiniteLimit("p = 1 correction 1 + d x^{k+1} diverges (d != 0)");
    for (int j = 1; j <= p - 1; ++j) {
        c.b.push_back(S(0));
        auto coeff_at = [&](void) {
            PowerSeries<S> prod = base_series * correction_series(c, k + 1 + j);
            return prod[k + 1 + j];
        };
        S c0 = coeff_at();
        c.b.back() = S(1);
        S c1 = coeff_at();
        if (c1 == c0) throw DegenerateMoments("correction coefficient insensitive to b_" + std::to_string(j));
        c.b.back() = (extra[j] - c0) / (c1 - c0);
    }
    return c;
}

template <typename S>
double correction_limit(const Correction<S>& c) {
    if (c.d == S(0)) return 1.0;
    std::vector<double> b = detail::to_double_vec(c.b);
    double tip = detail::tower_tip(b);
    double ext = -double(c.base_order + 1) / (c.p - 1);
    // A negative tip is still real-valued when the applied power is integral
    // (e.g. p = 2 corrections carry the integer power -(k+1)).
    if (tip == 0.0 || (tip < 0.0 && !detail::near_integer(ext)))
        throw NegativeTower(c.p - 1);
    return 1.0 + to_double(c.d) * std::pow(tip, ext);
}

template <typename S>
double eval_correction(const Correction<S>& c, double x) {
    if (c.d == S(0)) return 1.0;
    std::vector<double> b = detail::to_double_vec(c.b);
    double ext = -double(c.base_order + 1) / (c.p - 1);
    return 1.0 + to_double(c.d) * std::pow(x, c.base_order + 1) * detail::tower_eval(b, ext, x);
}

/// Corrected iterated root (B_{k/p} family).
template <typename S>
struct CorrectedRoot {
    IteratedRoot<S> base;
    Correction<S> correction;
};

/// `f` must carry coefficients through order k+p.
template <typename S>
CorrectedRoot<S> build_corrected(const IteratedRoot<S>& base, const ReducedExpansion<S>& f, int p) {
    const int k = base.order_k;
    if (f.series.order() < k + p) throw Error("need coefficients a_1..a_{k+p}");
    PowerSeries<S> bs = iterated_root_series(base, k + p);
    std::vector<S> extra(f.series.coeffs().begin() + k + 1, f.series.coeffs().begin() + k + p + 1);
    return CorrectedRoot<S>{base, solve_correction<S>(bs, extra, k, p)};
}

template <typename S>
AsymptoticForm amplitude_corrected(const CorrectedRoot<S>& c) {
    AsymptoticForm base = amplitude_iterated_root(c.base);
    return {base.amplitude_B * correction_limit(c.correction), base.exponent_beta};
}

template <typename S>
double eval_corrected(const CorrectedRoot<S>& c, double x) {
    return eval_iterated_root(c.base, x) * eval_correction(c.correction, x);
}

/// Corrected factor approximant (same correction form on a factor base).
struct CorrectedFactor {
    FactorApproximant base;
    Correction<double> correction;
};

inline CorrectedFactor build_corrected_factor(const FactorApproximant& base,
                                              const ReducedExpansion<double>& f, int p) {
    const int k = base.order_k;
    if (f.series.order() < k + p) throw Error("need coefficients a_1..a_{k+p}");
    PowerSeries<double> bs = factor_series(base, k + p);
    std::vector<double> extra(f.series.coeffs().begin() + k + 1,
                              f.series.coeffs().begin() + k + p + 1);
    return CorrectedFactor{base, solve_correction<double>(bs, extra, k, p)};
}

inline AsymptoticForm amplitude_corrected(const CorrectedFactor& c) {
    AsymptoticForm base = amplitude_factor(c.base);
    return {base.amplitude_B * correction_limit(c.correction), base.exponent_beta};
}

} // namespace ssx

#endif
