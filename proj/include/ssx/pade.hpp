#ifndef SSX_PADE_HPP
#define SSX_PADE_HPP

#include <vector>

#include "ssx/series.hpp"

namespace ssx {

/// P_{M/N}(x) = (p_0 + ... + p_M x^M) / (1 + q_1 x + ... + q_N x^N).
template <typename S>
struct PadeApproximant {
    std::vector<S> num; // degree M, size M+1
    std::vector<S> den; // degree N, size N+1, den[0] == 1
    int M = 0, N = 0;

    double eval(double x) const {
        double n = 0.0, d = 0.0;
        for (auto it = num.rbegin(); it != num.rend(); ++it) n = n * x + to_double(*it);
        for (auto it = den.rbegin(); it != den.rend(); ++it) d = d * x + to_double(*it);
        return n / d;
    }
};

/// Standard linear-system construction matching s through order M+N.
template <typename S>
PadeApproximant<S> build_pade(const PowerSeries<S>& s, int M, int N);

/// One-point Pade protocol for the critical amplitude: raise the reduced
/// series to the power 1/gamma (limit ~ x), fit P_{N+1/N}, and read off the
/// leading-coefficient ratio r, giving B = A r^gamma.  When gamma = 0 the
/// diagonal Pade value at infinity is used directly.
double pade_amplitude(const ReducedExpansion<double>& f, int k, double beta);

extern template PadeApproximant<double> build_pade<double>(const PowerSeries<double>&, int, int);
extern template PadeApproximant<Rational> build_pade<Rational>(const PowerSeries<Rational>&, int, int);

} // namespace ssx

#endif
