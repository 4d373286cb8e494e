#ifndef SSX_FACTOR_HPP
#define SSX_FACTOR_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "ssx/series.hpp"

namespace ssx {

enum class FactorMode {
    Free,        // even k: 2 N_k matching conditions
    Constrained, // prescribed beta: sum of powers fixed, moments from order 0
    ScaleFixed,  // odd k: A_1 = 1
    Variational  // odd k: A_1 from stationarity of the amplitude
};

/// f0(x) * prod_i (1 + A_i x)^{n_i}.  Nodes may come in complex-conjugate
/// pairs (with conjugate powers), in which case the product is real-valued.
struct FactorApproximant {
    std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs; // (A_i, n_i)
    Prefactor<double> prefactor;
    int order_k = 0;
    FactorMode mode = FactorMode::Free;
};

FactorApproximant build_factor(const ReducedExpansion<double>& f, int k, FactorMode mode,
                               std::optional<double> beta = std::nullopt);

AsymptoticForm amplitude_factor(const FactorApproximant& fa);

double eval_factor(const FactorApproximant& fa, double x);

/// Taylor coefficients of prod (1 + A_i x)^{n_i} through `order` (diagnostic
/// and re-expansion checks).
PowerSeries<double> factor_series(const FactorApproximant& fa, int order);

/// Branch points -1/A_i on the negative axis (diagnostic only).
std::vector<double> factor_singularities(const FactorApproximant& fa);

} // namespace ssx

#endif
