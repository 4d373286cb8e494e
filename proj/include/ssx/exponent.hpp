#ifndef SSX_EXPONENT_HPP
#define SSX_EXPONENT_HPP

#include <vector>

#include "ssx/factor.hpp"
#include "ssx/series.hpp"

namespace ssx {

/// Effective-exponent expansion beta(x) ~ b_0 + b_1 x + ... derived from
/// x d/dx ln f applied to the reduced expansion: b_0 = alpha, b_n = n l_n.
struct ExponentSeries {
    std::vector<double> b;
    int source_order = 0;
};

ExponentSeries exponent_series(const ReducedExpansion<double>& f, int k);

/// Factor estimate at order k: resum the dressed b-series with a factor
/// approximant whose powers sum to the exponent that kills the growth,
/// then read off the finite x -> infinity limit b_0 * prod A_i^{n_i}
/// (renormalized off b_1 when b_0 = 0).
double estimate_exponent_factor(const ReducedExpansion<double>& f, int k,
                                FactorMode mode = FactorMode::Constrained);

/// Iterated-root estimate at order k: same dressing, resummed by a k-th
/// order root at gamma = -1.
double estimate_exponent_root(const ReducedExpansion<double>& f, int k);

/// Corrected iterated-root estimate beta_{k/p}: the tail b(x) - b_0 is
/// resummed by a k-th order root at gamma = -1 with a p-th order correction.
double estimate_exponent_corrected(const ReducedExpansion<double>& f, int k, int p);

} // namespace ssx

#endif
