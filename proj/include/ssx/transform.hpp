#ifndef SSX_TRANSFORM_HPP
#define SSX_TRANSFORM_HPP

#include <vector>

#include "ssx/roots.hpp"
#include "ssx/series.hpp"

namespace ssx {

enum class TransformFamily { Factor, IteratedRoot };

enum class StationaryKind { LocalMin, LocalMax, SaddleFlat };

/// One stationary point of the power-transform amplitude B(m).
struct PowerTransformSolution {
    double m;
    AsymptoticForm amplitude;
    TransformFamily family;
    StationaryKind stationary_kind;
};

/// Raise the reduced series to the power m, extrapolate with the chosen
/// family at target exponent m*gamma, undo the transform, and collect every
/// stationary point of the resulting amplitude over the scanned m range.
/// Returns an empty sequence (not an error) when nothing is stationary.
std::vector<PowerTransformSolution> power_transform_extrapolate(
    const ReducedExpansion<double>& f, int k, double beta, TransformFamily family);

/// Amplitude candidate at a single transform power m (NaN when the family
/// fails there); exposed for the m = 1 consistency check.
double power_transform_amplitude_at(const ReducedExpansion<double>& f, int k, double beta,
                                    TransformFamily family, double m);

/// Result of the second self-similar renormalization via the evolution
/// integral with Euler-discretized velocity and tau = 1.
struct DoubleRenormResult {
    double amplitude_B_star;
    double x_eval;    // largest abscissa used on the extrapolation ladder
    double quad_error; // difference of the last two ladder estimates
};

struct DoubleRenormOptions {
    double tau = 1.0; // override for experimentation only
};

DoubleRenormResult double_renorm_amplitude(const ReducedExpansion<double>& f, int k, double beta,
                                           const DoubleRenormOptions& opts = {});

} // namespace ssx

#endif
