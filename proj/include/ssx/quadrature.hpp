#ifndef SSX_QUADRATURE_HPP
#define SSX_QUADRATURE_HPP

#include <cmath>
#include <functional>

#include "ssx/errors.hpp"

namespace ssx {

/// Adaptive Simpson with absolute+relative tolerance.
double integrate(const std::function<double(double)>& fn, double a, double b, double tol = 1e-9);

/// Bisection on a bracketed sign change of fn.
double bisect(const std::function<double(double)>& fn, double lo, double hi, double tol = 1e-12,
              int max_iter = 200);

} // namespace ssx

#endif
