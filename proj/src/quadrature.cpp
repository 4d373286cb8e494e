#include "ssx/quadrature.hpp"

namespace ssx {
namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& fn, double a, double fa, double b, double fb,
             double fm, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = fn(lm), frm = fn(rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double err = left + right - whole;
    if (depth <= 0) throw QuadratureFailure("adaptive Simpson recursion limit");
    if (std::abs(err) <= 15.0 * tol * (1.0 + std::abs(left + right)))
        return left + right + err / 15.0;
    return adapt(fn, a, fa, m, fm, flm, left, tol * 0.5, depth - 1) +
           adapt(fn, m, fm, b, fb, frm, right, tol * 0.5, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& fn, double a, double b, double tol) {
    if (a == b) return 0.0;
    double fa = fn(a), fb = fn(b), fm = fn(0.5 * (a + b));
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw QuadratureFailure("non-finite integrand");
    double whole = simpson(a, fa, b, fb, fm);
    return adapt(fn, a, fa, b, fb, fm, whole, tol, 60);
}

double bisect(const std::function<double(double)>& fn, double lo, double hi, double tol,
              int max_iter) {
    double flo = fn(lo), fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw NoRealSolution("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter && (hi - lo) > tol * (1.0 + std::abs(lo)); ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = fn(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) { hi = mid; } else { lo = mid; flo = fm; }
    }
    return 0.5 * (lo + hi);
}

} // namespace ssx
