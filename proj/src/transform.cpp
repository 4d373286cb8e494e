#include "ssx/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssx/factor.hpp"
#include "ssx/quadrature.hpp"

namespace ssx {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// m-scan protocol: [-5,5] minus a dead zone around m = 0, 400 grid points,
// central differences, bisection refinement of each bracketed sign change.
constexpr double kScanMax = 5.0;
constexpr double kDeadZone = 0.05;
constexpr int kGridPoints = 400;
constexpr double kDiffStep = 1e-4;

} // namespace

double power_transform_amplitude_at(const ReducedExpansion<double>& f, int k, double beta,
                                    TransformFamily family, double m) {
    const double gamma = beta - f.prefactor.exponent_alpha;
    const double A = to_double(f.prefactor.amplitude_A);
    try {
        PowerSeries<double> u = series_pow(f.series.truncated(k), m);
        ReducedExpansion<double> transformed{{1.0, 0.0}, u};
        double reduced_amp; // large-x amplitude of the renormalized u, ~ x^{m gamma}
        if (family == TransformFamily::Factor) {
            FactorApproximant fa = build_factor(transformed, k, FactorMode::Constrained, m * gamma);
            reduced_amp = amplitude_factor(fa).amplitude_B;
        } else {
            IteratedRoot<double> r = build_iterated_root_gamma(transformed, k, m * gamma);
            reduced_amp = amplitude_iterated_root(r).amplitude_B;
        }
        if (reduced_amp <= 0.0) return kNaN;
        return A * std::pow(reduced_amp, 1.0 / m);
    } catch (const Error&) {
        return kNaN;
    }
}

std::vector<PowerTransformSolution> power_transform_extrapolate(
    const ReducedExpansion<double>& f, int k, double beta, TransformFamily family) {
    auto amp = [&](double m) { return power_transform_amplitude_at(f, k, beta, family, m); };
    auto deriv = [&](double m) {
        return (amp(m + kDiffStep) - amp(m - kDiffStep)) / (2.0 * kDiffStep);
    };

    std::vector<PowerTransformSolution> out;
    const int half = kGridPoints / 2;
    for (int side = 0; side < 2; ++side) {
        double lo = side ? kDeadZone : -kScanMax;
        double hi = side ? kScanMax : -kDeadZone;
        double prev_m = 0.0, prev_d = kNaN;
        for (int i = 0; i <= half; ++i) {
            double m = lo + (hi - lo) * i / half;
            double d = deriv(m);
            if (std::isfinite(d) && std::isfinite(prev_d) && prev_d * d < 0.0) {
                double mstar = bisect(deriv, prev_m, m, 1e-10);
                double value = amp(mstar);
                if (std::isfinite(value)) {
                    double curv = deriv(mstar + 10 * kDiffStep) - deriv(mstar - 10 * kDiffStep);
                    StationaryKind kind = (std::abs(curv) < 1e-12) ? StationaryKind::SaddleFlat
                                          : (curv > 0.0 ? StationaryKind::LocalMin
                                                        : StationaryKind::LocalMax);
                    out.push_back({mstar, {value, beta}, family, kind});
                }
            }
            prev_m = m;
            prev_d = d;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.m < b.m; });
    return out;
}

namespace {

// Reduced k-th order iterated root and the expansion function of the flow.
struct Flow {
    IteratedRoot<double> root;
    double gamma;
    double a1; // A_1 of the first-order approximant, f1* = (1 + A_1 x)^gamma

    double reduced_eval(double x) const {
        std::vector<double> A = detail::to_double_vec(root.A);
        return detail::tower_eval(A, to_double(root.external_power()), x);
    }
    double x_of_phi(double phi) const {
        double t = std::pow(phi, 1.0 / gamma);
        if (t < 1.0) throw InversionDomain(phi);
        return (t - 1.0) / a1;
    }
    double velocity(double phi) const { return reduced_eval(x_of_phi(phi)) - phi; }
};

// Solve int_{phi0}^{F} dphi / v = tau by expanding the interval in the
// direction of the initial velocity and bisecting inside the final segment.
double fixed_point(const Flow& flow, double phi0, double tau, double tol) {
    double v0 = flow.velocity(phi0);
    if (std::abs(v0) < 1e-14 * (1.0 + std::abs(phi0))) return phi0; // already at a fixed point
    const double dir = (v0 > 0.0) ? 1.0 : -1.0;
    auto inv_v = [&](double phi) { return 1.0 / flow.velocity(phi); };

    double acc = 0.0;
    double fp = phi0;
    for (int seg = 0; seg < 400; ++seg) {
        double fn = (dir > 0.0) ? fp * 1.25 + 1e-12 : fp * 0.8 - 1e-12;
        double vend;
        try {
            vend = flow.velocity(fn);
        } catch (const InversionDomain&) {
            vend = 0.0; // shrink into the crossing search below
        }
        if (vend * v0 <= 0.0) {
            // Velocity crosses zero inside [fp, fn]: integrable only up to the
            // crossing; if tau is not reached by then the integral is singular.
            double phic = bisect([&](double p) {
                try { return flow.velocity(p); } catch (const InversionDomain&) { return -v0; }
            }, fp, fn, 1e-13);
            double stop = phic - dir * 1e-6 * (1.0 + std::abs(phic));
            double part = integrate(inv_v, fp, stop, 1e-10);
            if (acc + part < tau) throw VelocityZeroCrossing(phic);
            return bisect([&](double F) { return acc + integrate(inv_v, fp, F, 1e-10) - tau; },
                          fp, stop, tol);
        }
        double part = integrate(inv_v, fp, fn, 1e-10);
        if (acc + part >= tau)
            return bisect([&](double F) { return acc + integrate(inv_v, fp, F, 1e-10) - tau; },
                          fp, fn, tol);
        acc += part;
        fp = fn;
    }
    throw QuadratureFailure("fixed-point search did not reach tau");
}

} // namespace

DoubleRenormResult double_renorm_amplitude(const ReducedExpansion<double>& f, int k, double beta,
                                           const DoubleRenormOptions& opts) {
    const double gamma = beta - f.prefactor.exponent_alpha;
    const double A = to_double(f.prefactor.amplitude_A);
    IteratedRoot<double> root = build_iterated_root_gamma(f, k, gamma);
    if (k == 1) {
        // Degenerate: y_1(phi) = phi, the flow velocity vanishes identically
        // and f1** = f1*.
        return {amplitude_iterated_root(root).amplitude_B, 0.0, 0.0};
    }
    double a1 = to_double(root.A[0]);
    if (a1 <= 0.0) throw InversionDomain(a1);

    Flow flow{root, gamma, a1};
    std::vector<double> estimates;
    double xmax = 0.0;
    for (double x = 1e2; x <= 1e6 + 1.0; x *= 10.0) {
        double phi0 = flow.reduced_eval(x);
        double fstar = fixed_point(flow, phi0, opts.tau, 1e-12);
        estimates.push_back(A * fstar / std::pow(x, gamma));
        xmax = x;
    }
    std::size_t n = estimates.size();
    double b3 = estimates[n - 1], b2 = estimates[n - 2], b1 = estimates[n - 3];
    double denom = (b3 - b2) - (b2 - b1);
    double extrap = (std::abs(denom) > 1e-14 * (1.0 + std::abs(b3)))
                        ? b3 - (b3 - b2) * (b3 - b2) / denom
                        : b3;
    return {extrap, xmax, std::abs(b3 - b2)};
}

} // namespace ssx
