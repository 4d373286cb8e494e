#include "ssx/factor.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace ssx {
namespace {

using Cx = std::complex<double>;

// Moments mu_m = sum_i n_i A_i^m of the factor representation.  From
// x d/dx ln prod (1+A_i x)^{n_i} = sum_i n_i A_i x / (1 + A_i x) one gets
// mu_m = (-1)^{m-1} g_m with g the x-dlog series of the input.
std::vector<double> factor_moments(const PowerSeries<double>& reduced, int k, double gamma_or_nan) {
    PowerSeries<double> g = series_xdlog(reduced.truncated(k));
    std::vector<double> mu(static_cast<std::size_t>(k) + 1, 0.0);
    mu[0] = gamma_or_nan; // only meaningful in constrained mode
    for (int m = 1; m <= k; ++m) mu[m] = ((m % 2) ? 1.0 : -1.0) * g[m];
    return mu;
}

std::vector<Cx> roots_monic(const Eigen::VectorXd& low_coeffs) {
    // Roots of z^N + c_{N-1} z^{N-1} + ... + c_0 via companion matrix.
    const int n = static_cast<int>(low_coeffs.size());
    if (n == 0) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -low_coeffs(i);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<Cx> roots;
    for (int i = 0; i < n; ++i) {
        Cx z = es.eigenvalues()(i);
        double scale = std::max(std::abs(z.real()), 1e-300);
        if (std::abs(z.imag()) < 1e-8 * scale) z = Cx(z.real(), 0.0);
        roots.push_back(z);
    }
    // Deterministic order: by real part, then imaginary part.
    std::sort(roots.begin(), roots.end(), [](const Cx& a, const Cx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

struct PronySolution {
    std::vector<Cx> nodes;   // A_i
    std::vector<Cx> weights; // n_i
};

// Exponential-sum fit: find nodes/weights with sum_i w_i z_i^m = mu[m] for
// m = m0 .. m0 + (number of consumed moments) - 1.  With a fixed node z0 the
// node polynomial is deflated to (z - z0) Q(z) and one fewer moment is used.
PronySolution prony(const std::vector<double>& mu, int m0, int n_nodes,
                    std::optional<double> fixed_node) {
    std::vector<double> m(mu.begin() + m0, mu.end());
    if (fixed_node) {
        // nu_m = mu_{m+1} - z0 mu_m annihilates the fixed node.
        std::vector<double> nu(m.size() - 1);
        for (std::size_t i = 0; i + 1 < m.size(); ++i) nu[i] = m[i + 1] - *fixed_node * m[i];
        m = std::move(nu);
    }
    const int nfree = n_nodes - (fixed_node ? 1 : 0);
    if (static_cast<int>(m.size()) < 2 * nfree)
        throw DegenerateMoments("not enough moments for " + std::to_string(n_nodes) + " nodes");

    std::vector<Cx> nodes;
    if (nfree > 0) {
        Eigen::MatrixXd hank(nfree, nfree);
        Eigen::VectorXd rhs(nfree);
        for (int i = 0; i < nfree; ++i) {
            for (int j = 0; j < nfree; ++j) hank(i, j) = m[i + j];
            rhs(i) = -m[i + nfree];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(hank);
        lu.setThreshold(1e-11);
        if (lu.rank() < nfree)
            throw DegenerateMoments("Hankel matrix rank " + std::to_string(lu.rank()) +
                                    " < " + std::to_string(nfree));
        nodes = roots_monic(lu.solve(rhs));
    }
    if (fixed_node) nodes.push_back(Cx(*fixed_node, 0.0));

    Eigen::MatrixXcd vand(n_nodes, n_nodes);
    Eigen::VectorXcd b(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        for (int j = 0; j < n_nodes; ++j) vand(i, j) = std::pow(nodes[j], m0 + i);
        b(i) = mu[m0 + i];
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(vand);
    lu.setThreshold(1e-11);
    if (lu.rank() < n_nodes) throw DegenerateMoments("Vandermonde system singular");
    Eigen::VectorXcd w = lu.solve(b);

    PronySolution sol;
    sol.nodes = nodes;
    sol.weights.assign(w.data(), w.data() + n_nodes);
    return sol;
}

FactorApproximant assemble(const ReducedExpansion<double>& f, int k, FactorMode mode,
                           const PronySolution& sol) {
    FactorApproximant fa;
    fa.prefactor = f.prefactor;
    fa.order_k = k;
    fa.mode = mode;
    for (std::size_t i = 0; i < sol.nodes.size(); ++i) {
        if (sol.nodes[i] == Cx(0.0)) throw NoRealSolution("factor node A_i = 0");
        fa.pairs.emplace_back(sol.nodes[i], sol.weights[i]);
    }
    return fa;
}

} // namespace

FactorApproximant build_factor(const ReducedExpansion<double>& f, int k, FactorMode mode,
                               std::optional<double> beta) {
    if (k < 2) throw Error("factor approximant needs k >= 2");
    if (f.series.order() < k) throw Error("series order too small for requested k");
    const bool constrained = beta.has_value();
    if (mode != FactorMode::Free && !beta) throw Error("this factor mode needs beta");

    double gamma = constrained ? *beta - f.prefactor.exponent_alpha
                               : std::numeric_limits<double>::quiet_NaN();
    std::vector<double> mu = factor_moments(f.series, k, gamma);
    const int m0 = constrained ? 0 : 1;
    // Condition budget: the exponent constraint contributes mu_0 = gamma, the
    // k matching orders contribute mu_1..mu_k.  Plain constrained solves an
    // exactly determined system: for odd k the budget k+1 is even and fixes
    // (k+1)/2 pairs; for even k the top matching order is dropped, fixing k/2
    // pairs.  Scale-fixed and variational modes instead keep every condition
    // and close an odd budget by pinning one node (A_1 = 1, or a scanned
    // node).
    if (mode == FactorMode::Constrained && (static_cast<int>(mu.size()) - m0) % 2 != 0)
        mu.pop_back();
    const int available = static_cast<int>(mu.size()) - m0;
    const bool pinned = (available % 2 != 0);
    const int n_pairs = pinned ? (available + 1) / 2 : available / 2;
    if ((mode == FactorMode::ScaleFixed || mode == FactorMode::Variational) && !pinned)
        throw Error("pinned-node factor modes need an odd condition budget");

    auto solve_reduced_rank = [&](int np) {
        return assemble(f, k, mode, prony(mu, m0, np, std::nullopt));
    };

    if (mode == FactorMode::Variational) {
        // Stationarity of B_k with respect to the pinned node over A_1 > 0.
        auto amp = [&](double a) -> double {
            try {
                FactorApproximant fa =
                    assemble(f, k, mode, prony(mu, m0, n_pairs, a));
                return amplitude_factor(fa).amplitude_B;
            } catch (const Error&) {
                return std::numeric_limits<double>::quiet_NaN();
            }
        };
        const double h = 1e-5;
        double best = -1.0;
        double prev_d = std::numeric_limits<double>::quiet_NaN();
        double prev_a = 0.0;
        for (int i = 0; i <= 400; ++i) {
            double a = std::pow(10.0, -2.0 + 4.0 * i / 400.0); // A_1 in [1e-2, 1e2]
            double d = (amp(a * (1 + h)) - amp(a * (1 - h))) / (2 * a * h);
            if (std::isfinite(d) && std::isfinite(prev_d) && prev_d * d < 0.0) {
                double lo = prev_a, hi = a, dlo = prev_d;
                for (int it = 0; it < 80; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double dm = (amp(mid * (1 + h)) - amp(mid * (1 - h))) / (2 * mid * h);
                    if (!std::isfinite(dm)) break;
                    if (dlo * dm <= 0.0) hi = mid; else { lo = mid; dlo = dm; }
                }
                best = 0.5 * (lo + hi);
                break;
            }
            prev_d = d;
            prev_a = a;
        }
        if (best <= 0.0) throw NoRealSolution("no stationary A_1 found in scan range");
        return assemble(f, k, mode, prony(mu, m0, n_pairs, best));
    }

    try {
        if (!pinned) return assemble(f, k, mode, prony(mu, m0, n_pairs, std::nullopt));
        // Odd budget: pin A_1 = 1 (scale invariance choice).
        return assemble(f, k, mode, prony(mu, m0, n_pairs, 1.0));
    } catch (const DegenerateMoments&) {
        // Rank-deficient Hankel: the series lives in a smaller model class.
        if (n_pairs > 1 && available >= 2 * (n_pairs - 1)) return solve_reduced_rank(n_pairs - 1);
        throw;
    }
}

AsymptoticForm amplitude_factor(const FactorApproximant& fa) {
    Cx sum_n = 0.0, log_prod = 0.0;
    for (auto [a, n] : fa.pairs) {
        sum_n += n;
        log_prod += n * std::log(a); // principal branch; conjugate pairs cancel
    }
    Cx prod = std::exp(log_prod);
    double scale = std::max({std::abs(prod.real()), std::abs(sum_n.real()), 1.0});
    if (std::abs(prod.imag()) > 1e-8 * scale || std::abs(sum_n.imag()) > 1e-8 * scale)
        throw ComplexBranch("factor amplitude has nonzero imaginary part");
    return {to_double(fa.prefactor.amplitude_A) * prod.real(),
            fa.prefactor.exponent_alpha + sum_n.real()};
}

double eval_factor(const FactorApproximant& fa, double x) {
    Cx r = fa.prefactor.eval(x);
    for (auto [a, n] : fa.pairs) {
        Cx base = 1.0 + a * x;
        if (base.imag() == 0.0 && base.real() <= 0.0 && n.imag() == 0.0 &&
            n.real() != std::floor(n.real()))
            throw DomainError(x, "branch point at x* = " + std::to_string(-1.0 / a.real()));
        r *= std::exp(n * std::log(base));
    }
    if (std::abs(r.imag()) > 1e-8 * (1.0 + std::abs(r.real())))
        throw DomainError(x, "factor value has nonzero imaginary part");
    return r.real();
}

PowerSeries<double> factor_series(const FactorApproximant& fa, int order) {
    std::vector<Cx> log_acc(static_cast<std::size_t>(order) + 1, Cx(0.0));
    for (auto [a, n] : fa.pairs) {
        Cx p = a;
        for (int m = 1; m <= order; ++m) {
            log_acc[m] += n * ((m % 2) ? 1.0 : -1.0) * p / double(m); // n * ln(1+ax)
            p *= a;
        }
    }
    std::vector<double> real_log(log_acc.size());
    for (std::size_t i = 0; i < log_acc.size(); ++i) real_log[i] = log_acc[i].real();
    return series_exp(PowerSeries<double>(std::move(real_log)));
}

std::vector<double> factor_singularities(const FactorApproximant& fa) {
    std::vector<double> s;
    for (auto [a, n] : fa.pairs)
        if (a.imag() == 0.0 && a.real() != 0.0) s.push_back(-1.0 / a.real());
    return s;
}

} // namespace ssx
