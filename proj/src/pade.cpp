#include "ssx/pade.hpp"

#include <cmath>
#include <vector>

namespace ssx {
namespace {

// Dense linear solve with partial pivoting; works for double and exact
// rationals alike (for rationals any nonzero pivot is exact, but picking the
// largest keeps the double instantiation stable).
template <typename S>
std::vector<S> gauss_solve(std::vector<std::vector<S>> a, std::vector<S> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r) {
            using std::abs;
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        }
        if (a[piv][col] == S(0)) return {};
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == S(0)) continue;
            S m = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    std::vector<S> x(static_cast<std::size_t>(n), S(0));
    for (int r = n - 1; r >= 0; --r) {
        S acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

} // namespace

template <typename S>
PadeApproximant<S> build_pade(const PowerSeries<S>& s, int M, int N) {
    if (M + N > s.order()) throw Error("Pade needs M + N <= series order");

    PadeApproximant<S> pa;
    pa.M = M;
    pa.N = N;
    pa.den.assign(static_cast<std::size_t>(N) + 1, S(0));
    pa.den[0] = S(1);
    if (N > 0) {
        // sum_{j=1}^{N} q_j c_{M+i-j} = -c_{M+i},  i = 1..N
        std::vector<std::vector<S>> mat(static_cast<std::size_t>(N),
                                        std::vector<S>(static_cast<std::size_t>(N), S(0)));
        std::vector<S> rhs(static_cast<std::size_t>(N), S(0));
        for (int i = 1; i <= N; ++i) {
            for (int j = 1; j <= N; ++j) {
                int idx = M + i - j;
                if (idx >= 0) mat[i - 1][j - 1] = s[idx];
            }
            rhs[i - 1] = -s[M + i];
        }
        std::vector<S> q = gauss_solve(std::move(mat), std::move(rhs));
        if (q.empty()) throw SingularPadeSystem(M, N);
        for (int j = 1; j <= N; ++j) pa.den[j] = q[j - 1];
    }
    pa.num.assign(static_cast<std::size_t>(M) + 1, S(0));
    for (int i = 0; i <= M; ++i) {
        S acc = s[i];
        for (int j = 1; j <= std::min(i, N); ++j) acc += pa.den[j] * s[i - j];
        pa.num[i] = acc;
    }
    return pa;
}

template PadeApproximant<double> build_pade<double>(const PowerSeries<double>&, int, int);
template PadeApproximant<Rational> build_pade<Rational>(const PowerSeries<Rational>&, int, int);

double pade_amplitude(const ReducedExpansion<double>& f, int k, double beta) {
    const double alpha = f.prefactor.exponent_alpha;
    const double A = to_double(f.prefactor.amplitude_A);
    const double gamma = beta - alpha;
    PowerSeries<double> s = f.series.truncated(k);

    if (gamma == 0.0) {
        int n = k / 2;
        if (n < 1) throw Error("pade_amplitude needs k >= 2");
        PadeApproximant<double> pa = build_pade(s, n, n);
        if (pa.den[n] == 0.0) throw SingularPadeSystem(n, n);
        return A * pa.num[n] / pa.den[n];
    }

    // g = f_bar^{1/gamma} grows like r x; the largest odd sub-order fits
    // P_{N+1/N} whose x -> infinity slope is the coefficient ratio.
    PowerSeries<double> g = series_pow(s, 1.0 / gamma);
    int n = (k - 1) / 2;
    if (n < 1) throw Error("pade_amplitude needs k >= 3 for gamma != 0");
    PadeApproximant<double> pa = build_pade(g, n + 1, n);
    if (pa.den[n] == 0.0) throw SingularPadeSystem(n + 1, n);
    double r = pa.num[n + 1] / pa.den[n];
    if (r <= 0.0) throw NegativeRatio(r);
    return A * std::pow(r, gamma);
}

} // namespace ssx
