#include "ssx/corpus.hpp"

#include <cmath>

namespace ssx {
namespace {

using RS = PowerSeries<Rational>;
using DS = PowerSeries<double>;

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<Rational> bernoulli(int count) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
    std::vector<Rational> B(count, Rational(0));
    B[0] = 1;
    for (int m = 1; m < count; ++m) {
        Rational acc = 0, binom = 1; // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc += binom * B[j];
            binom = binom * Rational(m + 1 - j) / Rational(j + 1);
        }
        B[m] = -acc / binom; // binom is now C(m+1, m)
    }
    return B;
}

DS to_double_ps(const RS& s) { return to_double_series(s); }

DS geometric_alternating(int order) {
    // x/(1+x) = x - x^2 + x^3 - ...
    std::vector<double> u(static_cast<std::size_t>(order) + 1, 0.0);
    for (int n = 1; n <= order; ++n) u[n] = (n % 2) ? 1.0 : -1.0;
    return DS(std::move(u));
}

DS arctan_series(int order) {
    std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
    for (int n = 1; n <= order; n += 2) a[n] = ((n / 2) % 2 ? -1.0 : 1.0) / n;
    return DS(std::move(a));
}

// 1/(1 + e^{-x}) as a power series.
DS logistic_series(int order) {
    std::vector<double> s(static_cast<std::size_t>(order) + 1, 0.0);
    s[0] = 1.0; // (1 + e^{-x}) / 2
    double fact = 1.0;
    for (int n = 1; n <= order; ++n) {
        fact *= n;
        s[n] = ((n % 2) ? -1.0 : 1.0) / (2.0 * fact);
    }
    DS inv = series_inverse(DS(std::move(s)));
    return 0.5 * inv;
}

DS erfc_minus(int order) {
    // erfc(-x) = 1 + (2/sqrt(pi)) sum (-1)^n x^{2n+1} / (n! (2n+1))
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = 1.0;
    double fact = 1.0;
    for (int n = 0; 2 * n + 1 <= order; ++n) {
        if (n > 0) fact *= n;
        c[2 * n + 1] = (n % 2 ? -1.0 : 1.0) * 2.0 / (std::sqrt(M_PI) * fact * (2 * n + 1));
    }
    return DS(std::move(c));
}

// Riccati route for the anharmonic-oscillator ground state: psi = e^{-S},
// W = S' = x + sum_k g^k W_k with W_k odd of degree 2k+1; matching powers of
// g and x gives a rational top-down recurrence, E_k = w_{k,0}/2.
RS oscillator_series(int order) {
    std::vector<std::vector<Rational>> W; // W[k][j] multiplies x^{2j+1}
    std::vector<Rational> E(static_cast<std::size_t>(order) + 1, Rational(0));
    E[0] = Rational(1, 2);
    for (int k = 1; k <= order; ++k) {
        // RHS even polynomial: (1/2) sum_{i=1}^{k-1} W_i W_{k-i} - delta_{k1} x^4
        std::vector<Rational> rhs(static_cast<std::size_t>(k) + 2, Rational(0)); // x^{2j}
        for (int i = 1; i <= k - 1; ++i) {
            const auto& a = W[i - 1];
            const auto& b = W[k - i - 1];
            for (std::size_t p = 0; p < a.size(); ++p)
                for (std::size_t q = 0; q < b.size(); ++q)
                    rhs[p + q + 1] += a[p] * b[q] / 2; // x^{2p+1} x^{2q+1} = x^{2(p+q+1)}
        }
        if (k == 1) rhs[2] -= 1;
        // (1/2)(2j+1) w_j - w_{j-1} = rhs_j, solved from the top (w_{k+1} = 0).
        std::vector<Rational> w(static_cast<std::size_t>(k) + 1, Rational(0));
        for (int j = k; j >= 0; --j) {
            Rational upper = (j + 1 <= k) ? w[j + 1] : Rational(0);
            // from power x^{2(j+1)}: (1/2)(2j+3) w_{j+1} - w_j = rhs_{j+1}
            w[j] = Rational(2 * j + 3) / 2 * upper - rhs[j + 1];
        }
        E[k] = w[0] / 2;
        W.push_back(std::move(w));
    }
    return RS(std::move(E));
}

RS scalar_field_series(int order) {
    // f = x exp{ 2 int_0^infty e^{-t} ln[e^{-xt} I_0(xt)] dt }; the reduced
    // part is exp(2 sum_j l_j j! x^j) with l = log-series of e^{-z} I_0(z).
    std::vector<Rational> i0(static_cast<std::size_t>(order) + 1, Rational(0));
    Rational pow4 = 1;
    for (int m = 0; 2 * m <= order; ++m) {
        Rational f = factorial(m);
        i0[2 * m] = Rational(1) / (pow4 * f * f);
        pow4 *= 4;
    }
    RS logi0 = series_log(RS(std::move(i0)));
    std::vector<Rational> l(logi0.coeffs());
    l[1] -= 1; // the e^{-z} factor
    std::vector<Rational> arg(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int j = 1; j <= order; ++j) arg[j] = 2 * l[j] * factorial(j);
    return series_exp(RS(std::move(arg)));
}

RS string_series(int order) {
    // (1 + g^2/32 + (g/4) sqrt(1 + g^2/64)); reduced part of Eq. 8.6.
    std::vector<Rational> inner(static_cast<std::size_t>(order) + 1, Rational(0));
    inner[0] = 1;
    if (order >= 2) inner[2] = Rational(1, 64);
    RS root = series_pow(RS(std::move(inner)), Rational(1, 2));
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    out[0] = 1;
    if (order >= 2) out[2] = Rational(1, 32);
    for (int n = 1; n <= order; ++n) out[n] += root[n - 1] / 4;
    return RS(std::move(out));
}

} // namespace

PowerSeries<double> oracle_expand(const std::string& function_id, int order) {
    if (order < 0) throw Error("oracle order must be nonnegative");
    const std::size_t sz = static_cast<std::size_t>(order) + 1;

    if (function_id == "function-1") {
        // (1/2)(sqrt(4+x) - 1) = (1/2)(2 (1+x/4)^{1/2} - 1)
        std::vector<Rational> base(sz, Rational(0));
        base[0] = 1;
        if (order >= 1) base[1] = Rational(1, 4);
        RS r = series_pow(RS(std::move(base)), Rational(1, 2));
        std::vector<Rational> c(sz);
        c[0] = Rational(1, 2);
        for (int n = 1; n <= order; ++n) c[n] = r[n];
        return to_double_ps(RS(std::move(c)));
    }
    if (function_id == "function-2") {
        DS angular = (2.0 / M_PI) * arctan_series(order);
        angular[0] += 1.0; // (2/pi) arccot(-x) = 1 + (2/pi) arctan x
        return angular * series_exp(geometric_alternating(order));
    }
    if (function_id == "function-3") {
        DS angular = arctan_series(order);
        angular[0] += M_PI / 2.0; // arccot(-x) = pi/2 + arctan x
        return angular * logistic_series(order);
    }
    if (function_id == "debye-huckel") {
        std::vector<Rational> c(sz);
        for (int n = 0; n <= order; ++n)
            c[n] = Rational(2) * (n % 2 ? -1 : 1) / factorial(n + 2);
        return to_double_ps(RS(std::move(c)));
    }
    if (function_id == "stirling") {
        // exp( sum_j B_{2j} / (2j (2j-1)) x^{2j-1} )
        std::vector<Rational> B = bernoulli(order + 2);
        std::vector<Rational> l(sz, Rational(0));
        for (int j = 1; 2 * j - 1 <= order; ++j)
            l[2 * j - 1] = B[2 * j] / Rational(2 * j * (2 * j - 1));
        return to_double_ps(series_exp(RS(std::move(l))));
    }
    if (function_id == "integral-1") {
        // (1+2x) sum (-1)^n (2n)! x^{2n}
        std::vector<Rational> c(sz, Rational(0));
        for (int m = 0; m <= order; ++m) {
            int n = m / 2;
            c[m] = (n % 2 ? -1 : 1) * (m % 2 ? Rational(2) : Rational(1)) * factorial(2 * n);
        }
        return to_double_ps(RS(std::move(c)));
    }
    if (function_id == "erfc") return erfc_minus(order);
    if (function_id == "integral-2") return erfc_minus(order) * logistic_series(order);
    if (function_id == "mittag-leffler") {
        // e^{x^2} erfc(x) = sum (-x)^n / Gamma(n/2 + 1)
        std::vector<double> c(sz);
        for (int n = 0; n <= order; ++n)
            c[n] = (n % 2 ? -1.0 : 1.0) / std::tgamma(0.5 * n + 1.0);
        return DS(std::move(c));
    }
    if (function_id == "partition-phi4") {
        // (-1)^n Gamma(2n + 1/2) / (sqrt(pi) n!); Gamma ratio kept exact:
        // Gamma(2n+1/2)/Gamma(1/2) = prod_{j=0}^{2n-1} (j + 1/2)
        std::vector<Rational> c(sz);
        for (int n = 0; n <= order; ++n) {
            Rational g = 1;
            for (int j = 0; j < 2 * n; ++j) g *= Rational(2 * j + 1, 2);
            c[n] = (n % 2 ? -1 : 1) * g / factorial(n);
        }
        return to_double_ps(RS(std::move(c)));
    }
    if (function_id == "oscillator") return to_double_ps(oscillator_series(order));
    if (function_id == "scalar-field") return to_double_ps(scalar_field_series(order));
    if (function_id == "branched-polymer") {
        // 1F1(1; 3/2; -(3/2)x): c_n = (-3/2)^n / (3/2)_n
        std::vector<Rational> c(sz);
        Rational num = 1; // (-3/2)^n
        for (int n = 0; n <= order; ++n) {
            Rational poch = 1;
            for (int j = 0; j < n; ++j) poch *= Rational(3 + 2 * j, 2);
            c[n] = num / poch;
            num *= Rational(-3, 2);
        }
        return to_double_ps(RS(std::move(c)));
    }
    if (function_id == "string") return to_double_ps(string_series(order));
    throw UnknownFunction(function_id);
}

EosRecord eos_equation_of_state() {
    EosRecord rec;
    // Close-packed constraint: 2 pi sqrt(2) x^6 (A2 x^2)^{-1} -> pi^2 x^4.
    rec.A2 = 2.0 * std::sqrt(2.0) / M_PI;
    rec.b = rec.A2 - 1.0;
    const double pref = 2.0 * M_PI * std::sqrt(2.0); // 2 pi rho0 a_s/m, units m = a_s = 1
    const double A2 = rec.A2, b = rec.b;
    rec.energy = [pref, b](double rho_rel) {
        double t = std::cbrt(rho_rel);
        return pref * rho_rel / ((1.0 - t) * (1.0 - t) * (1.0 + b * t));
    };
    rec.energy_x = [pref, A2](double x) {
        double x2 = x * x;
        return pref * x2 * x2 * x2 / (1.0 + A2 * x2);
    };
    return rec;
}

} // namespace ssx
