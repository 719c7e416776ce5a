#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "fjacobi/combinatorics.hpp"
#include "fjacobi/scalar.hpp"
#include "fjacobi/special.hpp"

// Brute-force and classical-series reference evaluators. These back the
// verification suites and the unit tests; nothing in the main evaluation
// paths depends on them, which is the point.

namespace fjacobi::reference {

/// F by direct enumeration of the defining alternating sum over index tuples
/// with gaps >= 2. Exponential in the length; usable for n <= ~16.
template <class S>
S f_direct_sum(std::span<const S> x) {
    const long n = static_cast<long>(x.size());
    S total(1);
    // Extend a partial tuple whose last chosen index is `last` (1-based).
    auto recurse = [&](auto&& self, long last, const S& product, bool negate) -> void {
        for (long k = last + 2; k + 1 <= n; ++k) {
            const S p = product * x[k - 1] * x[k];
            total = negate ? total - p : total + p;
            self(self, k, p, !negate);
        }
    };
    recurse(recurse, -1, S(1), true);
    return total;
}

template <class S>
S f_direct_sum(const std::vector<S>& x) {
    return f_direct_sum(std::span<const S>(x));
}

/// Power series for J_nu(2w): sum_m (-1)^m w^{2m+nu} / (m! Gamma(nu+m+1)).
inline std::complex<double> bessel_j_series(std::complex<double> nu, std::complex<double> w,
                                            double tol = 1e-17) {
    using CL = std::complex<long double>;
    const CL nul(nu.real(), nu.imag());
    const CL wl(w.real(), w.imag());
    CL pref;
    if (nu.imag() == 0.0 && w.imag() == 0.0 && w.real() > 0.0)
        pref = std::pow(wl.real(), nul.real()) / std::tgamma(nul.real() + 1.0L);
    else if (w == std::complex<double>(0.0))
        return nu == std::complex<double>(0.0) ? 1.0 : 0.0;
    else
        pref = std::exp(nul * std::log(wl)) / complex_gamma(nul + CL(1));
    CL term(1), acc(1);
    for (int m = 1; m <= 500; ++m) {
        term *= -wl * wl / (CL(m) * (nul + CL(m)));
        acc += term;
        if (std::abs(term) <= tol * std::abs(acc) && m > 4) break;
    }
    const CL v = pref * acc;
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// Y_n(2w) for integer n >= 0 by the classical log/harmonic-number series.
inline double bessel_y_series(long n, double w) {
    if (!(w > 0)) throw std::invalid_argument("bessel_y_series: requires w > 0");
    const long double wl = w;
    long double jn = 0;
    {
        long double term = std::pow(wl, static_cast<long double>(n)) / std::tgamma(n + 1.0L);
        jn = term;
        for (long s = 1; s <= 300; ++s) {
            term *= -wl * wl / (static_cast<long double>(s) * (n + s));
            jn += term;
            if (std::abs(term) < 1e-22L * std::abs(jn)) break;
        }
    }
    const long double euler = 0.5772156649015328606065120900824024310422L;
    long double acc = 2.0L * (std::log(wl) + euler) * jn;
    for (long k = 0; k < n; ++k)
        acc -= std::tgamma(n - k + 0.0L) / std::tgamma(k + 1.0L) * std::pow(wl, 2.0L * k - n);
    long double hk = 0, hnk = 0;
    for (long j = 1; j <= n; ++j) hnk += 1.0L / j;
    long double base = std::pow(wl, static_cast<long double>(n)) / std::tgamma(n + 1.0L);
    for (long k = 0; k <= 300; ++k) {
        const long double t = (hk + hnk) * base;
        acc -= t;
        if (k > 2 && std::abs(t) < 1e-22L * std::abs(acc)) break;
        hk += 1.0L / (k + 1);
        hnk += 1.0L / (n + k + 1);
        base *= -wl * wl / ((k + 1.0L) * (n + k + 1.0L));
    }
    return static_cast<double>(acc / std::numbers::pi_v<long double>);
}

/// Classical continued fraction for J_{nu+1}(z)/J_nu(z):
///   z / (2(nu+1) - z^2 / (2(nu+2) - z^2 / ...)), evaluated by the modified
/// Lentz method.
inline double bessel_ratio_cf(double nu, double z, double tol = 1e-15) {
    const double tiny = 1e-290;
    double f = 2.0 * (nu + 1.0);
    if (f == 0.0) f = tiny;
    double c = f, dd = 0.0;
    for (int k = 1; k < 10000; ++k) {
        const double b = 2.0 * (nu + 1.0 + k);
        const double a = -z * z;
        dd = b + a * dd;
        if (std::abs(dd) < tiny) dd = std::copysign(tiny, dd);
        c = b + a / c;
        if (std::abs(c) < tiny) c = std::copysign(tiny, c);
        dd = 1.0 / dd;
        const double delta = c * dd;
        f *= delta;
        if (std::abs(delta - 1.0) < tol) break;
    }
    return z / f;
}

/// Direct partial sums of the geometric-sequence identity
///   F({t^{k-1} w}) = 1 + sum_m (-1)^m t^{m(2m-1)} w^{2m} / ((1-t^2)...(1-t^{2m})).
inline std::complex<double> f_geometric_series(std::complex<double> t, std::complex<double> w,
                                               double tol = 1e-16) {
    std::complex<double> acc(1.0), term(1.0);
    std::complex<double> tpow(1.0);  // t^{4m-3} increments
    for (int m = 1; m <= 2000; ++m) {
        // t^{m(2m-1)} / t^{(m-1)(2m-3)} = t^{4m-3}
        tpow = std::pow(t, 4.0 * m - 3.0);
        term *= -tpow * w * w / (1.0 - std::pow(t, 2.0 * m));
        acc += term;
        if (std::abs(term) <= tol) break;
    }
    return acc;
}

/// Plain term-by-term summation of 0phi1(;0;q,z).
inline std::complex<double> phi01_direct(std::complex<double> q, std::complex<double> z,
                                         double tol = 1e-16) {
    std::complex<double> acc(1.0), term(1.0), qk(1.0), qpow(1.0);
    for (int k = 1; k <= 4000; ++k) {
        qk *= q;
        term *= qpow * z / (1.0 - qk);
        acc += term;
        if (std::abs(term) <= tol) break;
        qpow *= q * q;
    }
    return acc;
}

}  // namespace fjacobi::reference
