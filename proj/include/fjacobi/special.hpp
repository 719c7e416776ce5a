#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <numbers>

#include "fjacobi/combinatorics.hpp"
#include "fjacobi/f_kernel.hpp"
#include "fjacobi/jtable.hpp"

namespace fjacobi {

using real50 =
    boost::multiprecision::number<boost::multiprecision::backends::cpp_bin_float<50>, boost::multiprecision::et_off>;

// ---------------------------------------------------------------------------
// Gamma for complex argument (Lanczos, g = 7). Used only for complex orders;
// real orders go through std::tgamma.
// ---------------------------------------------------------------------------

template <class R>
std::complex<R> complex_gamma(std::complex<R> z) {
    static const R g = R(7);
    static const R c[9] = {
        R(0.99999999999980993L),      R(676.5203681218851L),     R(-1259.1392167224028L),
        R(771.32342877765313L),       R(-176.61502916214059L),   R(12.507343278686905L),
        R(-0.13857109526572012L),     R(9.9843695780195716e-6L), R(1.5056327351493116e-7L)};
    if (z.real() < R(0.5)) {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        const R pi = std::numbers::pi_v<R>;
        return pi / (std::sin(pi * z) * complex_gamma(std::complex<R>(1) - z));
    }
    z -= R(1);
    std::complex<R> acc = c[0];
    for (int i = 1; i < 9; ++i) acc += c[i] / (z + R(i));
    const std::complex<R> t = z + g + R(0.5);
    const R sqrt_two_pi = std::sqrt(R(2) * std::numbers::pi_v<R>);
    return sqrt_two_pi * std::pow(t, z + R(0.5)) * std::exp(-t) * acc;
}

namespace detail {

/// F of the full tail {w/(base+k)}_{k>=1}, i.e. the order-shifted series
/// sum_m (-w^2)^m / (m! (base+1)...(base+m)). Converges fast once
/// Re(base) + 1 outweighs |w|^2; callers arrange that.
template <class C>
C f_bessel_tail(const C& base, const C& w) {
    const C mw2 = -w * w;
    C term(1), acc(1);
    for (int m = 1; m <= 400; ++m) {
        term *= mw2 / (typename C::value_type(m) * (base + typename C::value_type(m)));
        acc += term;
        if (std::abs(term) <= std::abs(acc) * typename C::value_type(1e-19L)) return acc;
    }
    throw ConvergenceError("f_bessel_tail: series did not settle");
}

/// F({w/(nu+k)}_{k>=1}) for Re(nu) >= -1/2, combining an explicit head run
/// of the backward recursion with the analytic tail through the split rule
///   F(x) = F(x_1..x_N) F(T^N x) - F(x_1..x_{N-1}) x_N x_{N+1} F(T^{N+1} x).
/// Plain truncation alone converges like |w|^2/N and cannot reach 1e-12 in
/// feasible N; the split form restores fast convergence.
template <class C>
C f_bessel_full(const C& nu, const C& w) {
    using R = typename C::value_type;
    const double aw = static_cast<double>(std::abs(w));
    const long n = std::max<long>(24, static_cast<long>(4 * aw * aw + 8 * aw) + 8);

    C prev2(1), prev1(1);  // F(empty), F(x_1)
    C xk_prev = w / (nu + R(1));
    for (long k = 2; k <= n; ++k) {
        const C xk = w / (nu + R(k));
        const C cur = prev1 - xk_prev * xk * prev2;
        prev2 = prev1;
        prev1 = cur;
        xk_prev = xk;
    }
    // prev1 = F(x_1..x_n), prev2 = F(x_1..x_{n-1})
    const C xn = w / (nu + R(n));
    const C xn1 = w / (nu + R(n + 1));
    const C g_n = f_bessel_tail(nu + R(n), w);
    const C g_n1 = f_bessel_tail(nu + R(n + 1), w);
    return prev1 * g_n - prev2 * xn * xn1 * g_n1;
}

}  // namespace detail

/// Bessel J_nu(2w) through F: J_nu(2w) = w^nu / Gamma(nu+1) F({w/(nu+k)}).
/// Orders with Re(nu) < -1/2 are reached by the downward three-term
/// recurrence from a shifted order, which keeps every denominator nu+k away
/// from zero (the F form has poles at nonpositive integer offsets).
/// Internals run in extended precision; results are good to ~1e-13.
inline std::complex<double> bessel_j(std::complex<double> nu, std::complex<double> w, double tol = 1e-12) {
    using CL = std::complex<long double>;
    if (tol < 1e-14) throw ConvergenceError("bessel_j: tolerance below achievable floor");
    if (nu.imag() == 0.0 && nu.real() < 0.0 && nu.real() == std::floor(nu.real()))
        throw std::invalid_argument("bessel_j: order must not be a negative integer");
    if (w == std::complex<double>(0.0)) {
        if (nu == std::complex<double>(0.0)) return 1.0;
        if (nu.real() > 0.0) return 0.0;
        throw std::domain_error("bessel_j: J_nu(0) unbounded for Re(nu) < 0");
    }

    const CL wl(w.real(), w.imag());
    long shift = 0;
    if (nu.real() < -0.5) shift = static_cast<long>(std::ceil(-nu.real()));
    const CL base(nu.real() + shift, nu.imag());

    auto value_at = [&](const CL& order) {
        CL pref;
        if (order.imag() == 0.0L && w.imag() == 0.0 && w.real() > 0.0) {
            pref = std::pow(wl.real(), order.real()) / std::tgamma(order.real() + 1.0L);
        } else {
            pref = std::exp(order * std::log(wl)) / complex_gamma(order + CL(1));
        }
        return pref * detail::f_bessel_full(order, wl);
    };

    CL a = value_at(base);
    if (shift == 0) return {static_cast<double>(a.real()), static_cast<double>(a.imag())};

    CL b = value_at(base + CL(1));
    // J_{mu-1}(2w) = (mu/w) J_mu(2w) - J_{mu+1}(2w), run downward.
    for (long i = 0; i < shift; ++i) {
        const CL mu = base - CL(i);
        const CL lower = (mu / wl) * a - b;
        b = a;
        a = lower;
    }
    return {static_cast<double>(a.real()), static_cast<double>(a.imag())};
}

/// Closed form for F(w/(nu+1), ..., w/(nu+n)); exact over rationals.
template <class S>
S f_closed_nu(const S& nu, long n, const S& w) {
    if (n < 0) throw std::invalid_argument("f_closed_nu: negative length");
    const S denom = gamma_ratio(nu, n + 1, 1);
    if (is_zero(denom)) throw std::invalid_argument("f_closed_nu: nu hits an excluded negative integer");
    S acc(0);
    for (long s = 0; s <= n / 2; ++s) {
        // (n-s)!/(s!(n-2s)!) is the integer binom(n-s, s).
        S term = scalar_traits<S>::from_bigint(factorial(n - s) / (factorial(s) * factorial(n - 2 * s)));
        term = term * pow_int(w, 2 * s) * gamma_ratio(nu, n - s + 1, s + 1);
        acc = (s % 2 == 0) ? acc + term : acc - term;
    }
    return acc / denom;
}

/// Integer-offset specialization: F(w/(m+1), ..., w/n) for 0 <= m <= n.
template <class S>
S f_closed_mn(long m, long n, const S& w) {
    if (m < 0 || n < m) throw std::invalid_argument("f_closed_mn: requires 0 <= m <= n");
    S acc(0);
    for (long s = 0; s <= (n - m) / 2; ++s) {
        const BigInt num = factorial(n - s) * factorial(n - m - s);
        const BigInt den = factorial(s) * factorial(m + s) * factorial(n - m - 2 * s);
        S term = scalar_traits<S>::from_bigint(num) / scalar_traits<S>::from_bigint(den);
        term = term * pow_int(w, 2 * s);
        acc = (s % 2 == 0) ? acc + term : acc - term;
    }
    return acc * scalar_traits<S>::from_bigint(factorial(m)) / scalar_traits<S>::from_bigint(factorial(n));
}

/// Basic hypergeometric series 0phi1(;0;q,z) = sum_k q^{k(k-1)} z^k / (q;q)_k,
/// summed until the running term's magnitude drops below tol. Needs |q| < 1.
template <class S>
S q_phi01(const S& q, const S& z, double tol, long max_terms = 4000) {
    if (scalar_traits<S>::magnitude(q) >= 1.0) throw std::invalid_argument("q_phi01: requires |q| < 1");
    S acc(1), term(1), qpow(1), qk(1);
    for (long k = 1; k <= max_terms; ++k) {
        qk = qk * q;
        term = term * qpow * z / (S(1) - qk);
        acc = acc + term;
        if (scalar_traits<S>::magnitude(term) <= tol) return acc;
        qpow = qpow * q * q;
    }
    throw ConvergenceError("q_phi01: series did not reach tolerance");
}

/// q-exponential e(q; z) = 0phi1(;0;q,(1-q)z); tends to exp(z) as q -> 1.
template <class S>
S q_exp(const S& q, const S& z, double tol) {
    return q_phi01(q, (S(1) - q) * z, tol);
}

/// Bessel Y_n(2w) by central differencing of J in the order:
/// pi Y_n = d/dnu [J_nu - (-1)^n J_{-nu}] at nu = n. O(h^2) accurate.
inline double bessel_y_via_derivative(long n, double w, double h = 1e-4) {
    if (n < 0) throw std::invalid_argument("bessel_y_via_derivative: negative order");
    if (!(w > 0)) throw std::invalid_argument("bessel_y_via_derivative: requires w > 0");
    if (!(h > 0) || h >= 0.5) throw std::invalid_argument("bessel_y_via_derivative: h must lie in (0, 1/2)");
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    auto g = [&](double order) {
        const auto a = bessel_j(std::complex<double>(order), std::complex<double>(w));
        const auto b = bessel_j(std::complex<double>(-order), std::complex<double>(w));
        return (a - sgn * b).real();
    };
    return (g(n + h) - g(n - h)) / (2.0 * h * std::numbers::pi);
}

namespace detail {

inline real50 j_series_50(long n, const real50& w) {
    real50 term = pow_int(w, n) / real50(factorial(n));
    real50 acc = term;
    const real50 mw2 = -w * w;
    for (long s = 1; s <= 400; ++s) {
        term *= mw2 / (real50(s) * real50(n + s));
        acc += term;
        if (abs(term) <= abs(acc) * real50("1e-60") + real50("1e-90")) break;
    }
    return acc;
}

inline const real50& euler_gamma_50() {
    static const real50 g("0.577215664901532860606512090082402431042159335939923598805767234884867726777664670936947063291746749");
    return g;
}

/// pi * Y_n(2w) from the classical harmonic-number series; reference-grade,
/// independent of the differencing route.
inline real50 pi_y_series_50(long n, const real50& w) {
    const real50 jn = j_series_50(n, w);
    real50 acc = real50(2) * (log(w) + euler_gamma_50()) * jn;
    for (long k = 0; k < n; ++k)
        acc -= real50(factorial(n - k - 1)) / real50(factorial(k)) * pow_int(w, 2 * k - n);
    // harmonic-number tail
    real50 h_k(0), h_nk(0);
    for (long j = 1; j <= n; ++j) h_nk += real50(1) / real50(j);
    real50 base = pow_int(w, n) / real50(factorial(n));  // w^n / (0! n!)
    const real50 mw2 = -w * w;
    for (long k = 0; k <= 400; ++k) {
        const real50 term = (h_k + h_nk) * base;
        acc -= term;
        if (k > 2 && abs(term) <= abs(acc) * real50("1e-60") + real50("1e-90")) break;
        h_k += real50(1) / real50(k + 1);
        h_nk += real50(1) / real50(n + k + 1);
        base *= mw2 / (real50(k + 1) * real50(n + k + 1));
    }
    return acc;
}

}  // namespace detail

/// Residual of the J*Y expansion:
///   pi J_m(2w) Y_{n+1}(2w) + (n!/m!) w^{m-n-1} F(w/(m+1),...,w/n)
///     + sum_{s<m} c_s w^{n-m+2s+1},
/// which the theory puts at O(w^{m+n+1} log w). The n = m-1 variant drops the
/// F term. Evaluated in 50-digit floats: at w = 1e-3 the leading terms reach
/// w^{m-n-1} while the residual sits near w^{m+n+1} log w, so up to ~24
/// decimal digits cancel -- far beyond double precision.
inline double jy_residual(long m, long n, double w) {
    if (m < 0 || n < m - 1) throw std::invalid_argument("jy_residual: requires m >= 0 and n >= m-1");
    if (!(w > 0) || !(w < 0.5)) throw std::invalid_argument("jy_residual: requires 0 < w < 1/2");
    const real50 W(w);

    real50 acc = detail::j_series_50(m, W) * detail::pi_y_series_50(n + 1, W);

    if (n >= m) {
        std::vector<real50> seq;
        for (long k = m + 1; k <= n; ++k) seq.push_back(W / real50(k));
        acc += real50(factorial_ratio(n, m)) * pow_int(W, m - n - 1) * f_finite(seq);
    }

    for (long s = 0; s < m; ++s) {
        const BigInt num = factorial(m - s - 1) * factorial(n - m + 2 * s + 1);
        const BigInt den = factorial(s) * factorial(n + s + 1) * factorial(n - m + s + 1);
        acc += real50(num) / real50(den) * pow_int(W, n - m + 2 * s + 1);
    }
    return acc.convert_to<double>();
}

}  // namespace fjacobi
