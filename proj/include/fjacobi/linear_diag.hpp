#pragma once

#include <algorithm>
#include <cmath>

#include "fjacobi/combinatorics.hpp"
#include "fjacobi/jacobi_core.hpp"
#include "fjacobi/jtable.hpp"
#include "fjacobi/linalg.hpp"

namespace fjacobi {

// ---------------------------------------------------------------------------
// K(w) = K_0 + w E_+ + w E_- with K_0 = diag(-d..d): the linear-diagonal
// Jacobi matrix. Everything downstream of the J table and the F functional
// meets here: the v_s basis, the rank-one similarity form, the resolvent,
// three routes to the characteristic polynomial, the eigenvector function
// x(z), and the float-mode spectral solver.
// ---------------------------------------------------------------------------

template <class S>
JacobiMatrix<S> k_matrix(long d, const S& w) {
    std::vector<S> diag;
    diag.reserve(2 * d + 1);
    for (long k = -d; k <= d; ++k) diag.push_back(scalar_traits<S>::from_int(k));
    return JacobiMatrix<S>::constant_offdiag(std::move(diag), w, true);
}

/// Columns v_s (s = -d..d) with row-r entry J(s - r, s + d + 1).
/// Satisfies K(w) v_s = s v_s - w J(s-d-1, s+d+1) e_d exactly.
template <class S>
struct BasisMatrix {
    long d;
    Mat<S> cols;  // cols[s + d][r + d]

    std::vector<S> column(long s) const { return cols[s + d]; }

    Mat<S> as_matrix() const {  // rows x cols, both -d..d
        const long n = 2 * d + 1;
        Mat<S> m(n, std::vector<S>(n, S(0)));
        for (long c = 0; c < n; ++c)
            for (long r = 0; r < n; ++r) m[r][c] = cols[c][r];
        return m;
    }
};

template <class S>
BasisMatrix<S> v_basis(long d, const S& w) {
    if (is_zero(w)) throw std::invalid_argument("v_basis: w must be nonzero");
    JTable<S> table(w);
    BasisMatrix<S> basis{d, Mat<S>(2 * d + 1, std::vector<S>(2 * d + 1, S(0)))};
    for (long s = -d; s <= d; ++s)
        for (long r = -d; r <= d; ++r) basis.cols[s + d][r + d] = table.at(s - r, s + d + 1);
    return basis;
}

/// K(w) in the v_s basis: K0 - b a^T with
///   alpha_s = J(s-d-1, s+d+1),  beta_s = (-1)^{d+s} w^{2d+1} / ((d+s)!(d-s)!).
template <class S>
struct RankOneForm {
    long d;
    std::vector<S> alpha;  // index s + d
    std::vector<S> beta;

    Mat<S> ktilde() const {
        const long n = 2 * d + 1;
        Mat<S> m(n, std::vector<S>(n, S(0)));
        for (long i = 0; i < n; ++i) m[i][i] = scalar_traits<S>::from_int(i - d);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m[i][j] = m[i][j] - beta[i] * alpha[j];
        return m;
    }
};

template <class S>
RankOneForm<S> rank_one_form(long d, const S& w) {
    if (is_zero(w)) throw std::invalid_argument("rank_one_form: w must be nonzero");
    JTable<S> table(w);
    RankOneForm<S> form{d, std::vector<S>(2 * d + 1), std::vector<S>(2 * d + 1)};
    const S w_pow = pow_int(w, 2 * d + 1);
    for (long s = -d; s <= d; ++s) {
        form.alpha[s + d] = table.at(s - d - 1, s + d + 1);
        S beta = w_pow / scalar_traits<S>::from_bigint(factorial(d + s) * factorial(d - s));
        form.beta[s + d] = ((d + s) % 2 == 0) ? beta : -beta;
    }
    return form;
}

/// Resolvent (Ktilde(w) - z)^{-1} through the rank-one update of the diagonal
/// resolvent. Requires z off {-d..d} and a nonvanishing denominator
/// 1 - a^T (K0 - z)^{-1} b.
template <class S>
Mat<S> resolvent(long d, const S& w, const S& z) {
    const auto form = rank_one_form(d, w);
    const long n = 2 * d + 1;
    std::vector<S> dres(n);  // (K0 - z)^{-1} diagonal
    for (long i = 0; i < n; ++i) {
        const S diff = scalar_traits<S>::from_int(i - d) - z;
        if (is_zero(diff)) throw std::domain_error("resolvent: z hits spec(K0)");
        dres[i] = S(1) / diff;
    }
    S denom(1);
    for (long i = 0; i < n; ++i) denom = denom - form.alpha[i] * dres[i] * form.beta[i];
    if (is_zero(denom)) throw std::domain_error("resolvent: rank-one denominator vanishes");
    Mat<S> r(n, std::vector<S>(n, S(0)));
    for (long i = 0; i < n; ++i) {
        r[i][i] = dres[i];
        for (long j = 0; j < n; ++j) r[i][j] = r[i][j] + dres[i] * form.beta[i] * form.alpha[j] * dres[j] / denom;
    }
    return r;
}

// ---------------------------------------------------------------------------
// chi_red(z) = (-1)^{d+1} det(K(w) - z)/z, three ways.
// ---------------------------------------------------------------------------

/// Closed form: chi_red(z) = sum_s binom(2d-s+1, s) w^{2s} prod_{k=1}^{d-s} (k^2 - z^2).
template <class S>
Poly<S> charpoly_closed(long d, const S& w) {
    // prefix[j] = prod_{k=1}^{j}(k^2 - z^2) as even polynomials.
    std::vector<Poly<S>> prefix(d + 1);
    prefix[0] = Poly<S>::constant(S(1));
    for (long k = 1; k <= d; ++k)
        prefix[k] = prefix[k - 1] * Poly<S>({scalar_traits<S>::from_int(k * k), S(0), S(-1)});
    Poly<S> acc;
    S w2s(1);
    for (long s = 0; s <= d; ++s) {
        acc = acc + prefix[d - s] * (scalar_traits<S>::from_bigint(binom_int(2 * d - s + 1, s)) * w2s);
        w2s = w2s * w * w;
    }
    return acc.with_parity(Parity::even);
}

/// Same polynomial through the antisymmetric-diagonal route with lambda_k = k.
template <class S>
Poly<S> charpoly_via_antisym(long d, const S& w) {
    std::vector<S> lambda(d);
    for (long k = 1; k <= d; ++k) lambda[k - 1] = scalar_traits<S>::from_int(k);
    return charpoly_antisym(std::span<const S>(lambda), w).with_parity(Parity::even);
}

/// chi(z) = -z prod_{k=1}^d (z^2 - k^2) F(w/(z-d), ..., w/(z+d)) as an odd
/// polynomial of degree 2d+1, expanded by exact interpolation at half-integer
/// nodes (the poles of the F arguments sit at the integers -d..d).
/// Sign anchor: d = 0 gives chi(z) = -z, chi_red = 1.
template <class S>
Poly<S> charpoly_f(long d, const S& w) {
    const S two = scalar_traits<S>::from_int(2);
    std::vector<S> us(d + 1), vals(d + 1);
    for (long i = 0; i <= d; ++i) {
        const S z = scalar_traits<S>::from_int(2 * i + 1) / two;
        std::vector<S> seq;
        seq.reserve(2 * d + 1);
        for (long k = -d; k <= d; ++k) seq.push_back(w / (z + scalar_traits<S>::from_int(k)));
        S chi = -z * f_finite(seq);
        for (long k = 1; k <= d; ++k) chi = chi * (z * z - scalar_traits<S>::from_int(k * k));
        us[i] = z * z;
        // chi_red(z) = (-1)^{d+1} chi(z)/z
        S red = chi / z;
        vals[i] = (d % 2 == 0) ? -red : red;
    }
    const Poly<S> q = interpolate(std::span<const S>(us), std::span<const S>(vals));
    return substitute_z_squared(q);
}

/// chi itself (odd, degree 2d+1, leading coefficient -1) from chi_red.
template <class S>
Poly<S> chi_from_red(long d, const Poly<S>& red) {
    std::vector<S> c(red.coeffs().size() + 1, S(0));
    for (size_t i = 0; i < red.coeffs().size(); ++i) c[i + 1] = red.coeffs()[i];
    Poly<S> chi(std::move(c), Parity::odd);
    return (d % 2 == 0) ? chi * S(-1) : chi;
}

/// chi_red at integer points by the two closed sums; n = 0 uses the w-series
/// with squared-factorial coefficients, n >= 1 the alternating binomial sum
/// (valid for every positive integer, the summation cutting off at min(n-1, d)).
template <class S>
S char_red_at_integer(long d, const S& w, long n) {
    if (n < 0) throw std::invalid_argument("char_red_at_integer: n must be nonnegative");
    if (n == 0) {
        S acc(0);
        S w2s(1);
        for (long s = 0; s <= d; ++s) {
            const BigInt f = factorial(d - s) * factorial(d - s) * factorial(2 * d - s + 1);
            const BigInt g = factorial(s) * factorial(2 * d - 2 * s + 1);
            acc = acc + scalar_traits<S>::from_bigint(f / g) * w2s;
            w2s = w2s * w * w;
        }
        return acc;
    }
    S acc(0);
    for (long k = 0; k <= std::min(n - 1, d); ++k) {
        const BigInt coeff =
            factorial(2 * k + 1) * binom_z_int(n + k, 2 * k + 1) * binom_z_int(d + k + 1, 2 * k + 1);
        if (coeff == 0) continue;
        S term = scalar_traits<S>::from_bigint(coeff) * pow_int(w, 2 * d - 2 * k);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc / scalar_traits<S>::from_int(n);
}

// ---------------------------------------------------------------------------
// Eigenvector function x(z): components xi_k(z), k = -d..d, in the pole-free
// polynomial form
//   xi_k(z) = w^{-d-k} sum_s (-1)^s (d+k-s)!/(s!(d+k-2s)!) w^{2s}
//             prod_{j=s}^{d+k-s-1} (z+d-j),
// a polynomial of degree d+k with xi_{-d} = 1. Satisfies
//   (K(w) - z) x(z) = w^{-2d} chi(z) e_d
// exactly, so x(lambda) is an eigenvector at every root of chi.
// ---------------------------------------------------------------------------

template <class S>
std::vector<S> eigen_x(long d, const S& w, const S& z) {
    if (is_zero(w)) throw std::invalid_argument("eigen_x: w must be nonzero");
    std::vector<S> x(2 * d + 1);
    for (long k = -d; k <= d; ++k) {
        const long m = d + k;
        S acc(0);
        for (long s = 0; s <= m / 2; ++s) {
            S term = scalar_traits<S>::from_bigint(factorial(m - s) / (factorial(s) * factorial(m - 2 * s)));
            term = term * pow_int(w, 2 * s);
            for (long j = s; j <= m - s - 1; ++j) term = term * (z + scalar_traits<S>::from_int(d - j));
            acc = (s % 2 == 0) ? acc + term : acc - term;
        }
        x[k + d] = acc * pow_int(w, -(d + k));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Float-mode spectral solver. Eigenvalues by Sturm-count bisection on the
// tridiagonal recurrence (oracle-grade, independent of the closed forms),
// optionally polished by a guarded Newton step on chi_red; zero is included
// exactly and the negative half mirrors the positive one. Eigenvectors
// evaluate the xi recurrence bidirectionally toward the classical turning
// point, which keeps both passes in their growing (stable) direction; the
// raw polynomial sums cancel catastrophically in doubles once d w is large.
// ---------------------------------------------------------------------------

struct SpectralResult {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i]
    std::vector<double> residuals;                 // ||(K - lambda) x|| / ||x|| per pair
};

namespace detail {

/// Number of eigenvalues of K(w) strictly below x (LDL^T sign count).
inline long sturm_count_below(long d, double w, double x) {
    const double w2 = w * w;
    const double tiny = 1e-300;
    long count = 0;
    double q = 1.0;
    for (long r = -d; r <= d; ++r) {
        double diff = static_cast<double>(r) - x;
        if (r > -d) diff -= w2 / q;
        if (diff == 0.0) diff = -tiny;
        if (diff < 0.0) ++count;
        q = (std::abs(diff) < tiny) ? std::copysign(tiny, diff) : diff;
    }
    return count;
}

/// Smallest-index isolation: bisect until the interval holding the target
/// eigenvalue reaches a few ulps of the Gershgorin radius.
inline double bisect_eigenvalue(long d, double w, long index, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count_below(d, w, mid) <= index)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> eigenvector_bidirectional(long d, double w, double lambda) {
    const long n = 2 * d + 1;
    std::vector<double> x(n, 0.0);
    const long peak = std::clamp<long>(std::lround(lambda), -d, d);
    // Forward sweep from r = -d up to the peak (growing direction).
    x[0] = 1.0;
    if (peak > -d) {
        x[1] = (lambda + d) / w * x[0];
        for (long r = -d + 1; r < peak; ++r) x[r + d + 1] = ((lambda - r) * x[r + d] - w * x[r + d - 1]) / w;
    }
    // Backward sweep from r = d down to the peak.
    if (peak < d) {
        std::vector<double> u(n, 0.0);
        u[n - 1] = 1.0;
        u[n - 2] = (lambda - d) / w * u[n - 1];
        for (long r = d - 1; r > peak; --r) u[r + d - 1] = ((lambda - r) * u[r + d] - w * u[r + d + 1]) / w;
        // Splice: rescale the backward half to match at the peak.
        const double scale = x[peak + d] / u[peak + d];
        for (long r = peak + 1; r <= d; ++r) x[r + d] = u[r + d] * scale;
    }
    // Normalize to unit 2-norm (scaled to dodge overflow in the squares).
    double amax = 0.0;
    for (double v : x) amax = std::max(amax, std::abs(v));
    double ss = 0.0;
    for (double& v : x) {
        v /= amax;
        ss += v * v;
    }
    const double norm = std::sqrt(ss);
    for (double& v : x) v /= norm;
    if (x[peak + d] < 0.0)
        for (double& v : x) v = -v;
    return x;
}

inline double residual_norm(long d, double w, double lambda, const std::vector<double>& x) {
    double ss = 0.0;
    const long n = 2 * d + 1;
    for (long i = 0; i < n; ++i) {
        double y = (static_cast<double>(i - d) - lambda) * x[i];
        if (i > 0) y += w * x[i - 1];
        if (i + 1 < n) y += w * x[i + 1];
        ss += y * y;
    }
    return std::sqrt(ss);  // x has unit norm
}

}  // namespace detail

inline SpectralResult spectrum_impl(long d, double w, double tol, [[maybe_unused]] bool parallel) {
    if (d < 0) throw std::invalid_argument("spectrum: d must be nonnegative");
    const long n = 2 * d + 1;
    SpectralResult res;
    res.eigenvalues.assign(n, 0.0);
    res.eigenvectors.assign(n, {});
    res.residuals.assign(n, 0.0);

    if (w == 0.0) {
        for (long i = 0; i < n; ++i) {
            res.eigenvalues[i] = static_cast<double>(i - d);
            std::vector<double> e(n, 0.0);
            e[i] = 1.0;
            res.eigenvectors[i] = std::move(e);
        }
        return res;
    }

    const double radius = d + 2.0 * std::abs(w);

    // chi_red and its derivative for the Newton polish; double-precision
    // evaluation of the closed sum is only trustworthy for small d.
    Poly<double> red, red_prime;
    const bool polish = d <= 12;
    if (polish) {
        red = charpoly_closed<double>(d, w);
        red_prime = red.derivative();
    }

    // Positive eigenvalues: indices d+1..2d in ascending order.
    std::vector<double> pos(d, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long j = 1; j <= d; ++j) {
        double lam = detail::bisect_eigenvalue(d, w, d + j, 0.0, radius);
        if (polish) {
            for (int it = 0; it < 3; ++it) {
                const double f = red.eval(lam);
                const double fp = red_prime.eval(lam);
                if (fp == 0.0) break;
                const double next = lam - f / fp;
                if (!(std::abs(next - lam) < 1e-8 * radius)) break;
                if (std::abs(red.eval(next)) >= std::abs(f)) break;
                lam = next;
            }
        }
        pos[j - 1] = lam;
    }

    res.eigenvalues[d] = 0.0;
    for (long j = 1; j <= d; ++j) {
        res.eigenvalues[d + j] = pos[j - 1];
        res.eigenvalues[d - j] = -pos[j - 1];
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < n; ++i) {
        const double lam = res.eigenvalues[i];
        auto vec = detail::eigenvector_bidirectional(d, w, lam);
        res.residuals[i] = detail::residual_norm(d, w, lam, vec);
        res.eigenvectors[i] = std::move(vec);
    }

    const double allowed = tol * radius;
    for (long i = 0; i < n; ++i)
        if (!(res.residuals[i] <= allowed))
            throw ConvergenceError("spectrum: residual " + std::to_string(res.residuals[i]) +
                                   " exceeds tolerance at eigenvalue " + std::to_string(res.eigenvalues[i]));
    return res;
}

/// OpenMP-parallel solver (bisection brackets and eigenpairs are independent).
inline SpectralResult spectrum(long d, double w, double tol = 1e-12) {
    return spectrum_impl(d, w, tol, true);
}

/// Serial reference path, kept for testing and benchmarks; bit-identical to
/// the parallel kernel.
inline SpectralResult spectrum_serial(long d, double w, double tol = 1e-12) {
    return spectrum_impl(d, w, tol, false);
}

}  // namespace fjacobi
