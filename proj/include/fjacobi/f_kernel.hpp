#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "fjacobi/scalar.hpp"

namespace fjacobi {

// ---------------------------------------------------------------------------
// The functional F on finite and infinite sequences.
//
// On a finite sequence (x_1, ..., x_n), F is the alternating sum over index
// tuples with gaps >= 2 of products x_k x_{k+1}; it satisfies the three-term
// recursions
//     F(x_1..x_n) = F(x_2..x_n) - x_1 x_2 F(x_3..x_n)
//     F(x_1..x_n) = F(x_1..x_{n-1}) - x_{n-1} x_n F(x_1..x_{n-2})
// with F(empty) = F(x_1) = 1. The backward form is the canonical O(n)
// evaluation path here; the exponential-support direct sum lives in
// reference.hpp as a test oracle only.
// ---------------------------------------------------------------------------

template <class S>
S f_finite(std::span<const S> x) {
    S prev2(1);  // F of the empty prefix
    if (x.empty()) return prev2;
    S prev1(1);  // F(x_1)
    for (size_t k = 1; k < x.size(); ++k) {
        S cur = prev1 - x[k - 1] * x[k] * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

template <class S>
S f_finite(const std::vector<S>& x) {
    return f_finite(std::span<const S>(x));
}

/// Left truncation T^n: k -> x_{k+n}.
template <class S>
std::vector<S> truncate_left(const std::vector<S>& x, size_t n) {
    if (n >= x.size()) return {};
    return std::vector<S>(x.begin() + n, x.end());
}

/// Split evaluation
///   F(x) = F(x_1..x_k) F(T^k x) - F(x_1..x_{k-1}) x_k x_{k+1} F(T^{k+1} x),
/// valid for 1 <= k < n. Equals f_finite exactly; exercised as an identity.
template <class S>
S f_split(std::span<const S> x, size_t k) {
    if (k < 1 || k >= x.size()) throw std::invalid_argument("f_split: k out of range");
    const auto head_k = x.subspan(0, k);
    const auto head_k1 = x.subspan(0, k - 1);
    const auto tail_k = x.subspan(k);
    const auto tail_k1 = x.subspan(k + 1);
    return f_finite(head_k) * f_finite(tail_k) - f_finite(head_k1) * x[k - 1] * x[k] * f_finite(tail_k1);
}

// ---------------------------------------------------------------------------
// Infinite sequences. A TailSeq carries a generator k -> x_k (k >= 1) and a
// certified bound N -> upper bound on sum_{k>=N} |x_k x_{k+1}|, nonincreasing
// in N; a finite bound at N=1 certifies membership in the domain of F.
// ---------------------------------------------------------------------------

struct TailSeq {
    std::function<std::complex<double>(long)> term;   // k >= 1
    std::function<double(long)> pair_tail_bound;      // N >= 1
};

/// T^n on an infinite sequence: shift the generator and the tail bound.
inline TailSeq truncate_left(const TailSeq& x, long n) {
    return {[x, n](long k) { return x.term(k + n); },
            [x, n](long N) { return x.pair_tail_bound(N + n); }};
}

struct FInfiniteResult {
    std::complex<double> value;
    double error_bound;
    long terms_used;
};

/// Evaluates F on a TailSeq by truncation at the first N whose certified
/// remainder bound exp(S) * bound(N) falls below tol, where S = bound(1).
/// The bound is a conservative consequence of the absolute-convergence
/// majorant (each m-fold term with one index past N contributes at most
/// S^{m-1}/(m-1)! * bound(N)); it is validated empirically in the tests.
inline FInfiniteResult f_infinite(const TailSeq& x, double tol, long max_n = 4'000'000) {
    if (!(tol >= 0)) throw std::invalid_argument("f_infinite: negative tolerance");
    const double total = x.pair_tail_bound(1);
    if (!std::isfinite(total)) throw std::invalid_argument("f_infinite: sequence not certified summable");
    const double blowup = std::exp(total);

    long n = 8;
    while (blowup * x.pair_tail_bound(n) > tol) {
        if (n >= max_n)
            throw ConvergenceError("f_infinite: tolerance unreachable within max_n terms");
        n = std::min(max_n, n * 2);
    }

    // Backward recursion streamed over the head x_1..x_n.
    std::complex<double> prev2(1.0), prev1(1.0);
    std::complex<double> xk_prev = x.term(1);
    for (long k = 2; k <= n; ++k) {
        const std::complex<double> xk = x.term(k);
        const std::complex<double> cur = prev1 - xk_prev * xk * prev2;
        prev2 = prev1;
        prev1 = cur;
        xk_prev = xk;
    }
    return {prev1, blowup * x.pair_tail_bound(n), n};
}

/// TailSeq for a geometric sequence x_k = t^{k-1} w, |t| < 1; the pair tail
/// sum is an explicit geometric bound.
inline TailSeq geometric_tail(std::complex<double> t, std::complex<double> w) {
    const double at = std::abs(t);
    if (at >= 1.0) throw std::invalid_argument("geometric_tail: requires |t| < 1");
    const double aw = std::abs(w);
    auto term = [t, w](long k) {
        if (t == std::complex<double>(0.0)) return k == 1 ? w : std::complex<double>(0.0);
        return std::pow(t, static_cast<double>(k - 1)) * w;
    };
    auto bound = [at, aw](long N) {
        // sum_{k>=N} |t|^{2k-1} |w|^2 = |w|^2 |t|^{2N-1} / (1 - |t|^2)
        if (at == 0.0) return 0.0;  // all pair products vanish
        return aw * aw * std::pow(at, 2.0 * N - 1.0) / (1.0 - at * at);
    };
    return {term, bound};
}

/// TailSeq for the Bessel-type sequence x_k = w/(nu+k); the pair tail
/// telescopes to |w|^2/(k0 - |nu|) past k0 > |nu| + 1.
inline TailSeq bessel_tailseq(std::complex<double> nu, std::complex<double> w) {
    const double anu = std::abs(nu);
    const double aw2 = std::norm(w);
    auto term = [nu, w](long k) { return w / (nu + static_cast<double>(k)); };
    auto bound = [nu, anu, aw2](long N) {
        const long k0 = std::max<long>(N, static_cast<long>(std::floor(anu)) + 2);
        double s = aw2 / (k0 - anu);
        for (long k = N; k < k0; ++k) {
            const double a = std::abs(nu + static_cast<double>(k));
            const double b = std::abs(nu + static_cast<double>(k + 1));
            if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
            s += aw2 / (a * b);
        }
        return s;
    };
    return {term, bound};
}

}  // namespace fjacobi
