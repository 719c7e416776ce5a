#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fjacobi/f_kernel.hpp"

namespace fjacobi {

// ---------------------------------------------------------------------------
// Convergents of the continued fraction attached to a sequence x:
//   P_0 = 0, P_k = F(x_2..x_k);  Q_k = F(x_1..x_k), Q_0 = 1.
// Both satisfy Y_{k+1} = Y_k - x_k x_{k+1} Y_{k-1}, and P_k/Q_k converges to
// F(Tx)/F(x) whenever the latter is defined and nonzero.
// ---------------------------------------------------------------------------

template <class S>
struct ConvergentPair {
    S p;
    S q;
    long k;
};

/// Convergents for a finite sequence (entries past the end are zero, so the
/// pairs stabilize exactly at k = length).
template <class S>
std::vector<ConvergentPair<S>> convergents(std::span<const S> x, long k_max) {
    std::vector<ConvergentPair<S>> out;
    out.reserve(k_max + 1);
    S p_prev(0), p_cur(1);  // P_0, P_1
    S q_prev(1), q_cur(1);  // Q_0, Q_1
    out.push_back({p_prev, q_prev, 0});
    if (k_max >= 1) out.push_back({p_cur, q_cur, 1});
    for (long k = 1; k + 1 <= k_max; ++k) {
        const S xk = (k <= static_cast<long>(x.size())) ? x[k - 1] : S(0);
        const S xk1 = (k + 1 <= static_cast<long>(x.size())) ? x[k] : S(0);
        const S prod = xk * xk1;
        const S p_next = p_cur - prod * p_prev;
        const S q_next = q_cur - prod * q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        out.push_back({p_cur, q_cur, k + 1});
    }
    return out;
}

template <class S>
std::vector<ConvergentPair<S>> convergents(const std::vector<S>& x, long k_max) {
    return convergents(std::span<const S>(x), k_max);
}

/// Convergents for an infinite sequence (float mode, unrescaled; use
/// cf_limit for long runs).
inline std::vector<ConvergentPair<std::complex<double>>> convergents(const TailSeq& x, long k_max) {
    using C = std::complex<double>;
    std::vector<ConvergentPair<C>> out;
    out.reserve(k_max + 1);
    C p_prev(0.0), p_cur(1.0);
    C q_prev(1.0), q_cur(1.0);
    out.push_back({p_prev, q_prev, 0});
    if (k_max >= 1) out.push_back({p_cur, q_cur, 1});
    C xk = x.term(1);
    for (long k = 1; k + 1 <= k_max; ++k) {
        const C xk1 = x.term(k + 1);
        const C prod = xk * xk1;
        const C p_next = p_cur - prod * p_prev;
        const C q_next = q_cur - prod * q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        xk = xk1;
        out.push_back({p_cur, q_cur, k + 1});
    }
    return out;
}

struct CfLimitResult {
    std::complex<double> value;
    long k;
};

/// Limit of P_k/Q_k for a TailSeq, stopping when successive ratios differ by
/// at most tol. Both sequences are rescaled every 50 steps (the ratio is
/// invariant) to keep the recursion inside double range. A vanishing Q at the
/// stopping index signals F(x) ~ 0, outside the identity's hypothesis.
inline CfLimitResult cf_limit(const TailSeq& x, double tol, long k_max = 100000) {
    using C = std::complex<double>;
    C p_prev(0.0), p_cur(1.0);
    C q_prev(1.0), q_cur(1.0);
    C ratio_prev(0.0);
    bool have_prev_ratio = false;
    C xk_val = x.term(1);
    for (long k = 1; k <= k_max; ++k) {
        const C xk1 = x.term(k + 1);
        const C prod = xk_val * xk1;
        const C p_next = p_cur - prod * p_prev;
        const C q_next = q_cur - prod * q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        xk_val = xk1;

        if (k % 50 == 0) {
            const double m = std::max({std::abs(p_cur), std::abs(q_cur), std::abs(p_prev), std::abs(q_prev)});
            if (m > 0) {
                p_prev /= m;
                p_cur /= m;
                q_prev /= m;
                q_cur /= m;
            }
        }

        const double qmag = std::abs(q_cur);
        const double scale = std::max({std::abs(p_cur), qmag, 1e-300});
        if (qmag <= 1e-14 * scale)
            throw ConvergenceError("cf_limit: vanishing denominator (F(x) ~ 0)");
        const C ratio = p_cur / q_cur;
        if (have_prev_ratio && std::abs(ratio - ratio_prev) <= tol) return {ratio, k + 1};
        ratio_prev = ratio;
        have_prev_ratio = true;
    }
    throw ConvergenceError("cf_limit: no convergence within k_max");
}

}  // namespace fjacobi
