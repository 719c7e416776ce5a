#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fjacobi/combinatorics.hpp"
#include "fjacobi/f_kernel.hpp"

namespace fjacobi {

// ---------------------------------------------------------------------------
// The antisymmetric matrix J(m, n; w), m, n integers, w != 0: the unique
// matrix with J(m, m+1) = 1 whose rows satisfy the Bessel-type difference
// equation  w A(m, n-1) - n A(m, n) + w A(m, n+1) = 0.
//
// Three independent evaluators are provided: the closed sum (j_entry), the
// row recurrence run from the initial data (j_entry_recurrence), and the
// F-functional form valid for 0 <= m < n (j_entry_f). They agree exactly in
// rational mode; the test suites lean on that.
// ---------------------------------------------------------------------------

/// Closed form, valid for all integer m <= n:
///   J(m,n) = sum_s (-1)^s binom(n-s-1, n-m-2s-1) (n-m-s-1)!/s! w^{m-n+2s+1};
/// m > n is resolved through antisymmetry.
template <class S>
S j_entry(long m, long n, const S& w) {
    if (is_zero(w)) throw std::invalid_argument("j_entry: w must be nonzero");
    if (m > n) return -j_entry(n, m, w);
    if (m == n) return S(0);  // empty sum
    S acc(0);
    const long smax = (n - m - 1) / 2;
    S wpow = pow_int(w, m - n + 1);
    const S w2 = w * w;
    for (long s = 0; s <= smax; ++s) {
        // s <= (n-m-1)/2 gives n-m-s-1 >= s, so the factorial ratio is integral.
        const BigInt coeff = binom_z_int(n - s - 1, n - m - 2 * s - 1) * factorial_ratio(n - m - s - 1, s);
        if (coeff != 0) {
            const S term = scalar_traits<S>::from_bigint(coeff) * wpow;
            acc = (s % 2 == 0) ? acc + term : acc - term;
        }
        wpow = wpow * w2;
    }
    return acc;
}

/// Row-recurrence oracle: generates row m from A(m,m) = 0, A(m,m+1) = 1 by
/// iterating the difference equation forward or backward in n.
template <class S>
S j_entry_recurrence(long m, long n, const S& w) {
    if (is_zero(w)) throw std::invalid_argument("j_entry_recurrence: w must be nonzero");
    S at_m(0), at_m1(1);  // A(m, m), A(m, m+1)
    if (n == m) return at_m;
    if (n == m + 1) return at_m1;
    if (n > m + 1) {
        // A(m, j+1) = (j A(m, j) - w A(m, j-1)) / w
        S prev = at_m, cur = at_m1;
        for (long j = m + 1; j < n; ++j) {
            S next = (scalar_traits<S>::from_int(j) * cur - w * prev) / w;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // A(m, j-1) = (j A(m, j) - w A(m, j+1)) / w
    S next = at_m1, cur = at_m;
    for (long j = m; j > n; --j) {
        S prev = (scalar_traits<S>::from_int(j) * cur - w * next) / w;
        next = cur;
        cur = prev;
    }
    return cur;
}

/// F-form for 0 <= m < n:  J(m,n) = (n-1)!/m! w^{m-n+1} F(w/(m+1),...,w/(n-1)).
template <class S>
S j_entry_f(long m, long n, const S& w) {
    if (is_zero(w)) throw std::invalid_argument("j_entry_f: w must be nonzero");
    if (m < 0 || m >= n) throw std::invalid_argument("j_entry_f: requires 0 <= m < n");
    std::vector<S> seq;
    seq.reserve(n - m - 1);
    for (long k = m + 1; k <= n - 1; ++k) seq.push_back(w / scalar_traits<S>::from_int(k));
    return scalar_traits<S>::from_bigint(factorial_ratio(n - 1, m)) * pow_int(w, m - n + 1) * f_finite(seq);
}

/// Memoized table for one fixed w. Each cached row holds a contiguous segment
/// of entries and is extended by one recurrence step per new index, so walks
/// along diagonals cost amortized O(1) per entry. The cache is mutex-guarded;
/// concurrent lookups are safe and results are deterministic.
template <class S>
class JTable {
  public:
    explicit JTable(S w) : w_(std::move(w)) {
        if (is_zero(w_)) throw std::invalid_argument("JTable: w must be nonzero");
    }

    S at(long m, long n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = rows_.try_emplace(m, Row{m, std::deque<S>{S(0), S(1)}});
        Row& row = it->second;
        while (row.hi() < n) {
            const long j = row.hi();
            // A(m, j+1) = (j A(m, j) - w A(m, j-1)) / w
            row.vals.push_back((scalar_traits<S>::from_int(j) * row.vals[row.vals.size() - 1] -
                                w_ * row.vals[row.vals.size() - 2]) /
                               w_);
        }
        while (row.lo > n) {
            const long j = row.lo;
            // A(m, j-1) = (j A(m, j) - w A(m, j+1)) / w
            row.vals.push_front((scalar_traits<S>::from_int(j) * row.vals[0] - w_ * row.vals[1]) / w_);
            --row.lo;
        }
        return row.vals[n - row.lo];
    }

    const S& w() const { return w_; }

  private:
    struct Row {
        long lo;               // column index of vals.front()
        std::deque<S> vals;    // contiguous segment of the row
        long hi() const { return lo + static_cast<long>(vals.size()) - 1; }
    };

    S w_;
    mutable std::map<long, Row> rows_;
    mutable std::mutex mu_;
};

}  // namespace fjacobi
