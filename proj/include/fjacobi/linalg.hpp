#pragma once

#include <stdexcept>
#include <vector>

#include "fjacobi/scalar.hpp"

namespace fjacobi {

template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
Mat<S> mat_identity(long n) {
    Mat<S> m(n, std::vector<S>(n, S(0)));
    for (long i = 0; i < n; ++i) m[i][i] = S(1);
    return m;
}

template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
    const long n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
    Mat<S> c(n, std::vector<S>(q, S(0)));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < p; ++k) {
            if (is_zero(a[i][k])) continue;
            for (long j = 0; j < q; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

template <class S>
std::vector<S> mat_vec(const Mat<S>& a, const std::vector<S>& x) {
    std::vector<S> y(a.size(), S(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] = y[i] + a[i][j] * x[j];
    return y;
}

/// Solves A X = B by Gauss-Jordan elimination; pivots on magnitude so the
/// same code serves exact and floating instantiations. Throws on singular A.
template <class S>
Mat<S> mat_solve(Mat<S> a, Mat<S> b) {
    const long n = a.size();
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        double best = 0;
        for (long r = col; r < n; ++r) {
            const double m = scalar_traits<S>::magnitude(a[r][col]);
            if (!is_zero(a[r][col]) && (piv < 0 || m > best)) {
                piv = r;
                best = m;
            }
        }
        if (piv < 0) throw std::domain_error("mat_solve: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        const S inv = S(1) / a[col][col];
        for (long j = 0; j < n; ++j) a[col][j] = a[col][j] * inv;
        for (long j = 0; j < static_cast<long>(b[col].size()); ++j) b[col][j] = b[col][j] * inv;
        for (long r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            const S f = a[r][col];
            for (long j = 0; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
            for (long j = 0; j < static_cast<long>(b[r].size()); ++j) b[r][j] = b[r][j] - f * b[col][j];
        }
    }
    return b;
}

template <class S>
Mat<S> mat_inverse(const Mat<S>& a) {
    return mat_solve(a, mat_identity<S>(a.size()));
}

}  // namespace fjacobi
