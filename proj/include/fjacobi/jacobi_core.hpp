#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "fjacobi/f_kernel.hpp"
#include "fjacobi/poly.hpp"

namespace fjacobi {

/// Symmetric tridiagonal matrix. Centered indexing views the rows/columns as
/// -d..d and requires odd dimension; zero-based is the plain 1..n view.
template <class S>
struct JacobiMatrix {
    std::vector<S> diag;     // n entries
    std::vector<S> offdiag;  // n-1 entries
    bool centered = false;

    JacobiMatrix(std::vector<S> diag_, std::vector<S> offdiag_, bool centered_ = false)
        : diag(std::move(diag_)), offdiag(std::move(offdiag_)), centered(centered_) {
        if (diag.empty()) throw std::invalid_argument("JacobiMatrix: empty diagonal");
        if (offdiag.size() + 1 != diag.size()) throw std::invalid_argument("JacobiMatrix: offdiagonal size mismatch");
        if (centered && diag.size() % 2 == 0)
            throw std::invalid_argument("JacobiMatrix: centered indexing requires odd dimension");
    }

    static JacobiMatrix constant_offdiag(std::vector<S> diag_, const S& w, bool centered_ = false) {
        std::vector<S> off(diag_.empty() ? 0 : diag_.size() - 1, w);
        return JacobiMatrix(std::move(diag_), std::move(off), centered_);
    }

    long dim() const { return static_cast<long>(diag.size()); }
    long half() const { return (dim() - 1) / 2; }

    /// Diagonal entry at centered index k in [-d, d].
    const S& lambda(long k) const { return diag[k + half()]; }

    std::vector<S> apply(std::span<const S> x) const {
        const long n = dim();
        if (static_cast<long>(x.size()) != n) throw std::invalid_argument("JacobiMatrix::apply: size mismatch");
        std::vector<S> y(n, S(0));
        for (long i = 0; i < n; ++i) {
            y[i] = diag[i] * x[i];
            if (i > 0) y[i] = y[i] + offdiag[i - 1] * x[i - 1];
            if (i + 1 < n) y[i] = y[i] + offdiag[i] * x[i + 1];
        }
        return y;
    }
};

/// det(J - shift I) by the three-term principal-minor recurrence
///   D_k = (lambda_k - shift) D_{k-1} - w_{k-1}^2 D_{k-2}.
/// Independent of every closed-form expression here; serves as the oracle.
template <class S>
S det_oracle(const JacobiMatrix<S>& j, const S& shift) {
    S prev2(1), prev1(1);
    for (long k = 0; k < j.dim(); ++k) {
        S cur = (j.diag[k] - shift) * prev1;
        if (k > 0) cur = cur - j.offdiag[k - 1] * j.offdiag[k - 1] * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

/// det(J - zI) as a polynomial in z, same recurrence run over Poly.
template <class S>
Poly<S> charpoly_oracle(const JacobiMatrix<S>& j) {
    const Poly<S> neg_z({S(0), S(-1)});
    Poly<S> prev2 = Poly<S>::constant(S(1));
    Poly<S> prev1 = prev2;
    for (long k = 0; k < j.dim(); ++k) {
        Poly<S> cur = (Poly<S>::constant(j.diag[k]) + neg_z) * prev1;
        if (k > 0) cur = cur - prev2 * (j.offdiag[k - 1] * j.offdiag[k - 1]);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

/// Determinant of diag(y) + w E_+ + w E_- for y indexed -d..d, by the
/// three-term F-product formula; hypothesis: prod_{k=1}^d y_k y_{-k} != 0.
template <class S>
S det_constant_offdiag(std::span<const S> y, const S& w) {
    if (y.size() % 2 == 0 || y.size() < 3)
        throw std::invalid_argument("det_constant_offdiag: needs odd dimension 2d+1 with d >= 1");
    const long d = (static_cast<long>(y.size()) - 1) / 2;
    auto at = [&](long k) -> const S& { return y[k + d]; };

    S prod(1);
    for (long k = 1; k <= d; ++k) prod = prod * at(k) * at(-k);
    if (is_zero(prod))
        throw std::invalid_argument("det_constant_offdiag: formula hypothesis prod y_k y_{-k} != 0 violated");

    auto ratio_seq = [&](long from, long sign) {
        std::vector<S> seq;
        for (long k = from; k <= d; ++k) seq.push_back(w / at(sign * k));
        return seq;
    };
    const S f_pos1 = f_finite(ratio_seq(1, +1));
    const S f_neg1 = f_finite(ratio_seq(1, -1));
    const S f_pos2 = f_finite(ratio_seq(2, +1));
    const S f_neg2 = f_finite(ratio_seq(2, -1));

    const S bracket = at(0) * f_pos1 * f_neg1 - (w * w / at(1)) * f_pos2 * f_neg1 - (w * w / at(-1)) * f_pos1 * f_neg2;
    return prod * bracket;
}

/// G Jtilde G decomposition: gamma_1 = 1, gamma_{k+1} = w_k / gamma_k,
/// lambda~_k = lambda_k / gamma_k^2, all off-diagonals of Jtilde equal 1.
template <class S>
struct NormalizedJacobi {
    std::vector<S> gammas;
    JacobiMatrix<S> jtilde;
};

template <class S>
NormalizedJacobi<S> normalize(const JacobiMatrix<S>& j) {
    for (const S& w : j.offdiag)
        if (is_zero(w)) throw std::invalid_argument("normalize: zero off-diagonal entry");
    std::vector<S> gammas(j.dim());
    gammas[0] = S(1);
    for (long k = 1; k < j.dim(); ++k) gammas[k] = j.offdiag[k - 1] / gammas[k - 1];
    std::vector<S> dtilde(j.dim());
    for (long k = 0; k < j.dim(); ++k) dtilde[k] = j.diag[k] / (gammas[k] * gammas[k]);
    return {std::move(gammas), JacobiMatrix<S>::constant_offdiag(std::move(dtilde), S(1), j.centered)};
}

// ---------------------------------------------------------------------------
// Antisymmetric diagonal (lambda_{-k} = -lambda_k, lambda_0 = 0): the
// characteristic function is odd, so chi_red(z) = (-1)^{d+1} det(K - z)/z is
// an even polynomial of degree 2d, and zero is always an eigenvalue.
// ---------------------------------------------------------------------------

/// chi_red evaluated at a point via the F-product expansion. z must avoid
/// +-lambda_k (the F arguments divide by lambda_k -+ z).
template <class S>
S charpoly_antisym_at(std::span<const S> lambda_pos, const S& w, const S& z) {
    const long d = static_cast<long>(lambda_pos.size());
    // Suffix values F(u_j..u_d) and F(v_j..v_d) for u_k = w/(lambda_k - z),
    // v_k = w/(lambda_k + z), built right-to-left by the three-term rule.
    std::vector<S> u(d), v(d);
    for (long k = 0; k < d; ++k) {
        u[k] = w / (lambda_pos[k] - z);
        v[k] = w / (lambda_pos[k] + z);
    }
    std::vector<S> fu(d + 2, S(1)), fv(d + 2, S(1));  // fu[j] = F(u_{j+1}..u_d), 0-based tail
    for (long j = d - 2; j >= 0; --j) {
        fu[j] = fu[j + 1] - u[j] * u[j + 1] * fu[j + 2];
        fv[j] = fv[j + 1] - v[j] * v[j + 1] * fv[j + 2];
    }
    // Suffix products prod_{k=j}^{d}(lambda_k^2 - z^2), 1-based j.
    std::vector<S> suffix(d + 2, S(1));
    for (long j = d; j >= 1; --j)
        suffix[j] = suffix[j + 1] * (lambda_pos[j - 1] * lambda_pos[j - 1] - z * z);

    S acc = suffix[1] * fu[0] * fv[0];
    S wpow = S(1);
    for (long j = 1; j <= d; ++j) {
        wpow = wpow * w * w;
        const S ftail_u = (j < d) ? fu[j] : S(1);
        const S ftail_v = (j < d) ? fv[j] : S(1);
        acc = acc + S(2) * wpow * suffix[j + 1] * ftail_u * ftail_v;
    }
    return acc;
}

namespace detail {

/// Interpolation nodes z = odd/2 skipping any collision with +-lambda_k.
template <class S>
std::vector<S> antisym_nodes(std::span<const S> lambda_pos, size_t count) {
    std::vector<S> nodes;
    const S two = scalar_traits<S>::from_int(2);
    long num = 1;
    while (nodes.size() < count) {
        S z = scalar_traits<S>::from_int(num) / two;
        bool clash = false;
        for (const S& l : lambda_pos)
            if (l == z || l == -z) clash = true;
        if (!clash) nodes.push_back(z);
        num += 2;
    }
    return nodes;
}

}  // namespace detail

/// chi_red as an even polynomial of degree 2d, assembled by exact
/// interpolation in u = z^2 at d+1 pole-free nodes (degree and parity are
/// known a priori, so interpolation is lossless).
template <class S>
Poly<S> charpoly_antisym(std::span<const S> lambda_pos, const S& w) {
    const long d = static_cast<long>(lambda_pos.size());
    const auto nodes = detail::antisym_nodes(lambda_pos, d + 1);
    std::vector<S> us(d + 1), vals(d + 1);
    for (long i = 0; i <= d; ++i) {
        us[i] = nodes[i] * nodes[i];
        vals[i] = charpoly_antisym_at(lambda_pos, w, nodes[i]);
    }
    const Poly<S> q = interpolate(std::span<const S>(us), std::span<const S>(vals));
    return substitute_z_squared(q);
}

/// Kernel vector of diag(lambda) + w E_+ + w E_-:
///   theta_k = (-1)^k w^k (prod_{j>k} lambda_j) F(w/lambda_{k+1},...,w/lambda_d),
///   theta_{-k} = (-1)^k theta_k.
/// The product-times-F factor is computed by the cleared-denominator
/// recurrence R_t = lambda_t R_{t+1} - w^2 R_{t+2}, which is polynomial in
/// the lambdas; zero entries need no special casing. theta_d = (-1)^d w^d.
template <class S>
std::vector<S> kernel_vector_antisym(std::span<const S> lambda_pos, const S& w) {
    const long d = static_cast<long>(lambda_pos.size());
    std::vector<S> r(d + 3, S(0));  // r[t] = prod_{j=t}^{d} lambda_j * F(w/lambda_t..w/lambda_d), 1-based t
    r[d + 1] = S(1);
    for (long t = d; t >= 1; --t) r[t] = lambda_pos[t - 1] * r[t + 1] - w * w * r[t + 2];

    std::vector<S> theta(2 * d + 1, S(0));
    auto set = [&](long k, const S& val) { theta[k + d] = val; };
    S wpow(1);
    for (long k = 0; k <= d; ++k) {
        const S val = (k % 2 == 0) ? wpow * r[k + 1] : -(wpow * r[k + 1]);
        set(k, val);
        set(-k, (k % 2 == 0) ? val : -val);
        wpow = wpow * w;
    }
    return theta;
}

}  // namespace fjacobi
