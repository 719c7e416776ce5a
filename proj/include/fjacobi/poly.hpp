#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "fjacobi/scalar.hpp"

namespace fjacobi {

enum class Parity { none, even, odd };

/// Dense univariate polynomial with ascending coefficients and optional
/// parity metadata. Trailing zero coefficients are stripped on construction;
/// asserting a parity the coefficients violate throws.
template <class S>
class Poly {
  public:
    Poly() = default;

    explicit Poly(std::vector<S> coeffs, Parity parity = Parity::none)
        : coeffs_(std::move(coeffs)), parity_(parity) {
        strip();
        if (parity_ != Parity::none) validate_parity();
    }

    static Poly zero() { return Poly(); }
    static Poly constant(S c) { return Poly({std::move(c)}); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero_poly() const { return coeffs_.empty(); }
    Parity parity() const { return parity_; }
    const std::vector<S>& coeffs() const { return coeffs_; }

    S coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }

    S eval(const S& z) const {
        S acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return zero();
        std::vector<S> d(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * scalar_traits<S>::from_int(i);
        return Poly(std::move(d));
    }

    /// p(z)/z, exact; requires a vanishing constant term.
    Poly divide_by_z() const {
        if (is_zero_poly()) return zero();
        if (!is_zero(coeffs_[0])) throw std::invalid_argument("divide_by_z: nonzero constant term");
        std::vector<S> q(coeffs_.begin() + 1, coeffs_.end());
        return Poly(std::move(q));
    }

    Poly operator+(const Poly& o) const {
        std::vector<S> c(std::max(coeffs_.size(), o.coeffs_.size()), S(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
        return Poly(std::move(c));
    }

    Poly operator-(const Poly& o) const {
        std::vector<S> c(std::max(coeffs_.size(), o.coeffs_.size()), S(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] - o.coeffs_[i];
        return Poly(std::move(c));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero_poly() || o.is_zero_poly()) return zero();
        std::vector<S> c(coeffs_.size() + o.coeffs_.size() - 1, S(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(c));
    }

    Poly operator*(const S& s) const {
        std::vector<S> c = coeffs_;
        for (auto& v : c) v = v * s;
        return Poly(std::move(c));
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Parity detect_parity() const {
        bool even_ok = true, odd_ok = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i % 2 == 1 && !is_zero(coeffs_[i])) even_ok = false;
            if (i % 2 == 0 && !is_zero(coeffs_[i])) odd_ok = false;
        }
        if (even_ok) return Parity::even;
        if (odd_ok) return Parity::odd;
        return Parity::none;
    }

    /// Re-tags parity, validating coefficients.
    Poly with_parity(Parity p) const {
        return Poly(coeffs_, p);
    }

  private:
    void strip() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    void validate_parity() const {
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            const bool must_vanish = (parity_ == Parity::even) ? (i % 2 == 1) : (i % 2 == 0);
            if (must_vanish && !is_zero(coeffs_[i]))
                throw std::invalid_argument("Poly: coefficient violates declared parity");
        }
    }

    std::vector<S> coeffs_;
    Parity parity_ = Parity::none;
};

/// Exact Newton interpolation through distinct nodes. Lossless over rationals.
template <class S>
Poly<S> interpolate(std::span<const S> xs, std::span<const S> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const size_t n = xs.size();
    if (n == 0) return Poly<S>::zero();
    std::vector<S> dd(ys.begin(), ys.end());
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    Poly<S> p = Poly<S>::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        p = p * Poly<S>({-xs[i], S(1)}) + Poly<S>::constant(dd[i]);
    }
    return p;
}

/// Turns q(u) into q(z^2): an even polynomial in z.
template <class S>
Poly<S> substitute_z_squared(const Poly<S>& q) {
    std::vector<S> c(2 * q.coeffs().size(), S(0));
    if (q.is_zero_poly()) return Poly<S>::zero();
    for (size_t i = 0; i < q.coeffs().size(); ++i) c[2 * i] = q.coeffs()[i];
    return Poly<S>(std::move(c), Parity::even);
}

}  // namespace fjacobi
