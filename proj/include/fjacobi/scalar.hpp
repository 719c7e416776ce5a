#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

#include "fjacobi/rational.hpp"

namespace fjacobi {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Glue that lets the formula templates run unchanged over exact rationals,
/// doubles, complex doubles, and the wide floats used for delicate residual
/// checks. `exact` selects between coefficient-exact identities and
/// tolerance-based ones in generic code.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_bigint(const BigInt& v) { return Rational(v); }
    static double magnitude(const Rational& v) { return std::abs(v.convert_to<double>()); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_int(long long v) { return static_cast<double>(v); }
    static double from_bigint(const BigInt& v) { return v.convert_to<double>(); }
    static double magnitude(double v) { return std::abs(v); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> from_int(long long v) { return {static_cast<double>(v), 0.0}; }
    static std::complex<double> from_bigint(const BigInt& v) { return {v.convert_to<double>(), 0.0}; }
    static double magnitude(const std::complex<double>& v) { return std::abs(v); }
};

// Any other boost.multiprecision floating type (cpp_bin_float etc).
template <class Backend, boost::multiprecision::expression_template_option ET>
struct scalar_traits<boost::multiprecision::number<Backend, ET>> {
    using S = boost::multiprecision::number<Backend, ET>;
    static constexpr bool exact = false;
    static S from_int(long long v) { return S(v); }
    static S from_bigint(const BigInt& v) { return S(v); }
    static double magnitude(const S& v) {
        using std::abs;
        return abs(v).template convert_to<double>();
    }
};

template <class S>
bool is_zero(const S& v) {
    return v == S(0);
}

/// Integer power with negative exponents via division. Exact for rationals.
template <class S>
S pow_int(const S& base, long long e) {
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("pow_int: zero base with negative exponent");
        return S(1) / pow_int(base, -e);
    }
    S acc(1);
    S b = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

}  // namespace fjacobi
