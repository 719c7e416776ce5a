#pragma once

#include <stdexcept>

#include "fjacobi/scalar.hpp"

namespace fjacobi {

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt acc = 1;
    for (long k = 2; k <= n; ++k) acc *= k;
    return acc;
}

/// a!/b! for a >= b >= 0, kept as a product so no large intermediates appear.
inline BigInt factorial_ratio(long a, long b) {
    if (a < b || b < 0) throw std::invalid_argument("factorial_ratio: requires a >= b >= 0");
    BigInt acc = 1;
    for (long k = b + 1; k <= a; ++k) acc *= k;
    return acc;
}

/// Newton symbol binom(z, n) = z(z-1)...(z-n+1)/n! for arbitrary scalar z.
/// For integer z in [0, n-1] the product hits zero, giving the standard value.
template <class S>
S newton_binom(const S& z, long n) {
    if (n < 0) throw std::invalid_argument("newton_binom: negative lower index");
    S prod(1);
    for (long i = 0; i < n; ++i) prod = prod * (z - scalar_traits<S>::from_int(i));
    return prod / scalar_traits<S>::from_bigint(factorial(n));
}

inline BigInt binom_int(long n, long k) {
    if (k < 0) return 0;
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

/// Newton symbol with integer (possibly negative) upper argument; the product
/// of k consecutive integers is divisible by k!, so this is exact.
inline BigInt binom_z_int(long z, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long i = 0; i < k; ++i) num *= (z - i);
    return num / factorial(k);
}

/// Gamma(z+a)/Gamma(z+b) as the finite product prod_{j=b}^{a-1} (z+j).
/// Well defined at every z, including nonpositive integers; requires a >= b.
template <class S>
S gamma_ratio(const S& z, long a, long b) {
    if (a < b) throw std::invalid_argument("gamma_ratio: requires a >= b");
    S prod(1);
    for (long j = b; j < a; ++j) prod = prod * (z + scalar_traits<S>::from_int(j));
    return prod;
}

}  // namespace fjacobi
