#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fjacobi {

// Expression templates are switched off: these types appear as scalars in
// heavily generic code shared with double/complex instantiations.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Builds a rational from a signed numerator/denominator pair. The underlying
/// type insists on a positive denominator, so the sign is moved up front.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Parses "p", "p/q", or a plain decimal literal ("-0.25", "1e-3") into an
/// exact rational. Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("parse_rational: bad input '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const std::string num(text.substr(0, slash));
        const std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
        try {
            return make_rational(BigInt(num), BigInt(den));
        } catch (const std::runtime_error&) {
            fail();
        }
    }

    // Decimal form: sign, digits, optional fraction, optional exponent.
    std::string_view s = text;
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_digits;
        }
    }
    if (digits.empty()) fail();
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) fail();
        long e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i] - '0');
            ++i;
        }
        exponent = eneg ? -e : e;
    }
    if (i != s.size()) fail();

    // Strip leading zeros: cpp_int would read "025" as octal.
    const auto first = digits.find_first_not_of('0');
    digits = (first == std::string::npos) ? "0" : digits.substr(first);

    BigInt num(digits);
    if (neg) num = -num;
    BigInt den = 1;
    long net = exponent - frac_digits;
    for (long k = 0; k < net; ++k) num *= 10;
    for (long k = 0; k < -net; ++k) den *= 10;
    return make_rational(num, den);
}

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace fjacobi
