#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace deaconescu {

using bigint = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with a positive denominator.
// Comparisons go through the backend's cross-multiplication, never
// through floating point.
using rational = boost::multiprecision::cpp_rational;

// The backend rejects negative denominators outright, so sign fixup
// happens here. den == 0 is a domain error.
inline rational make_rational(bigint num, bigint den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return rational(std::move(num), std::move(den));
}

// Binary exponentiation so intermediate reductions stay cheap.
inline rational rational_pow(rational base, unsigned exp) {
    rational acc(1);
    while (exp != 0) {
        if (exp & 1u) {
            acc *= base;
        }
        exp >>= 1u;
        if (exp != 0) {
            base *= base;
        }
    }
    return acc;
}

inline std::string fraction_string(const rational& q) {
    std::string s = numerator(q).str();
    s += '/';
    s += denominator(q).str();
    return s;
}

// Strict base-10 parse: optional leading '-', then digits only. The
// cpp_int string constructor would also accept hex/octal prefixes,
// which CLI inputs must not.
inline bigint parse_decimal(std::string_view text) {
    std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (i == text.size()) {
        throw std::invalid_argument("parse_decimal: empty integer literal");
    }
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw std::invalid_argument("parse_decimal: not a decimal integer: '" +
                                        std::string(text) + "'");
        }
    }
    return bigint(std::string(text));
}

}  // namespace deaconescu
