#pragma once

#include <cstdint>
#include <numeric>

#include "errors.hpp"
#include "factor.hpp"

namespace deaconescu {

// phi(p^k) = p^(k-1) (p - 1), multiplied across the factor list.
// phi(1) == 1 by the empty-product convention.
inline bigint euler_phi(const factorization& f) {
    bigint acc(1);
    for (const prime_power& pp : f.factors) {
        acc *= boost::multiprecision::pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    }
    return acc;
}

// Schemmel totient: s2(p^k) is 0 for p == 2 and p^(k-1) (p - 2) for odd p,
// multiplied across the factor list. Zero exactly for even values;
// s2(1) == 1 by the empty-product convention.
inline bigint schemmel_s2(const factorization& f) {
    bigint acc(1);
    for (const prime_power& pp : f.factors) {
        if (pp.prime == 2) {
            return bigint(0);
        }
        acc *= boost::multiprecision::pow(pp.prime, pp.exponent - 1) * (pp.prime - 2);
    }
    return acc;
}

// Cap for the counting evaluators below; they are linear in n and exist
// as independent cross-checks, not as production evaluation paths.
inline constexpr std::uint64_t counting_cap = 1'000'000;

// phi(n) by direct gcd enumeration over [1, n].
inline std::uint64_t euler_phi_count(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("euler_phi_count: n must be >= 1");
    }
    if (n > counting_cap) {
        throw unsupported_input("euler_phi_count: n exceeds counting_cap");
    }
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x <= n; ++x) {
        if (std::gcd(x, n) == 1) {
            ++count;
        }
    }
    return count;
}

// s2(n) by its counting definition: residues x mod n with x and x + 1
// both coprime to n.
inline std::uint64_t schemmel_s2_count(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("schemmel_s2_count: n must be >= 1");
    }
    if (n > counting_cap) {
        throw unsupported_input("schemmel_s2_count: n exceeds counting_cap");
    }
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (std::gcd(x, n) == 1 && std::gcd(x + 1, n) == 1) {
            ++count;
        }
    }
    return count;
}

}  // namespace deaconescu
