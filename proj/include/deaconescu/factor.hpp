#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "primality.hpp"
#include "rational.hpp"

namespace deaconescu {

struct prime_power {
    bigint prime;
    unsigned exponent = 0;

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

// Canonical prime decomposition: primes strictly ascending, exponents >= 1,
// and value == product of prime^exponent. value == 1 iff factors is empty.
struct factorization {
    bigint value = 1;
    std::vector<prime_power> factors;

    unsigned omega() const { return static_cast<unsigned>(factors.size()); }

    bool squarefree() const {
        return std::all_of(factors.begin(), factors.end(),
                           [](const prime_power& f) { return f.exponent == 1; });
    }

    bool odd() const { return value % 2 != 0; }

    std::optional<bigint> smallest_prime() const {
        if (factors.empty()) {
            return std::nullopt;
        }
        return factors.front().prime;
    }

    friend bool operator==(const factorization&, const factorization&) = default;
};

// Re-multiplies the factor list; the audit counterpart of factorize.
inline bigint reconstruct(const factorization& f) {
    bigint acc(1);
    for (const prime_power& pp : f.factors) {
        acc *= boost::multiprecision::pow(pp.prime, pp.exponent);
    }
    return acc;
}

namespace detail {

// Pollard rho with Floyd cycle detection. Parameters are fixed, so the
// call sequence is reproducible; correctness never depends on the path
// because every factor is certified by is_prime before it is emitted.
inline std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) {
        return 2;
    }
    for (std::uint64_t c = 1;; ++c) {
        auto step = [n, c](std::uint64_t v) {
            std::uint64_t s = mulmod(v, v, n);
            s += c;
            return s >= n ? s - n : s;
        };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) {
                d = n;  // cycle closed without a factor; retry with next c
                break;
            }
            d = std::gcd(diff, n);
        }
        if (d != n) {
            return d;
        }
    }
}

inline void factor_u64_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64_rec(d, out);
    factor_u64_rec(n / d, out);
}

}  // namespace detail

// Full deterministic factorization of any 64-bit integer. Small primes go
// by trial division, the rest by rho with certified prime factors.
inline factorization factorize(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("factorize: 0 has no prime factorization");
    }
    factorization f;
    f.value = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull, 41ull, 43ull,
                            47ull, 53ull, 59ull, 61ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    detail::factor_u64_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) {
            ++j;
        }
        f.factors.push_back({bigint(primes[i]), static_cast<unsigned>(j - i)});
        i = j;
    }
    return f;
}

// Cut-off below which big-integer inputs are still settled exactly by
// trial division (divisors 2, 3, then 6k +- 1 up to this bound).
inline constexpr std::uint64_t big_trial_limit = 1'000'000;

namespace detail {

inline bool fits_u64(const bigint& n) {
    return n >= 0 && n <= bigint(UINT64_MAX);
}

}  // namespace detail

// Factorization of arbitrary-precision input. Word-size values always
// succeed; larger values are trial-divided up to big_trial_limit and the
// call refuses (throws unsupported_input) if a cofactor beyond word size
// remains, rather than ever emitting an uncertified factor.
inline factorization factorize(const bigint& n) {
    if (n <= 0) {
        throw std::domain_error("factorize: input must be positive");
    }
    if (detail::fits_u64(n)) {
        return factorize(static_cast<std::uint64_t>(n));
    }
    bigint rest = n;
    factorization f;
    f.value = n;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) {
            f.factors.push_back({bigint(p), e});
        }
    };
    strip(2);
    strip(3);
    for (std::uint64_t q = 5; q <= big_trial_limit; q += 6) {
        strip(q);
        strip(q + 2);
        if (detail::fits_u64(rest)) {
            break;
        }
    }
    if (rest > 1) {
        if (!detail::fits_u64(rest)) {
            throw unsupported_input(
                "factorize: cofactor exceeds the deterministic word-size range");
        }
        factorization tail = factorize(static_cast<std::uint64_t>(rest));
        f.factors.insert(f.factors.end(), tail.factors.begin(),
                         tail.factors.end());
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const prime_power& a, const prime_power& b) {
                  return a.prime < b.prime;
              });
    return f;
}

// Exact primality for arbitrary-precision input: word-size values use the
// deterministic witness test; larger values are settled only when trial
// division up to big_trial_limit finds a factor, otherwise the call
// refuses instead of guessing.
inline bool is_prime(const bigint& n) {
    if (n < 2) {
        return false;
    }
    if (detail::fits_u64(n)) {
        return is_prime(static_cast<std::uint64_t>(n));
    }
    if (n % 2 == 0 || n % 3 == 0) {
        return false;
    }
    for (std::uint64_t q = 5; q <= big_trial_limit; q += 6) {
        if (n % q == 0 || n % (q + 2) == 0) {
            return false;
        }
    }
    throw unsupported_input(
        "is_prime: input exceeds the deterministic primality range");
}

}  // namespace deaconescu
