#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"

namespace deaconescu {

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

}  // namespace detail

// All primes <= limit, ascending. nth() is 1-based: nth(1) == 2.
struct prime_table {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    bool contains(std::uint64_t n) const {
        return std::binary_search(primes.begin(), primes.end(), n);
    }

    std::uint64_t nth(std::size_t j) const {
        if (j == 0 || j > primes.size()) {
            throw std::out_of_range("prime_table::nth: no such index");
        }
        return primes[j - 1];
    }
};

// Cap on the sieve bound; the bit sieve at this limit takes ~125 MB.
inline constexpr std::uint64_t sieve_limit_cap = 1'000'000'000;

inline prime_table sieve_primes(std::uint64_t limit) {
    if (limit < 2) {
        throw std::domain_error("sieve_primes: limit must be >= 2");
    }
    if (limit > sieve_limit_cap) {
        throw resource_limit("sieve_primes: limit exceeds sieve_limit_cap");
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
    }
    prime_table t;
    t.limit = limit;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            t.primes.push_back(i);
        }
    }
    return t;
}

// j-th prime, 1-based. Sieves up to a Rosser-style upper bound and grows
// it in the (never observed) case the bound falls short.
inline std::uint64_t nth_prime(std::size_t j) {
    if (j == 0) {
        throw std::domain_error("nth_prime: index must be >= 1");
    }
    std::uint64_t bound = 15;
    if (j >= 6) {
        double x = static_cast<double>(j);
        bound = static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 2;
    }
    for (;;) {
        prime_table t = sieve_primes(bound);
        if (t.primes.size() >= j) {
            return t.primes[j - 1];
        }
        bound *= 2;
    }
}

// Cap on segment width: three u64 scratch arrays per worker plus the
// table itself must stay well inside the memory budget.
inline constexpr std::uint64_t spf_segment_cap = 1u << 25;

// Smallest prime factor of every n in [lo, hi]. base_primes are the
// primes <= sqrt(hi) used to build the table; they are retained so that
// a factorization started from the table can be completed once the
// quotient drops below lo.
struct spf_segment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> spf;
    std::vector<std::uint64_t> base_primes;

    std::uint64_t smallest_factor(std::uint64_t n) const {
        if (n < lo || n > hi) {
            throw std::out_of_range("spf_segment: value outside segment");
        }
        return spf[n - lo];
    }
};

inline spf_segment spf_sieve(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2 || lo > hi) {
        throw std::domain_error("spf_sieve: need 2 <= lo <= hi");
    }
    if (hi - lo + 1 > spf_segment_cap) {
        throw resource_limit("spf_sieve: segment exceeds spf_segment_cap");
    }
    spf_segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.spf.assign(hi - lo + 1, 0);
    std::uint64_t root = std::max<std::uint64_t>(detail::isqrt_u64(hi), 2);
    seg.base_primes = sieve_primes(root).primes;
    for (std::uint64_t p : seg.base_primes) {
        std::uint64_t start = ((lo + p - 1) / p) * p;
        for (std::uint64_t m = start; m <= hi;) {
            if (seg.spf[m - lo] == 0) {
                seg.spf[m - lo] = p;  // primes ascend, so first mark wins
            }
            if (m > hi - p) {
                break;
            }
            m += p;
        }
    }
    for (std::uint64_t i = 0; i <= hi - lo; ++i) {
        if (seg.spf[i] == 0) {
            seg.spf[i] = lo + i;  // untouched by any base prime: n is prime
        }
    }
    return seg;
}

// Factorizes a segment element by repeated smallest-factor division,
// switching to the retained base primes once the quotient leaves the
// segment. Matches factorize() exactly; the sieve path just avoids
// per-element trial division for the leading factor.
inline factorization factorize_in(const spf_segment& seg, std::uint64_t n) {
    if (n < seg.lo || n > seg.hi) {
        throw std::out_of_range("factorize_in: value outside segment");
    }
    std::uint64_t rest = n;
    std::vector<std::uint64_t> primes;
    while (rest > 1 && rest >= seg.lo && rest <= seg.hi) {
        std::uint64_t p = seg.spf[rest - seg.lo];
        while (rest % p == 0) {
            primes.push_back(p);
            rest /= p;
        }
    }
    if (rest > 1) {
        for (std::uint64_t p : seg.base_primes) {
            if (p * p > rest) {
                break;
            }
            while (rest % p == 0) {
                primes.push_back(p);
                rest /= p;
            }
        }
        if (rest > 1) {
            primes.push_back(rest);  // prime: no base prime <= sqrt divides it
        }
    }
    std::sort(primes.begin(), primes.end());
    factorization f;
    f.value = n;
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

}  // namespace deaconescu
