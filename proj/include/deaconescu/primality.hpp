#pragma once

#include <cstdint>

namespace deaconescu {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1u;
    }
    return acc;
}

// n - 1 = d * 2^s with d odd. Returns true when a leaves n probably prime.
inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a,
                                  std::uint64_t d, int s) {
    a %= n;
    if (a == 0) {
        return true;
    }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Deterministic for every 64-bit input: this witness set is known to be
// exhaustive below 2^64, so the answer is exact, not probabilistic.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull,
                            9780504ull, 1795265022ull}) {
        if (!detail::strong_probable_prime(n, a, d, s)) {
            return false;
        }
    }
    return true;
}

}  // namespace deaconescu
