#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "primality.hpp"
#include "rational.hpp"
#include "sieve.hpp"

namespace deaconescu {

// For squarefree odd n = p_1 * ... * p_r the divisibility target with
// quotient m reads m * prod (p - 2) = prod (p - 1) - 1. Dividing by
// s2 = prod (p - 2) gives the exact residual
//   prod (p-1)/(p-2) - 1/prod (p-2) - m,
// which is zero precisely when the set solves the quotient-m equation.
inline rational quotient_residual(const std::vector<std::uint64_t>& primes,
                                  const bigint& m) {
    if (primes.empty()) {
        throw std::domain_error("quotient_residual: prime set is empty");
    }
    std::set<std::uint64_t> seen;
    rational ratio(1);
    bigint s2(1);
    for (std::uint64_t p : primes) {
        if (p < 3 || !is_prime(p)) {
            throw std::domain_error("quotient_residual: " + std::to_string(p) +
                                    " is not an odd prime");
        }
        if (!seen.insert(p).second) {
            throw std::domain_error("quotient_residual: duplicate prime " +
                                    std::to_string(p));
        }
        ratio *= make_rational(p - 1, p - 2);
        s2 *= p - 2;
    }
    return ratio - make_rational(1, s2) - rational(m);
}

// Quotient-3 specialization. Entries must be primes 2 mod 3 (so 3 and
// primes 1 mod 3 are rejected); with p = 3k + 2 the residual becomes
// prod (1 + 1/(3k)) - prod 1/(3k) - 3.
inline rational d3_residual(const std::vector<std::uint64_t>& primes) {
    for (std::uint64_t p : primes) {
        if (p % 3 != 2) {
            throw std::domain_error("d3_residual: " + std::to_string(p) +
                                    " is not 2 mod 3");
        }
    }
    return quotient_residual(primes, bigint(3));
}

struct near_miss_candidate {
    std::vector<std::uint64_t> primes;
    unsigned omega = 0;
    bigint m_target;
    bigint n;
    rational residual;
    bigint abs_defect;

    friend bool operator==(const near_miss_candidate&, const near_miss_candidate&) = default;
};

struct near_miss_result {
    bigint m_target;
    unsigned omega_min = 0;
    unsigned omega_max = 0;
    std::size_t beam = 0;
    std::vector<std::uint64_t> pool;
    bool infeasible = false;
    std::vector<near_miss_candidate> candidates;
};

// Primes that survive the structural constraints for quotient m: odd,
// never 1 mod m, and for m = 3 additionally in the residue class 2 so
// the prime 3 itself is excluded.
inline bool admissible_prime(std::uint64_t p, const bigint& m) {
    if (p < 3 || !is_prime(p)) {
        return false;
    }
    if (bigint(p) % m == 1) {
        return false;
    }
    if (m == 3 && p % 3 != 2) {
        return false;
    }
    return true;
}

inline std::vector<std::uint64_t> admissible_pool(std::uint64_t limit, const bigint& m) {
    std::vector<std::uint64_t> pool;
    if (limit < 3) {
        return pool;
    }
    for (std::uint64_t p : sieve_primes(limit).primes) {
        if (admissible_prime(p, m)) {
            pool.push_back(p);
        }
    }
    return pool;
}

// Subset enumeration is exponential in the filtered pool.
inline constexpr std::size_t near_miss_pool_cap = 24;

namespace detail {

struct defect_order {
    bool operator()(const near_miss_candidate& a, const near_miss_candidate& b) const {
        if (a.abs_defect != b.abs_defect) {
            return a.abs_defect < b.abs_defect;
        }
        return a.n < b.n;
    }
};

}  // namespace detail

// Enumerates squarefree products of admissible primes with omega in
// [omega_min, omega_max] and ranks them by |phi(n) - 1 - m * s2(n)|,
// keeping the beam smallest. Exhaustive over the filtered pool: no
// branch is cut on defect, so a zero-defect set cannot be missed.
inline near_miss_result near_miss_search(std::vector<std::uint64_t> pool,
                                         const bigint& m_target,
                                         unsigned omega_min, unsigned omega_max,
                                         std::size_t beam) {
    if (m_target < 3) {
        throw std::domain_error("near_miss_search: quotient target must be >= 3");
    }
    if (omega_min < 1 || omega_max < omega_min) {
        throw std::domain_error("near_miss_search: need 1 <= omega_min <= omega_max");
    }
    if (beam < 1) {
        throw std::domain_error("near_miss_search: beam must be >= 1");
    }
    std::sort(pool.begin(), pool.end());
    if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) {
        throw std::domain_error("near_miss_search: duplicate prime in pool");
    }
    for (std::uint64_t p : pool) {
        if (p < 3 || !is_prime(p)) {
            throw std::domain_error("near_miss_search: " + std::to_string(p) +
                                    " is not an odd prime");
        }
    }

    near_miss_result result;
    result.m_target = m_target;
    result.omega_min = omega_min;
    result.omega_max = omega_max;
    result.beam = beam;
    for (std::uint64_t p : pool) {
        if (admissible_prime(p, m_target)) {
            result.pool.push_back(p);
        }
    }
    if (result.pool.size() > near_miss_pool_cap) {
        throw resource_limit("near_miss_search: filtered pool exceeds " +
                             std::to_string(near_miss_pool_cap) + " primes");
    }
    if (result.pool.size() < omega_min) {
        result.infeasible = true;
        return result;
    }

    // Worst candidates at the back; detail::defect_order keeps the
    // vector sorted ascending so the final candidates need no re-sort.
    std::vector<near_miss_candidate> best;
    std::vector<std::uint64_t> chosen;
    detail::defect_order less;

    auto offer = [&](near_miss_candidate cand) {
        auto pos = std::upper_bound(best.begin(), best.end(), cand, less);
        best.insert(pos, std::move(cand));
        if (best.size() > beam) {
            best.pop_back();
        }
    };

    auto evaluate = [&]() {
        near_miss_candidate cand;
        cand.primes = chosen;
        cand.omega = static_cast<unsigned>(chosen.size());
        cand.m_target = m_target;
        cand.n = 1;
        bigint phi(1);
        bigint s2(1);
        for (std::uint64_t p : chosen) {
            cand.n *= p;
            phi *= p - 1;
            s2 *= p - 2;
        }
        cand.residual = quotient_residual(chosen, m_target);
        cand.abs_defect = abs(phi - 1 - m_target * s2);
        offer(std::move(cand));
    };

    auto dfs = [&](auto&& self, std::size_t next) -> void {
        if (chosen.size() >= omega_min && !chosen.empty()) {
            evaluate();
        }
        if (chosen.size() == omega_max) {
            return;
        }
        std::size_t needed = omega_min > chosen.size() ? omega_min - chosen.size() : 1;
        for (std::size_t i = next; i + needed <= result.pool.size(); ++i) {
            chosen.push_back(result.pool[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);

    result.candidates = std::move(best);
    return result;
}

// Zero-defect subsets only, in ascending (n) order. Used to cross-check
// the filtered search against a brute-force enumeration.
inline std::vector<near_miss_candidate> zero_defect_sets(const near_miss_result& r) {
    std::vector<near_miss_candidate> zeros;
    for (const near_miss_candidate& c : r.candidates) {
        if (c.abs_defect == 0) {
            zeros.push_back(c);
        }
    }
    std::sort(zeros.begin(), zeros.end(),
              [](const near_miss_candidate& a, const near_miss_candidate& b) {
                  return a.n < b.n;
              });
    return zeros;
}

}  // namespace deaconescu
