#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "factor.hpp"
#include "totient.hpp"

namespace deaconescu {

// Necessary conditions a Deaconescu number would have to satisfy. Listing
// which of them an n violates is how a profile explains that n cannot be
// one. The identifiers are a fixed, machine-readable vocabulary.
enum class constraint {
    even,
    not_squarefree,
    omega_lt_7,
    omega_lt_17,
    le_bound_5_86e22,
    lemma1_fail,
    lemma2_fail,
    d3_prime_class_fail,
    d3_omega_lt_48,
    d3_divisible_by_3,
};

inline constexpr std::array<std::string_view, 10> constraint_names = {
    "even",
    "not_squarefree",
    "omega_lt_7",
    "omega_lt_17",
    "le_bound_5_86e22",
    "lemma1_fail",
    "lemma2_fail",
    "d3_prime_class_fail",
    "d3_omega_lt_48",
    "d3_divisible_by_3",
};

inline std::string_view to_string(constraint c) {
    return constraint_names[static_cast<std::size_t>(c)];
}

// A Deaconescu number must exceed 5.86 * 10^22, held exactly as 586 * 10^20.
inline const bigint& deaconescu_lower_bound() {
    static const bigint bound = bigint(586) * boost::multiprecision::pow(bigint(10), 20);
    return bound;
}

// s2(n) | phi(n) - 1, under the convention that 0 divides only 0. Even
// n >= 4 therefore never satisfies the condition (s2 == 0, phi - 1 >= 1).
inline bool condition_holds(const factorization& f) {
    bigint s2 = schemmel_s2(f);
    bigint target = euler_phi(f) - 1;
    if (s2 == 0) {
        return target == 0;
    }
    return target % s2 == 0;
}

inline bool is_composite(const factorization& f) {
    return f.value > 1 && !(f.omega() == 1 && f.factors.front().exponent == 1);
}

// Deaconescu number: composite n >= 4 with s2(n) | phi(n) - 1. Conjectured
// not to exist; every known satisfier of the divisibility is prime.
inline bool is_deaconescu(const factorization& f) {
    return f.value >= 4 && is_composite(f) && condition_holds(f);
}

// The quotient M = (phi(n) - 1) / s2(n) when the divisibility holds with
// s2 >= 1 and a positive quotient. n = 1 yields quotient 0 and is mapped
// to "absent", since M ranges over positive integers.
inline std::optional<bigint> m_ratio(const factorization& f) {
    bigint s2 = schemmel_s2(f);
    if (s2 == 0) {
        return std::nullopt;
    }
    bigint target = euler_phi(f) - 1;
    if (target <= 0 || target % s2 != 0) {
        return std::nullopt;
    }
    return target / s2;
}

// Smallest prime factor congruent to 1 mod m, if any. A member of D_M
// can have no such factor. For m == 1 every prime qualifies (x mod 1 is
// always 0, and 1 mod 1 is 0 too), so the smallest factor comes back;
// the check is only meaningful for m >= 3 and callers apply it there.
inline std::optional<bigint> lemma2_violation(const factorization& f, const bigint& m) {
    if (m < 1) {
        throw std::domain_error("lemma2_violation: modulus must be >= 1");
    }
    for (const prime_power& pp : f.factors) {
        if (pp.prime % m == 1 % m) {
            return pp.prime;
        }
    }
    return std::nullopt;
}

// omega(n) >= smallest prime divisor. A necessary condition for a
// Deaconescu number whose prime divisors are all >= 11; meaningless for
// other inputs, which callers are expected to screen out.
inline bool lemma1_check(const factorization& f) {
    if (f.factors.empty()) {
        return true;
    }
    return bigint(f.omega()) >= f.factors.front().prime;
}

struct structural_profile {
    bigint n;
    bool composite = false;
    bool odd = false;
    bool squarefree = false;
    unsigned omega = 0;
    std::optional<bigint> smallest_prime;
    bool condition = false;
    std::optional<bigint> m;
    bool deaconescu = false;
    bigint phi;
    bigint s2;
    std::vector<constraint> violated;
    factorization factors;
};

// Full structural report for n. violated lists every necessary condition
// the (composite) candidate fails; primes and 1 get an empty list since
// they are outside the definition to begin with.
inline structural_profile profile(const factorization& f) {
    structural_profile p;
    p.n = f.value;
    p.composite = is_composite(f);
    p.odd = f.odd();
    p.squarefree = f.squarefree();
    p.omega = f.omega();
    p.smallest_prime = f.smallest_prime();
    p.phi = euler_phi(f);
    p.s2 = schemmel_s2(f);
    p.condition = condition_holds(f);
    p.m = m_ratio(f);
    p.deaconescu = is_deaconescu(f);
    p.factors = f;

    if (p.composite) {
        auto violate = [&p](constraint c) { p.violated.push_back(c); };
        if (!p.odd) {
            violate(constraint::even);
        }
        if (!p.squarefree) {
            violate(constraint::not_squarefree);
        }
        if (p.omega < 7) {
            violate(constraint::omega_lt_7);
        }
        if (p.omega < 17) {
            violate(constraint::omega_lt_17);
        }
        if (p.n <= deaconescu_lower_bound()) {
            violate(constraint::le_bound_5_86e22);
        }
        bool all_ge_11 = p.odd && p.squarefree && p.smallest_prime &&
                         *p.smallest_prime >= 11;
        if (all_ge_11 && !lemma1_check(f)) {
            violate(constraint::lemma1_fail);
        }
        if (p.condition && p.m && *p.m >= 3) {
            if (lemma2_violation(f, *p.m)) {
                violate(constraint::lemma2_fail);
            }
        }
        if (p.m && *p.m == 3) {
            bool class_ok = true;
            bool has_3 = false;
            for (const prime_power& pp : f.factors) {
                if (pp.prime % 3 != 2) {
                    class_ok = false;
                }
                if (pp.prime == 3) {
                    has_3 = true;
                }
            }
            if (!class_ok) {
                violate(constraint::d3_prime_class_fail);
            }
            if (has_3) {
                violate(constraint::d3_divisible_by_3);
            }
            if (p.omega < 48) {
                violate(constraint::d3_omega_lt_48);
            }
        }
    }
    return p;
}

inline structural_profile profile(const bigint& n) { return profile(factorize(n)); }

inline structural_profile profile(std::uint64_t n) { return profile(factorize(n)); }

// How a profile should be acted on. A Deaconescu number with zero violated
// constraints would be a genuine counterexample to the conjecture; one
// that also violates a proved constraint means the arithmetic and the
// proofs disagree, which must abort loudly.
enum class profile_status {
    ok,
    counterexample,
    inconsistent,
};

inline profile_status classify(const structural_profile& p) {
    if (!p.deaconescu) {
        return profile_status::ok;
    }
    return p.violated.empty() ? profile_status::counterexample
                              : profile_status::inconsistent;
}

}  // namespace deaconescu
