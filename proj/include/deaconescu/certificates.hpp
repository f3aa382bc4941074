#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "sieve.hpp"

namespace deaconescu {

enum class relation {
    less,
    greater,
    equal,
    // Cardinality claims ("this set has exactly k elements"); the value
    // and bound are then exact integers.
    count_equal,
};

inline std::string_view to_string(relation r) {
    switch (r) {
        case relation::less:
            return "<";
        case relation::greater:
            return ">";
        case relation::equal:
            return "=";
        case relation::count_equal:
            return "count=";
    }
    return "?";
}

inline relation relation_from_string(std::string_view s) {
    if (s == "<") return relation::less;
    if (s == ">") return relation::greater;
    if (s == "=") return relation::equal;
    if (s == "count=") return relation::count_equal;
    throw std::invalid_argument("relation_from_string: unknown relation");
}

// How the details list re-aggregates to exact_value: a plain product for
// product bounds, a maximum for the monotone-chain certificate.
enum class audit_rule {
    product,
    max,
};

// One machine-checked claim: an exactly computed value, the claimed
// bound, and the verdict of the exact comparison. details carries the
// contributing terms so the value can be re-derived independently.
struct certificate_report {
    std::string id;
    std::string statement;
    rational exact_value;
    rational bound;
    relation rel = relation::less;
    bool passed = false;
    std::vector<rational> details;
    audit_rule audit = audit_rule::product;

    friend bool operator==(const certificate_report&, const certificate_report&) = default;
};

inline bool relation_holds(const rational& value, relation r, const rational& bound) {
    switch (r) {
        case relation::less:
            return value < bound;
        case relation::greater:
            return value > bound;
        case relation::equal:
            return value == bound;
        case relation::count_equal:
            return value == bound && denominator(value) == 1 && denominator(bound) == 1;
    }
    return false;
}

// Recomputes the verdict from the stored value, relation and bound.
// Tampering with any of the three flips the result.
inline bool reverify(const certificate_report& c) {
    return relation_holds(c.exact_value, c.rel, c.bound);
}

// Re-aggregates the details per the certificate's audit rule.
inline rational reaggregate(const certificate_report& c) {
    if (c.details.empty()) {
        throw std::domain_error("reaggregate: certificate has no details");
    }
    if (c.audit == audit_rule::product) {
        rational acc(1);
        for (const rational& term : c.details) {
            acc *= term;
        }
        return acc;
    }
    rational best = c.details.front();
    for (const rational& term : c.details) {
        if (term > best) {
            best = term;
        }
    }
    return best;
}

// tau(t) = (1 + 1/t)^(t + 1), exactly rational at integer t.
inline rational tau_at(unsigned t) {
    if (t == 0) {
        throw std::domain_error("tau_at: t must be >= 1");
    }
    return rational_pow(make_rational(t + 1, t), t + 1);
}

// (1 + 1/7)^8 < 3, the anchor value of the tau chain.
inline certificate_report cert_tau7() {
    certificate_report c;
    c.id = "tau7_lt_3";
    c.statement = "tau(7) = (1 + 1/7)^8 < 3";
    c.details.assign(8, make_rational(8, 7));
    c.exact_value = tau_at(7);
    c.bound = rational(3);
    c.rel = relation::less;
    c.audit = audit_rule::product;
    c.passed = reverify(c);
    return c;
}

// Exact rational powers grow roughly like t^t digits; cap the chain.
inline constexpr unsigned tau_chain_cap = 1000;

// tau(t) > tau(t + 1) for every integer t in [7, t_max - 1], folded into
// one exact comparison: the largest consecutive ratio tau(t+1)/tau(t)
// must be < 1. details holds the individual ratios.
inline certificate_report cert_tau_decreasing(unsigned t_max) {
    if (t_max < 8) {
        throw std::domain_error("cert_tau_decreasing: t_max must be >= 8");
    }
    if (t_max > tau_chain_cap) {
        throw resource_limit("cert_tau_decreasing: t_max exceeds tau_chain_cap");
    }
    certificate_report c;
    c.id = "tau_strictly_decreasing";
    c.statement = "tau(t) = (1 + 1/t)^(t+1) strictly decreases on integer t in [7, " +
                  std::to_string(t_max) + "]";
    rational prev = tau_at(7);
    for (unsigned t = 7; t + 1 <= t_max; ++t) {
        rational next = tau_at(t + 1);
        c.details.push_back(next / prev);
        prev = next;
    }
    c.exact_value = c.details.front();
    for (const rational& r : c.details) {
        if (r > c.exact_value) {
            c.exact_value = r;
        }
    }
    c.bound = rational(1);
    c.rel = relation::less;
    c.audit = audit_rule::max;
    c.passed = reverify(c);
    return c;
}

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) {
        throw std::logic_error(what);
    }
}

inline certificate_report ratio_product_certificate(
    std::string id, std::string statement,
    const std::vector<std::uint64_t>& primes, rational bound) {
    certificate_report c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.exact_value = rational(1);
    for (std::uint64_t p : primes) {
        rational term = make_rational(p - 1, p - 2);
        c.details.push_back(term);
        c.exact_value *= term;
    }
    c.bound = std::move(bound);
    c.rel = relation::less;
    c.audit = audit_rule::product;
    c.passed = reverify(c);
    return c;
}

}  // namespace detail

// prod (p-1)/(p-2) over the 16 odd primes up to 59 is < 6. Any composite
// with the divisibility property and at most 16 prime divisors would
// force its ratio phi/s2 under this product.
inline certificate_report cert_small_prime_product() {
    prime_table t = sieve_primes(59);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : t.primes) {
        if (p >= 3) {
            primes.push_back(p);
        }
    }
    detail::require(primes.size() == 16,
                    "cert_small_prime_product: expected 16 primes in [3, 59]");
    return detail::ratio_product_certificate(
        "prime_ratio_product_3_59_lt_6",
        "prod (p-1)/(p-2) over the 16 primes 3 <= p <= 59 is < 6", primes,
        rational(6));
}

// Same product over the 16 primes up to 79 that are not 1 mod 5; it is
// < 5, which rules the quotient 5 out for small prime counts.
inline certificate_report cert_mod5_prime_product() {
    prime_table t = sieve_primes(79);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : t.primes) {
        if (p >= 3 && p % 5 != 1) {
            primes.push_back(p);
        }
    }
    detail::require(primes.size() == 16,
                    "cert_mod5_prime_product: expected 16 primes in [3, 79] not 1 mod 5");
    return detail::ratio_product_certificate(
        "prime_ratio_product_3_79_not1mod5_lt_5",
        "prod (p-1)/(p-2) over the 16 primes 3 <= p <= 79 with p != 1 mod 5 is < 5",
        primes, rational(5));
}

// The quotient-3 product bound: over the 10 admissible k with
// 5 <= 3k + 2 <= 71 prime, prod (1 + 1/(3k)) * (1 + 1/81)^37 < 3.
// The 81 is justified by a gap fact that is checked here as well: the
// next prime of the form 3k + 2 past 71 is 83, whose 3k is 81.
inline certificate_report cert_d3_product() {
    prime_table t = sieve_primes(100);
    std::vector<std::uint64_t> ks;
    for (std::uint64_t p : t.primes) {
        if (p >= 5 && p <= 71 && p % 3 == 2) {
            ks.push_back((p - 2) / 3);
        }
    }
    detail::require(ks.size() == 10, "cert_d3_product: expected 10 admissible k");
    std::uint64_t next_class2 = 0;
    for (std::uint64_t p : t.primes) {
        if (p > 71 && p % 3 == 2) {
            next_class2 = p;
            break;
        }
    }
    detail::require(next_class2 == 83,
                    "cert_d3_product: next prime 2 mod 3 after 71 must be 83");
    detail::require((next_class2 - 2) == 81,
                    "cert_d3_product: tail terms must start at 3k = 81");

    certificate_report c;
    c.id = "d3_product_lt_3";
    c.statement =
        "prod (1 + 1/(3k)) over k in {1,3,5,7,9,13,15,17,19,23} times "
        "(1 + 1/81)^37 is < 3";
    c.exact_value = rational(1);
    for (std::uint64_t k : ks) {
        rational term = make_rational(3 * k + 1, 3 * k);
        c.details.push_back(term);
        c.exact_value *= term;
    }
    rational tail = rational_pow(make_rational(82, 81), 37);
    c.details.push_back(tail);
    c.exact_value *= tail;
    c.bound = rational(3);
    c.rel = relation::less;
    c.audit = audit_rule::product;
    c.passed = reverify(c);
    return c;
}

// Product of the 17 primes from 3 through 61 (the 2nd through the 18th
// prime) exceeds 5.86 * 10^22, held exactly as 586 * 10^20.
inline certificate_report cert_primorial_bound() {
    prime_table t = sieve_primes(61);
    detail::require(t.primes.size() == 18, "cert_primorial_bound: expected 18 primes <= 61");
    certificate_report c;
    c.id = "primorial_3_to_61_gt_586e20";
    c.statement = "3 * 5 * 7 * ... * 61 (17 primes) > 5.86 * 10^22";
    bigint product(1);
    for (std::size_t j = 2; j <= 18; ++j) {
        std::uint64_t p = t.nth(j);
        c.details.push_back(rational(p));
        product *= p;
    }
    // Second multiplication in the opposite order guards the product.
    bigint reversed(1);
    for (std::size_t j = 18; j >= 2; --j) {
        reversed *= t.nth(j);
    }
    detail::require(reversed == product,
                    "cert_primorial_bound: multiplication orders disagree");
    c.exact_value = rational(product);
    c.bound = rational(bigint(586) * boost::multiprecision::pow(bigint(10), 20));
    c.rel = relation::greater;
    c.audit = audit_rule::product;
    c.passed = reverify(c);
    return c;
}

// Every certificate in a fixed order. An internal failure in one marks
// that certificate failed and never aborts the batch.
inline std::vector<certificate_report> run_all_certificates(unsigned tau_max = 100) {
    struct entry {
        const char* id;
        std::function<certificate_report()> build;
    };
    const entry entries[] = {
        {"tau7_lt_3", [] { return cert_tau7(); }},
        {"prime_ratio_product_3_59_lt_6", [] { return cert_small_prime_product(); }},
        {"prime_ratio_product_3_79_not1mod5_lt_5", [] { return cert_mod5_prime_product(); }},
        {"d3_product_lt_3", [] { return cert_d3_product(); }},
        {"primorial_3_to_61_gt_586e20", [] { return cert_primorial_bound(); }},
        {"tau_strictly_decreasing", [tau_max] { return cert_tau_decreasing(tau_max); }},
    };
    std::vector<certificate_report> reports;
    for (const entry& e : entries) {
        try {
            reports.push_back(e.build());
        } catch (const std::exception& ex) {
            certificate_report failed;
            failed.id = e.id;
            failed.statement = std::string("internal failure: ") + ex.what();
            failed.passed = false;
            reports.push_back(failed);
        }
    }
    return reports;
}

// Audit rule lookup for deserialized reports; ids are stable.
inline audit_rule audit_rule_for(std::string_view id) {
    return id == "tau_strictly_decreasing" ? audit_rule::max : audit_rule::product;
}

}  // namespace deaconescu
