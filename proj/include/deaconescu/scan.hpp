#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "factor.hpp"
#include "predicates.hpp"
#include "sieve.hpp"
#include "totient.hpp"

namespace deaconescu {

struct scan_hit {
    std::uint64_t n = 0;
    std::uint64_t m = 0;

    friend bool operator==(const scan_hit&, const scan_hit&) = default;
};

struct scan_options {
    std::uint64_t segment_size = 65536;
    unsigned workers = 1;
    std::string checkpoint_path;
    // Appends one synthetic composite hit so the alarm path can be
    // exercised end to end; the result is flagged as injected.
    bool inject_composite = false;
};

struct scan_result {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t scanned = 0;
    std::uint64_t segments = 0;
    std::uint64_t segments_resumed = 0;
    double elapsed_seconds = 0.0;
    bool all_hits_prime_m1 = false;
    bool injected = false;
    std::vector<scan_hit> condition_hits;
    std::vector<scan_hit> composite_hits;
};

// Per-worker extraction arrays are 24 bytes per value.
inline constexpr std::uint64_t scan_segment_cap = 1u << 22;
inline constexpr std::uint64_t scan_segment_floor = 1024;
inline constexpr std::uint64_t scan_hi_cap = std::uint64_t(1) << 62;

namespace detail {

// Certified re-check of a composite scan hit in exact arithmetic. The
// sieve values must match the certified factorization and the
// divisibility must genuinely hold; any disagreement is an internal
// inconsistency, not a discovery.
inline scan_hit verify_composite_hit(std::uint64_t n, std::uint64_t sieve_phi,
                                     std::uint64_t sieve_s2) {
    factorization f = factorize(n);
    bigint phi = euler_phi(f);
    bigint s2 = schemmel_s2(f);
    if (phi != sieve_phi || s2 != sieve_s2) {
        throw std::logic_error("scan: sieve totients disagree with certified factorization at n=" +
                               std::to_string(n));
    }
    if (!is_composite(f) || !condition_holds(f)) {
        throw std::logic_error("scan: composite hit failed exact re-verification at n=" +
                               std::to_string(n));
    }
    bigint m = (phi - 1) / s2;
    return scan_hit{n, static_cast<std::uint64_t>(m)};
}

struct segment_outcome {
    std::vector<scan_hit> hits;
    std::vector<scan_hit> composite_hits;
    bool resumed = false;
};

struct scan_scratch {
    std::vector<std::uint64_t> rem;
    std::vector<std::uint64_t> phi;
    std::vector<std::uint64_t> s2;
    std::vector<char> composite_flag;
};

// Computes phi and s2 for every n in [a, b] by extracting each base
// prime's full power from every multiple, then folding in the at most
// one remaining prime factor above sqrt(hi). n is prime exactly when
// phi(n) == n - 1.
inline void scan_segment(std::uint64_t a, std::uint64_t b,
                         const std::vector<std::uint64_t>& base_primes,
                         scan_scratch& scratch, segment_outcome& out) {
    const std::size_t len = static_cast<std::size_t>(b - a + 1);
    scratch.rem.resize(len);
    scratch.phi.resize(len);
    scratch.s2.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        scratch.rem[i] = a + i;
        scratch.phi[i] = 1;
        scratch.s2[i] = 1;
    }
    for (std::uint64_t p : base_primes) {
        std::uint64_t first = ((a + p - 1) / p) * p;
        if (first < a || first > b) {
            continue;
        }
        for (std::uint64_t m = first;; m += p) {
            std::size_t idx = static_cast<std::size_t>(m - a);
            std::uint64_t power = 1;
            while (scratch.rem[idx] % p == 0) {
                scratch.rem[idx] /= p;
                power *= p;
            }
            std::uint64_t lower = power / p;
            scratch.phi[idx] *= lower * (p - 1);
            scratch.s2[idx] *= p == 2 ? 0 : lower * (p - 2);
            if (m > b - p) {
                break;
            }
        }
    }
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t r = scratch.rem[i];
        if (r > 1) {
            // r is a prime above sqrt(hi); 2 is a base prime, so r is odd.
            scratch.phi[i] *= r - 1;
            scratch.s2[i] *= r - 2;
        }
        std::uint64_t n = a + i;
        std::uint64_t phi = scratch.phi[i];
        std::uint64_t s2 = scratch.s2[i];
        if (s2 >= 1 && (phi - 1) % s2 == 0) {
            scan_hit hit{n, (phi - 1) / s2};
            if (phi != n - 1) {
                out.composite_hits.push_back(verify_composite_hit(n, phi, s2));
            }
            out.hits.push_back(hit);
        }
    }
}

// Primality flags only, for regenerating a completed segment's hits.
inline std::vector<std::uint64_t> primes_in_segment(
    std::uint64_t a, std::uint64_t b,
    const std::vector<std::uint64_t>& base_primes, scan_scratch& scratch) {
    const std::size_t len = static_cast<std::size_t>(b - a + 1);
    scratch.composite_flag.assign(len, 0);
    for (std::uint64_t p : base_primes) {
        std::uint64_t first = std::max(p * p, ((a + p - 1) / p) * p);
        if (first < a || first > b) {
            continue;
        }
        for (std::uint64_t m = first;; m += p) {
            scratch.composite_flag[static_cast<std::size_t>(m - a)] = 1;
            if (m > b - p) {
                break;
            }
        }
    }
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t n = a + i;
        if (n >= 2 && !scratch.composite_flag[i]) {
            primes.push_back(n);
        }
    }
    return primes;
}

struct checkpoint_claim {
    std::uint64_t hi = 0;
    std::uint64_t hit_count = 0;
};

inline std::map<std::uint64_t, checkpoint_claim> read_checkpoint(const std::string& path) {
    std::map<std::uint64_t, checkpoint_claim> claims;
    std::ifstream in(path);
    if (!in) {
        return claims;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::uint64_t lo = 0, hi = 0, count = 0;
        std::string extra;
        if (!(fields >> lo >> hi >> count) || (fields >> extra)) {
            throw unsupported_input("checkpoint: malformed line " + std::to_string(line_no) +
                                    " in " + path);
        }
        // Later entries for the same segment supersede earlier ones.
        claims[lo] = checkpoint_claim{hi, count};
    }
    return claims;
}

}  // namespace detail

// Scans every n in [lo, hi] for the divisibility s2(n) | phi(n) - 1 on
// a fixed segment grid. The grid, the hit list and every derived field
// depend only on (lo, hi, segment_size), never on worker count or on
// whether segments were resumed from a checkpoint.
inline scan_result scan_range(std::uint64_t lo, std::uint64_t hi, const scan_options& opts) {
    if (lo < 4) {
        throw std::domain_error("scan_range: lo must be >= 4");
    }
    if (hi < lo) {
        throw std::domain_error("scan_range: hi must be >= lo");
    }
    if (hi > scan_hi_cap) {
        throw resource_limit("scan_range: hi exceeds supported maximum");
    }
    if (opts.segment_size < scan_segment_floor) {
        throw std::domain_error("scan_range: segment_size must be >= " +
                                std::to_string(scan_segment_floor));
    }
    if (opts.segment_size > scan_segment_cap) {
        throw resource_limit("scan_range: segment_size exceeds scan_segment_cap");
    }
    if (opts.workers < 1) {
        throw std::domain_error("scan_range: workers must be >= 1");
    }

    const auto started = std::chrono::steady_clock::now();
    scan_result result;
    result.lo = lo;
    result.hi = hi;
    result.scanned = hi - lo + 1;
    result.segments = (hi - lo) / opts.segment_size + 1;

    const std::vector<std::uint64_t> base_primes =
        sieve_primes(detail::isqrt_u64(hi)).primes;

    std::map<std::uint64_t, detail::checkpoint_claim> claims;
    std::ofstream checkpoint_out;
    std::mutex checkpoint_mutex;
    if (!opts.checkpoint_path.empty()) {
        claims = detail::read_checkpoint(opts.checkpoint_path);
        checkpoint_out.open(opts.checkpoint_path, std::ios::app);
        if (!checkpoint_out) {
            throw std::runtime_error("scan_range: cannot open checkpoint file " +
                                     opts.checkpoint_path);
        }
    }

    std::vector<detail::segment_outcome> outcomes(
        static_cast<std::size_t>(result.segments));
    std::atomic<std::uint64_t> next_segment{0};
    std::atomic<std::uint64_t> resumed_count{0};
    const unsigned worker_count = opts.workers;
    std::vector<std::exception_ptr> worker_errors(worker_count);

    auto worker = [&](unsigned worker_id) {
        detail::scan_scratch scratch;
        try {
            for (;;) {
                std::uint64_t k = next_segment.fetch_add(1);
                if (k >= result.segments) {
                    return;
                }
                std::uint64_t a = lo + k * opts.segment_size;
                std::uint64_t b = std::min(hi, a + opts.segment_size - 1);
                detail::segment_outcome& out = outcomes[static_cast<std::size_t>(k)];

                auto claim = claims.find(a);
                if (claim != claims.end() && claim->second.hi == b) {
                    // A completed segment can hold only prime hits, each
                    // with quotient 1; regenerate them and accept the
                    // claim only if the recorded count matches exactly.
                    std::vector<std::uint64_t> primes =
                        detail::primes_in_segment(a, b, base_primes, scratch);
                    if (primes.size() == claim->second.hit_count) {
                        out.hits.reserve(primes.size());
                        for (std::uint64_t p : primes) {
                            out.hits.push_back(scan_hit{p, 1});
                        }
                        out.resumed = true;
                        resumed_count.fetch_add(1);
                        continue;
                    }
                }

                detail::scan_segment(a, b, base_primes, scratch, out);
                if (checkpoint_out.is_open()) {
                    std::lock_guard<std::mutex> lock(checkpoint_mutex);
                    checkpoint_out << a << ' ' << b << ' ' << out.hits.size() << '\n';
                    checkpoint_out.flush();
                }
            }
        } catch (...) {
            worker_errors[worker_id] = std::current_exception();
        }
    };

    if (worker_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            threads.emplace_back(worker, w);
        }
        for (std::thread& t : threads) {
            t.join();
        }
    }
    for (const std::exception_ptr& err : worker_errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }

    result.segments_resumed = resumed_count.load();
    for (detail::segment_outcome& out : outcomes) {
        result.condition_hits.insert(result.condition_hits.end(), out.hits.begin(),
                                     out.hits.end());
        result.composite_hits.insert(result.composite_hits.end(),
                                     out.composite_hits.begin(),
                                     out.composite_hits.end());
    }

    if (opts.inject_composite) {
        std::uint64_t c = lo;
        while (c <= hi && is_prime(c)) {
            ++c;
        }
        if (c > hi) {
            throw std::domain_error("scan_range: no composite in range to inject");
        }
        // Synthetic record: quotient 0 marks that no exact quotient
        // exists. It joins both hit lists so the alarm path downstream
        // sees exactly what a genuine discovery would produce.
        scan_hit fake{c, 0};
        auto pos = std::lower_bound(result.condition_hits.begin(),
                                    result.condition_hits.end(), fake,
                                    [](const scan_hit& x, const scan_hit& y) {
                                        return x.n < y.n;
                                    });
        result.condition_hits.insert(pos, fake);
        result.composite_hits.push_back(fake);
        result.injected = true;
    }

    result.all_hits_prime_m1 = result.composite_hits.empty() && !result.injected;
    for (const scan_hit& h : result.condition_hits) {
        if (h.m != 1) {
            result.all_hits_prime_m1 = false;
        }
    }

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace deaconescu
