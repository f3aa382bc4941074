#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "certificates.hpp"
#include "near_miss.hpp"
#include "predicates.hpp"
#include "rational.hpp"
#include "scan.hpp"

namespace deaconescu {

using json = nlohmann::json;

// Exact values never pass through floating point: integers are decimal
// strings, rationals are {num, den} objects of decimal strings.
inline json rational_to_json(const rational& q) {
    return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline rational rational_from_json(const json& j) {
    return make_rational(parse_decimal(j.at("num").get<std::string>()),
                         parse_decimal(j.at("den").get<std::string>()));
}

inline json certificate_to_json(const certificate_report& c) {
    json details = json::array();
    for (const rational& term : c.details) {
        details.push_back(rational_to_json(term));
    }
    return json{
        {"id", c.id},
        {"statement", c.statement},
        {"exact_value", rational_to_json(c.exact_value)},
        {"bound", rational_to_json(c.bound)},
        {"relation", std::string(to_string(c.rel))},
        {"passed", c.passed},
        {"details", std::move(details)},
    };
}

inline certificate_report certificate_from_json(const json& j) {
    certificate_report c;
    c.id = j.at("id").get<std::string>();
    c.statement = j.at("statement").get<std::string>();
    c.exact_value = rational_from_json(j.at("exact_value"));
    c.bound = rational_from_json(j.at("bound"));
    c.rel = relation_from_string(j.at("relation").get<std::string>());
    c.passed = j.at("passed").get<bool>();
    for (const json& term : j.at("details")) {
        c.details.push_back(rational_from_json(term));
    }
    c.audit = audit_rule_for(c.id);
    return c;
}

inline json certificates_to_json(const std::vector<certificate_report>& reports) {
    json arr = json::array();
    bool all = true;
    for (const certificate_report& c : reports) {
        arr.push_back(certificate_to_json(c));
        all = all && c.passed;
    }
    return json{{"certificates", std::move(arr)}, {"all_passed", all}};
}

inline json profile_to_json(const structural_profile& p) {
    json factors = json::array();
    for (const prime_power& pp : p.factors.factors) {
        factors.push_back(json{{"prime", pp.prime.str()}, {"exponent", pp.exponent}});
    }
    json violated = json::array();
    for (constraint c : p.violated) {
        violated.push_back(std::string(to_string(c)));
    }
    json j{
        {"n", p.n.str()},
        {"composite", p.composite},
        {"odd", p.odd},
        {"squarefree", p.squarefree},
        {"omega", p.omega},
        {"phi", p.phi.str()},
        {"s2", p.s2.str()},
        {"condition_holds", p.condition},
        {"deaconescu", p.deaconescu},
        {"factors", std::move(factors)},
        {"violated", std::move(violated)},
    };
    j["smallest_prime"] = p.smallest_prime ? json(p.smallest_prime->str()) : json(nullptr);
    j["m"] = p.m ? json(p.m->str()) : json(nullptr);
    return j;
}

// Hit lists can run to hundreds of thousands of entries; reports carry
// a fixed-size preview plus exact counts. Text and JSON use the same cap.
inline constexpr std::size_t scan_preview_cap = 100;

inline json scan_hit_to_json(const scan_hit& h) {
    return json{{"n", h.n}, {"m", h.m}};
}

// Values tested per second, floored to an exact integer; zero when no
// time was measured.
inline std::uint64_t scan_throughput(const scan_result& r) {
    if (r.elapsed_seconds <= 0.0) {
        return 0;
    }
    return static_cast<std::uint64_t>(static_cast<double>(r.scanned) / r.elapsed_seconds);
}

inline json scan_to_json(const scan_result& r) {
    json preview = json::array();
    std::size_t shown = std::min(r.condition_hits.size(), scan_preview_cap);
    for (std::size_t i = 0; i < shown; ++i) {
        preview.push_back(scan_hit_to_json(r.condition_hits[i]));
    }
    json composites = json::array();
    for (const scan_hit& h : r.composite_hits) {
        composites.push_back(scan_hit_to_json(h));
    }
    return json{
        {"lo", r.lo},
        {"hi", r.hi},
        {"scanned", r.scanned},
        {"segments", r.segments},
        {"segments_resumed", r.segments_resumed},
        {"elapsed_seconds", r.elapsed_seconds},
        {"throughput_per_second", scan_throughput(r)},
        {"condition_hit_count", r.condition_hits.size()},
        {"composite_hit_count", r.composite_hits.size()},
        {"all_hits_prime_m1", r.all_hits_prime_m1},
        {"injected", r.injected},
        {"condition_hit_preview", std::move(preview)},
        {"composite_hits", std::move(composites)},
    };
}

inline json near_miss_candidate_to_json(const near_miss_candidate& c) {
    json primes = json::array();
    for (std::uint64_t p : c.primes) {
        primes.push_back(p);
    }
    return json{
        {"primes", std::move(primes)},
        {"omega", c.omega},
        {"m_target", c.m_target.str()},
        {"n", c.n.str()},
        {"residual", fraction_string(c.residual)},
        {"abs_defect", c.abs_defect.str()},
    };
}

inline json near_miss_to_json(const near_miss_result& r) {
    json pool = json::array();
    for (std::uint64_t p : r.pool) {
        pool.push_back(p);
    }
    json candidates = json::array();
    for (const near_miss_candidate& c : r.candidates) {
        candidates.push_back(near_miss_candidate_to_json(c));
    }
    return json{
        {"m_target", r.m_target.str()},
        {"omega_min", r.omega_min},
        {"omega_max", r.omega_max},
        {"beam", r.beam},
        {"pool", std::move(pool)},
        {"infeasible", r.infeasible},
        {"candidates", std::move(candidates)},
    };
}

inline std::string render_text(const certificate_report& c) {
    std::ostringstream out;
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << "\n";
    out << "  " << c.statement << "\n";
    out << "  exact_value = " << fraction_string(c.exact_value) << "\n";
    out << "  bound " << to_string(c.rel) << " " << fraction_string(c.bound) << "\n";
    out << "  details: " << c.details.size() << " terms\n";
    return out.str();
}

inline std::string render_text(const std::vector<certificate_report>& reports) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const certificate_report& c : reports) {
        out << render_text(c);
        if (c.passed) {
            ++passed;
        }
    }
    out << passed << "/" << reports.size() << " certificates passed\n";
    return out.str();
}

inline std::string render_text(const structural_profile& p) {
    std::ostringstream out;
    out << "n = " << p.n.str() << "\n";
    out << "  factors =";
    if (p.factors.factors.empty()) {
        out << " (none)";
    }
    for (const prime_power& pp : p.factors.factors) {
        out << " " << pp.prime.str();
        if (pp.exponent > 1) {
            out << "^" << pp.exponent;
        }
    }
    out << "\n";
    out << "  composite = " << (p.composite ? "true" : "false") << "\n";
    out << "  odd = " << (p.odd ? "true" : "false") << "\n";
    out << "  squarefree = " << (p.squarefree ? "true" : "false") << "\n";
    out << "  omega = " << p.omega << "\n";
    out << "  smallest_prime = "
        << (p.smallest_prime ? p.smallest_prime->str() : std::string("none")) << "\n";
    out << "  phi = " << p.phi.str() << "\n";
    out << "  s2 = " << p.s2.str() << "\n";
    out << "  condition_holds = " << (p.condition ? "true" : "false") << "\n";
    out << "  m = " << (p.m ? p.m->str() : std::string("none")) << "\n";
    out << "  deaconescu = " << (p.deaconescu ? "true" : "false") << "\n";
    out << "  violated =";
    if (p.violated.empty()) {
        out << " (none)";
    }
    for (constraint c : p.violated) {
        out << " " << to_string(c);
    }
    out << "\n";
    return out.str();
}

inline std::string render_text(const scan_result& r) {
    std::ostringstream out;
    out << "scan [" << r.lo << ", " << r.hi << "]\n";
    out << "  scanned = " << r.scanned << "\n";
    out << "  segments = " << r.segments << " (resumed " << r.segments_resumed << ")\n";
    out << "  condition_hit_count = " << r.condition_hits.size() << "\n";
    out << "  composite_hit_count = " << r.composite_hits.size() << "\n";
    out << "  all_hits_prime_m1 = " << (r.all_hits_prime_m1 ? "true" : "false") << "\n";
    out << "  injected = " << (r.injected ? "true" : "false") << "\n";
    out << "  elapsed_seconds = " << r.elapsed_seconds << "\n";
    out << "  throughput_per_second = " << scan_throughput(r) << "\n";
    std::size_t shown = std::min(r.condition_hits.size(), scan_preview_cap);
    out << "  condition_hit_preview (" << shown << " of " << r.condition_hits.size()
        << "):\n";
    for (std::size_t i = 0; i < shown; ++i) {
        out << "    n=" << r.condition_hits[i].n << " m=" << r.condition_hits[i].m << "\n";
    }
    for (const scan_hit& h : r.composite_hits) {
        out << "  COMPOSITE HIT n=" << h.n << " m=" << h.m << "\n";
    }
    return out.str();
}

inline std::string render_text(const near_miss_result& r) {
    std::ostringstream out;
    out << "near-miss search, quotient target " << r.m_target.str() << ", omega ["
        << r.omega_min << ", " << r.omega_max << "], beam " << r.beam << "\n";
    out << "  pool (" << r.pool.size() << "):";
    for (std::uint64_t p : r.pool) {
        out << " " << p;
    }
    out << "\n";
    if (r.infeasible) {
        out << "  infeasible: pool smaller than omega_min\n";
        return out.str();
    }
    for (const near_miss_candidate& c : r.candidates) {
        out << "  n = " << c.n.str() << ", primes = {";
        for (std::size_t i = 0; i < c.primes.size(); ++i) {
            out << (i ? ", " : "") << c.primes[i];
        }
        out << "}, defect = " << c.abs_defect.str()
            << ", residual = " << fraction_string(c.residual) << "\n";
    }
    return out.str();
}

}  // namespace deaconescu
