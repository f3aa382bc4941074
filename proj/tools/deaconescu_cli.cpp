#include <cstdint>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <deaconescu/deaconescu.hpp>

namespace {

// 0 success, 1 certificate failure, 2 usage or unsupported input,
// 3 counterexample alarm, 4 internal inconsistency.
constexpr int exit_ok = 0;
constexpr int exit_certificate_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_counterexample = 3;
constexpr int exit_inconsistent = 4;

bool use_json(const std::string& format) { return format == "json"; }

void print_json(const deaconescu::json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const std::string& value_text, const std::string& format) {
    deaconescu::bigint n = deaconescu::parse_decimal(value_text);
    deaconescu::structural_profile p = deaconescu::profile(n);
    deaconescu::profile_status status = deaconescu::classify(p);
    const char* status_name = status == deaconescu::profile_status::ok
                                  ? "ok"
                                  : status == deaconescu::profile_status::counterexample
                                        ? "counterexample"
                                        : "inconsistent";
    if (use_json(format)) {
        deaconescu::json j = deaconescu::profile_to_json(p);
        j["status"] = status_name;
        print_json(j);
    } else {
        std::cout << deaconescu::render_text(p) << "  status = " << status_name << "\n";
    }
    switch (status) {
        case deaconescu::profile_status::ok:
            return exit_ok;
        case deaconescu::profile_status::counterexample:
            return exit_counterexample;
        case deaconescu::profile_status::inconsistent:
            return exit_inconsistent;
    }
    return exit_inconsistent;
}

int run_certify(unsigned tau_max, const std::string& format) {
    std::vector<deaconescu::certificate_report> reports =
        deaconescu::run_all_certificates(tau_max);
    bool all = true;
    for (const deaconescu::certificate_report& c : reports) {
        all = all && c.passed;
    }
    if (use_json(format)) {
        print_json(deaconescu::certificates_to_json(reports));
    } else {
        std::cout << deaconescu::render_text(reports);
    }
    return all ? exit_ok : exit_certificate_failure;
}

int run_scan(std::uint64_t lo, std::uint64_t hi, const deaconescu::scan_options& opts,
             const std::string& format) {
    deaconescu::scan_result r = deaconescu::scan_range(lo, hi, opts);
    if (use_json(format)) {
        print_json(deaconescu::scan_to_json(r));
    } else {
        std::cout << deaconescu::render_text(r);
    }
    if (!r.composite_hits.empty()) {
        std::cerr << "alarm: composite value satisfying the divisibility reported\n";
        return exit_counterexample;
    }
    return exit_ok;
}

int run_near_miss(const std::vector<std::uint64_t>& pool, std::uint64_t pool_limit,
                  std::uint64_t m, unsigned omega_min, unsigned omega_max,
                  std::size_t beam, const std::string& format) {
    deaconescu::bigint target(m);
    std::vector<std::uint64_t> chosen_pool =
        pool.empty() ? deaconescu::admissible_pool(pool_limit, target) : pool;
    deaconescu::near_miss_result r =
        deaconescu::near_miss_search(chosen_pool, target, omega_min, omega_max, beam);
    if (use_json(format)) {
        print_json(deaconescu::near_miss_to_json(r));
    } else {
        std::cout << deaconescu::render_text(r);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the totient divisibility s2(n) | phi(n) - 1"};
    app.require_subcommand(1);

    std::string check_value;
    std::string check_format = "text";
    CLI::App* check_cmd = app.add_subcommand(
        "check", "Profile one value against every certified structural constraint");
    check_cmd->alias("profile");
    check_cmd->add_option("n", check_value, "Value to profile (decimal)")->required();
    check_cmd->add_option("--format", check_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    unsigned tau_max = 100;
    std::string certify_format = "text";
    CLI::App* certify_cmd =
        app.add_subcommand("certify", "Re-derive and verify every inequality certificate");
    certify_cmd->add_option("--tau-max", tau_max, "Upper end of the tau monotonicity chain")
        ->check(CLI::Range(8u, deaconescu::tau_chain_cap));
    certify_cmd->add_option("--format", certify_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::uint64_t scan_lo = 4;
    std::uint64_t scan_hi = 0;
    deaconescu::scan_options scan_opts;
    std::string scan_format = "text";
    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "Exhaustively test every n in [lo, hi] for the divisibility");
    scan_cmd->add_option("--lo", scan_lo, "Lower end of the range (>= 4)");
    scan_cmd->add_option("--hi", scan_hi, "Upper end of the range")->required();
    scan_cmd->add_option("--segment-size", scan_opts.segment_size, "Values per segment")
        ->check(CLI::Range(deaconescu::scan_segment_floor, deaconescu::scan_segment_cap));
    scan_cmd->add_option("--workers", scan_opts.workers, "Worker thread count")
        ->check(CLI::Range(1u, 256u));
    scan_cmd->add_option("--checkpoint", scan_opts.checkpoint_path,
                         "Checkpoint file to append completed segments to and resume from");
    scan_cmd
        ->add_flag("--inject-composite-hit", scan_opts.inject_composite,
                   "Append one synthetic composite hit to rehearse the alarm path")
        ->group("");
    scan_cmd->add_option("--format", scan_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::uint64_t> nm_pool;
    std::uint64_t nm_pool_limit = 100;
    std::uint64_t nm_m = 3;
    unsigned nm_omega_min = 1;
    unsigned nm_omega_max = 4;
    std::size_t nm_beam = 10;
    std::string nm_format = "text";
    CLI::App* nm_cmd = app.add_subcommand(
        "near-miss", "Rank squarefree candidates by distance from the quotient equation");
    nm_cmd->add_option("--m", nm_m, "Quotient target (>= 3)")->check(CLI::Range(3ull, 1ull << 32));
    nm_cmd->add_option("--pool", nm_pool, "Explicit prime pool (overrides --pool-limit)");
    nm_cmd->add_option("--pool-limit", nm_pool_limit,
                       "Build the pool from admissible primes up to this bound");
    nm_cmd->add_option("--omega-min", nm_omega_min, "Minimum primes per candidate")
        ->check(CLI::Range(1u, 64u));
    nm_cmd->add_option("--omega-max", nm_omega_max, "Maximum primes per candidate")
        ->check(CLI::Range(1u, 64u));
    nm_cmd->add_option("--beam", nm_beam, "Candidates to keep")
        ->check(CLI::Range(std::size_t(1), std::size_t(1) << 20));
    nm_cmd->add_option("--format", nm_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check_cmd->parsed()) {
            return run_check(check_value, check_format);
        }
        if (certify_cmd->parsed()) {
            return run_certify(tau_max, certify_format);
        }
        if (scan_cmd->parsed()) {
            return run_scan(scan_lo, scan_hi, scan_opts, scan_format);
        }
        if (nm_cmd->parsed()) {
            return run_near_miss(nm_pool, nm_pool_limit, nm_m, nm_omega_min, nm_omega_max,
                                 nm_beam, nm_format);
        }
        std::cerr << "error: no subcommand\n";
        return exit_usage;
    } catch (const deaconescu::unsupported_input& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return exit_usage;
    } catch (const deaconescu::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    }
}
