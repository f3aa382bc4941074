#include <catch2/catch_amalgamated.hpp>

#include <chrono>

#include <deaconescu/deaconescu.hpp>

using namespace deaconescu;

TEST_CASE("tau is exact at integer points") {
    CHECK(tau_at(7) == make_rational(16777216, 5764801));
    CHECK(tau_at(8) == make_rational(bigint("387420489"), bigint("134217728")));
    CHECK_THROWS_AS(tau_at(0), std::domain_error);
}

TEST_CASE("tau(7) certificate holds with the exact eighth power") {
    certificate_report c = cert_tau7();
    CHECK(c.passed);
    CHECK(c.exact_value == make_rational(16777216, 5764801));
    CHECK(c.bound == rational(3));
    CHECK(c.rel == relation::less);
    CHECK(c.details.size() == 8);
    CHECK(reaggregate(c) == c.exact_value);
}

TEST_CASE("tau chain certificate compares every consecutive pair") {
    certificate_report c = cert_tau_decreasing(100);
    CHECK(c.passed);
    CHECK(c.details.size() == 93);
    CHECK(c.audit == audit_rule::max);
    // The first ratio is tau(8)/tau(7); every recorded ratio is < 1.
    CHECK(c.details.front() ==
          make_rational(bigint("2233402022407689"), bigint("2251799813685248")));
    for (const rational& r : c.details) {
        CHECK(r < 1);
    }
    CHECK(reaggregate(c) == c.exact_value);
    CHECK_THROWS_AS(cert_tau_decreasing(7), std::domain_error);
    CHECK_THROWS_AS(cert_tau_decreasing(tau_chain_cap + 1), resource_limit);
}

TEST_CASE("sixteen-prime ratio product stays under six") {
    certificate_report c = cert_small_prime_product();
    CHECK(c.passed);
    CHECK(c.details.size() == 16);
    CHECK(c.exact_value ==
          make_rational(bigint("1543503872"), bigint("273534165")));
    CHECK(reaggregate(c) == c.exact_value);
}

TEST_CASE("mod-5 filtered ratio product stays under five") {
    certificate_report c = cert_mod5_prime_product();
    CHECK(c.passed);
    CHECK(c.details.size() == 16);
    CHECK(c.exact_value ==
          make_rational(bigint("1745702879232"), bigint("349656584375")));
    CHECK(reaggregate(c) == c.exact_value);
}

TEST_CASE("quotient-3 product certificate matches the exact fraction") {
    certificate_report c = cert_d3_product();
    CHECK(c.passed);
    CHECK(c.details.size() == 11);
    CHECK(c.exact_value ==
          make_rational(
              bigint("18945723184814340287527485873405119822467509709376990911581337"
                     "2203478565592760320"),
              bigint("63510537303603591098638518454192613559442414654981369717522879"
                     "218763144356569307")));
    CHECK(c.exact_value < 3);
    CHECK(c.exact_value > make_rational(29, 10));
    CHECK(reaggregate(c) == c.exact_value);
}

TEST_CASE("seventeen-prime product clears the size bound") {
    certificate_report c = cert_primorial_bound();
    CHECK(c.passed);
    CHECK(c.details.size() == 17);
    CHECK(c.exact_value == rational(bigint("58644190679703485491635")));
    CHECK(c.bound == rational(bigint("58600000000000000000000")));
    CHECK(c.rel == relation::greater);
    CHECK(reaggregate(c) == c.exact_value);
}

TEST_CASE("the full certificate batch passes in under a second") {
    auto start = std::chrono::steady_clock::now();
    std::vector<certificate_report> reports = run_all_certificates();
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    REQUIRE(reports.size() == 6);
    for (const certificate_report& c : reports) {
        CHECK(c.passed);
        CHECK(reverify(c));
        CHECK(reaggregate(c) == c.exact_value);
    }
    CHECK(elapsed < 1.0);
}

TEST_CASE("flipping any stored field flips reverification") {
    for (certificate_report c : run_all_certificates()) {
        certificate_report tampered = c;
        tampered.bound = c.rel == relation::less ? rational(c.exact_value - 1)
                                                 : rational(c.exact_value + 1);
        CHECK_FALSE(reverify(tampered));

        certificate_report swapped = c;
        swapped.rel = c.rel == relation::less ? relation::greater : relation::less;
        CHECK_FALSE(reverify(swapped));

        certificate_report nudged = c;
        nudged.exact_value = c.bound;
        CHECK_FALSE(reverify(nudged));
    }
}

TEST_CASE("certificate json round-trips exactly") {
    for (const certificate_report& c : run_all_certificates()) {
        json j = certificate_to_json(c);
        CHECK(j.at("id").get<std::string>() == c.id);
        CHECK(j.at("exact_value").contains("num"));
        CHECK(j.at("exact_value").contains("den"));
        certificate_report back = certificate_from_json(j);
        CHECK(back == c);
        CHECK(reverify(back));
    }
}

TEST_CASE("relation vocabulary round-trips including cardinality") {
    CHECK(relation_from_string("<") == relation::less);
    CHECK(relation_from_string(">") == relation::greater);
    CHECK(relation_from_string("=") == relation::equal);
    CHECK(relation_from_string("count=") == relation::count_equal);
    CHECK_THROWS_AS(relation_from_string("<="), std::invalid_argument);
    CHECK(relation_holds(rational(16), relation::count_equal, rational(16)));
    CHECK_FALSE(relation_holds(rational(16), relation::count_equal, rational(10)));
    CHECK_FALSE(relation_holds(make_rational(1, 2), relation::count_equal,
                               make_rational(1, 2)));
}

TEST_CASE("tampered json is caught by reverification") {
    certificate_report c = cert_tau7();
    json j = certificate_to_json(c);
    j["bound"]["num"] = "2";
    certificate_report back = certificate_from_json(j);
    CHECK(back.passed);
    CHECK_FALSE(reverify(back));
    CHECK(reaggregate(back) == back.exact_value);
}
