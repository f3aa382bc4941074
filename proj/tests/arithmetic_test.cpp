#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <set>

#include <deaconescu/deaconescu.hpp>

using namespace deaconescu;

TEST_CASE("make_rational normalizes and rejects zero denominators") {
    CHECK(make_rational(4, 6) == make_rational(2, 3));
    CHECK(make_rational(-4, 6) == make_rational(-2, 3));
    CHECK(make_rational(4, -6) == make_rational(-2, 3));
    CHECK(make_rational(-4, -6) == make_rational(2, 3));
    CHECK(make_rational(0, 5) == rational(0));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("rational_pow is exact binary exponentiation") {
    CHECK(rational_pow(make_rational(8, 7), 8) == make_rational(16777216, 5764801));
    CHECK(rational_pow(make_rational(3, 2), 0) == rational(1));
    CHECK(rational_pow(make_rational(-1, 2), 3) == make_rational(-1, 8));
}

TEST_CASE("fraction_string prints num/den") {
    CHECK(fraction_string(make_rational(2, 3)) == "2/3");
    CHECK(fraction_string(rational(7)) == "7/1");
    CHECK(fraction_string(make_rational(-14, 9)) == "-14/9");
}

TEST_CASE("parse_decimal is strict") {
    CHECK(parse_decimal("0") == 0);
    CHECK(parse_decimal("-12") == -12);
    CHECK(parse_decimal("58644190679703485491635") ==
          bigint("58644190679703485491635"));
    CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal(" 12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("+12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("-"), std::invalid_argument);
}

TEST_CASE("word-size primality agrees with a sieve below 100000") {
    prime_table t = sieve_primes(100000);
    std::size_t found = 0;
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        bool p = is_prime(n);
        CHECK(p == t.contains(n));
        found += p;
    }
    CHECK(found == 9592);
}

TEST_CASE("primality handles adversarial word-size values") {
    CHECK(is_prime(std::uint64_t(2305843009213693951ull)));
    CHECK_FALSE(is_prime(std::uint64_t(1000036000099ull)));
    CHECK(is_prime(std::uint64_t(1000003)));
    CHECK(is_prime(std::uint64_t(18446744073709551557ull)));
    CHECK_FALSE(is_prime(std::uint64_t(18446744073709551615ull)));
    CHECK_FALSE(is_prime(std::uint64_t(3825123056546413051ull)));
}

TEST_CASE("factorize certifies every factor") {
    factorization f = factorize(std::uint64_t(1000036000099ull));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 1000003);
    CHECK(f.factors[1].prime == 1000033);
    CHECK(reconstruct(f) == f.value);

    factorization pow = factorize(std::uint64_t(972));
    REQUIRE(pow.factors.size() == 2);
    CHECK(pow.factors[0] == prime_power{bigint(2), 2});
    CHECK(pow.factors[1] == prime_power{bigint(3), 5});

    CHECK(factorize(std::uint64_t(1)).factors.empty());
    CHECK_THROWS_AS(factorize(std::uint64_t(0)), std::domain_error);
}

TEST_CASE("factorize round-trips on random word-size values") {
    std::mt19937_64 rng(20260816);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() % 1000000000ull + 2;
        factorization f = factorize(n);
        CHECK(reconstruct(f) == n);
        for (const prime_power& pp : f.factors) {
            CHECK(is_prime(pp.prime));
        }
        for (std::size_t j = 1; j < f.factors.size(); ++j) {
            CHECK(f.factors[j - 1].prime < f.factors[j].prime);
        }
    }
}

TEST_CASE("big factorize handles smooth values and refuses hard ones") {
    bigint smooth = boost::multiprecision::pow(bigint(10), 30);
    factorization f = factorize(smooth);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == prime_power{bigint(2), 30});
    CHECK(f.factors[1] == prime_power{bigint(5), 30});
    CHECK(reconstruct(f) == smooth);

    bigint p = bigint("2305843009213693951");
    CHECK(factorize(p * 9).factors.size() == 2);

    bigint hard = (bigint(1) << 89) - 1;
    CHECK_THROWS_AS(factorize(hard * hard), unsupported_input);
    CHECK_THROWS_AS(factorize(bigint(0)), std::domain_error);
    CHECK_THROWS_AS(factorize(bigint(-6)), std::domain_error);
}

TEST_CASE("sieve_primes matches known prime counts") {
    CHECK(sieve_primes(10000).primes.size() == 1229);
    CHECK(sieve_primes(1000000).primes.size() == 78498);
    CHECK(sieve_primes(61).primes.size() == 18);
    CHECK_THROWS_AS(sieve_primes(1), std::domain_error);
}

TEST_CASE("nth_prime is 1-based") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(18) == 61);
    CHECK(nth_prime(1229) == 9973);
    CHECK_THROWS_AS(nth_prime(0), std::domain_error);
}

TEST_CASE("segmented smallest-factor table agrees with direct factorization") {
    spf_segment seg = spf_sieve(1000000, 1004096);
    for (std::uint64_t n = 1000000; n <= 1004096; ++n) {
        factorization via_segment = factorize_in(seg, n);
        CHECK(via_segment == factorize(n));
    }
    CHECK_THROWS_AS(factorize_in(seg, 999999), std::out_of_range);
}

TEST_CASE("euler phi and schemmel s2 from factorizations") {
    CHECK(euler_phi(factorize(std::uint64_t(15))) == 8);
    CHECK(schemmel_s2(factorize(std::uint64_t(15))) == 3);
    CHECK(euler_phi(factorize(std::uint64_t(1))) == 1);
    CHECK(schemmel_s2(factorize(std::uint64_t(1))) == 1);
    CHECK(schemmel_s2(factorize(std::uint64_t(4))) == 0);
    CHECK(euler_phi(factorize(std::uint64_t(9))) == 6);
    CHECK(schemmel_s2(factorize(std::uint64_t(9))) == 3);
    CHECK(euler_phi(factorize(std::uint64_t(97))) == 96);
    CHECK(schemmel_s2(factorize(std::uint64_t(97))) == 95);
}

TEST_CASE("counting definitions back the factored totients") {
    for (std::uint64_t n = 1; n <= 500; ++n) {
        factorization f = factorize(n);
        CHECK(euler_phi(f) == euler_phi_count(n));
        CHECK(schemmel_s2(f) == schemmel_s2_count(n));
    }
    CHECK_THROWS_AS(euler_phi_count(0), std::domain_error);
    CHECK_THROWS_AS(schemmel_s2_count(0), std::domain_error);
    CHECK_THROWS_AS(euler_phi_count(counting_cap + 1), unsupported_input);
}

TEST_CASE("both totients are multiplicative on coprime pairs") {
    std::mt19937_64 rng(987654321);
    int done = 0;
    while (done < 500) {
        std::uint64_t a = rng() % 3000 + 1;
        std::uint64_t b = rng() % 3000 + 1;
        if (std::gcd(a, b) != 1) {
            continue;
        }
        factorization fa = factorize(a), fb = factorize(b), fab = factorize(a * b);
        CHECK(euler_phi(fab) == euler_phi(fa) * euler_phi(fb));
        CHECK(schemmel_s2(fab) == schemmel_s2(fa) * schemmel_s2(fb));
        ++done;
    }
}
