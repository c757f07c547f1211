#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "../support/oracles.hpp"
#include "walks/exactmath.hpp"
#include "walks/oracle.hpp"

using namespace walks;
using walks::testing::binomial_by_factorials;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == binomial_by_factorials(4, 2));
    CHECK(binomial(4, 2) == Natural(6));
    CHECK(binomial(7, 0) == Natural(1));
    CHECK(binomial(3, 5) == Natural(0));
    CHECK(binomial(3, -1) == Natural(0));
    CHECK_THROWS_AS((void)binomial(-1, 0), std::invalid_argument);

    SUBCASE("agrees with factorials well past 64 bits") {
        for (int n : {40, 67, 100}) {
            for (int k = 0; k <= n; k += 7) {
                CHECK(binomial(n, k) == binomial_by_factorials(n, k));
            }
        }
        CHECK(binomial(100, 50).to_string() == "100891344545564193334812497256");
    }

    SUBCASE("Pascal's rule") {
        for (int n = 1; n <= 40; ++n) {
            for (int k = 1; k <= n; ++k) {
                REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(4, {2, 2}) == Natural(6));
    CHECK(multinomial(5, {5}) == Natural(1));
    CHECK(multinomial(4, {2, 1, 1}) == Natural(12));
    CHECK(multinomial(0, {}) == Natural(1));
    CHECK(multinomial(3, {0, 3, 0}) == Natural(1));
    CHECK_THROWS_AS((void)multinomial(4, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)multinomial(4, {5, -1}), std::invalid_argument);

    SUBCASE("invariant under permutation of the parts") {
        std::mt19937 rng(20261019);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = static_cast<int>(rng() % 31);
            std::vector<std::int64_t> parts;
            int left = n;
            while (left > 0) {
                const int p = static_cast<int>(rng() % (left + 1));
                parts.push_back(p);
                left -= p;
            }
            parts.push_back(left);
            const auto expected = multinomial(n, parts);
            std::shuffle(parts.begin(), parts.end(), rng);
            REQUIRE(multinomial(n, parts) == expected);

            Natural by_factorials = walks::testing::factorial(n);
            Natural denominator = 1;
            for (auto p : parts) {
                denominator *= walks::testing::factorial(p);
            }
            REQUIRE(multinomial(n, parts) == by_factorials.divexact(denominator));
        }
    }
}

TEST_CASE("catalan") {
    CHECK(catalan(0) == Natural(1));
    CHECK(catalan(5) == Natural(42));
    CHECK(catalan(10) == binomial_by_factorials(20, 10).divexact(11));
    CHECK(catalan(10) == Natural(16796));
    for (int i = 0; i <= 40; ++i) {
        REQUIRE(catalan(i + 1) * Natural(static_cast<std::uint64_t>(i + 2)) == binomial(2 * i + 2, i + 1));
    }
}

TEST_CASE("central binomials") {
    CHECK(central_binomial_even(0) == Natural(1));
    CHECK(central_binomial_even(1) == Natural(2));
    CHECK(central_binomial_even(3) == Natural(20));
    CHECK(central_binomial_any(0) == Natural(1));
    CHECK(central_binomial_any(1) == Natural(1));
    CHECK(central_binomial_any(4) == Natural(6));
    CHECK(central_binomial_any(5) == Natural(10));
}

TEST_CASE("motzkin") {
    CHECK(motzkin(0) == Natural(1));
    CHECK(motzkin(3) == Natural(4));
    CHECK(motzkin(5) == Natural(21));
    CHECK(motzkin(5) == Natural(walks::testing::brute_count("ad", 5)));
    const auto ad = WalkType::parse("ad");
    for (int n = 0; n <= 10; ++n) {
        REQUIRE(motzkin(n) == oracle::count_dp(ad, n));
    }
}

TEST_CASE("Natural") {
    CHECK(Natural::from_string("18446744073709551616") == Natural::pow(2, 64));
    CHECK(Natural::pow(4, 32).to_string() == "18446744073709551616");
    CHECK(Natural(0).is_zero());
    CHECK(Natural(3) < Natural(10));
    CHECK_THROWS_AS((void)Natural::from_string("12a"), std::invalid_argument);
    CHECK_THROWS_AS((void)Natural::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS((void)Natural::from_string("-1"), std::invalid_argument);
}
