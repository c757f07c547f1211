#include <doctest.h>

#include "../support/oracles.hpp"
#include "walks/closedforms.hpp"
#include "walks/exactmath.hpp"
#include "walks/oracle.hpp"

using namespace walks;
using namespace walks::closedforms;

TEST_CASE("touchard_terms") {
    const auto four = touchard_terms(4);
    REQUIRE(four.size() == 3);
    CHECK(four[0] == std::pair<int, Natural>{0, 16});
    CHECK(four[1] == std::pair<int, Natural>{1, 24});
    CHECK(four[2] == std::pair<int, Natural>{2, 2});
    CHECK(touchard_terms(0) == std::vector<std::pair<int, Natural>>{{0, 1}});

    for (int n = 0; n <= 60; ++n) {
        Natural sum = 0;
        for (const auto& [i, term] : touchard_terms(n)) {
            REQUIRE_FALSE(term.is_zero());
            sum += term;
        }
        REQUIRE(sum == catalan(n + 1));
    }
    Natural ten = 0;
    for (const auto& [i, term] : touchard_terms(10)) {
        ten += term;
    }
    CHECK(ten == Natural(58786));
}

TEST_CASE("general_count examples") {
    CHECK(general_count(WalkType::parse("ae"), 4) == Natural(42));
    CHECK(general_count(WalkType::parse("ab"), 2) == Natural(3));
    CHECK(general_count(WalkType::parse("ac"), 3) == Natural(6));
    CHECK(general_count(WalkType::parse("aaa"), 5).is_zero());
    CHECK(general_count(WalkType::parse("b"), 0) == Natural(1));
    for (int n = 0; n <= 12; ++n) {
        REQUIRE(general_count(WalkType::parse("ad"), n) == motzkin(n));
    }
}

TEST_CASE("general_count matches the DP oracle") {
    for (const auto& type : walks::testing::all_type_strings(3)) {
        const auto t = WalkType::parse(type);
        const int n_max = t.dimension_count() <= 2 ? 12 : 8;
        const auto dp = oracle::sequence_dp(t, n_max);
        for (int n = 0; n <= n_max; ++n) {
            REQUIRE_MESSAGE(general_count(t, n) == dp[static_cast<std::size_t>(n)], type << " n=" << n);
        }
    }
}

TEST_CASE("ab and aa closed forms") {
    CHECK(ab_closed(0) == Natural(1));
    CHECK(ab_closed(2) == Natural(3));
    CHECK(ab_closed(4) == Natural(20));
    CHECK(ab_closed(4) == Natural(walks::testing::brute_count("ab", 4)));
    CHECK(aa_closed(0) == Natural(1));
    CHECK(aa_closed(2) == Natural(2));
    CHECK(aa_closed(4) == Natural(10));
    CHECK(aa_closed(4) == Natural(walks::testing::brute_count("aa", 4)));
    CHECK_THROWS_AS((void)ab_closed(3), InputError);
    CHECK_THROWS_AS((void)aa_sum(5), InputError);

    for (int n = 0; n <= 24; n += 2) {
        REQUIRE(ab_sum(n) == ab_closed(n));
        REQUIRE(aa_sum(n) == aa_closed(n));
    }
}

TEST_CASE("quadrant_axis_sum and halfplane_closed") {
    CHECK(quadrant_axis_sum(1) == Natural(1));
    CHECK(quadrant_axis_sum(2) == Natural(3));
    CHECK(quadrant_axis_sum(3) == Natural(6));
    CHECK(halfplane_closed(0) == Natural(1));
    CHECK(halfplane_closed(1) == Natural(3));
    CHECK(halfplane_closed(2) == Natural(10));
    CHECK(halfplane_closed(2) == Natural(walks::testing::brute_count("ce", 2)));

    const auto ac = WalkType::parse("ac");
    const auto ce = WalkType::parse("ce");
    for (int n = 0; n <= 12; ++n) {
        REQUIRE(quadrant_axis_sum(n) == general_count(ac, n));
        REQUIRE(halfplane_closed(n) == general_count(ce, n));
    }
    // The quadrant/axis sum is not binom(2n+1, n); that value belongs to ce.
    CHECK_FALSE(quadrant_axis_sum(1) == halfplane_closed(1));
}

TEST_CASE("ace3d_count") {
    CHECK(ace3d_count(0) == Natural(1));
    CHECK(ace3d_count(1) == Natural(3));
    CHECK(ace3d_count(4) == Natural(188));
    const auto ace = WalkType::parse("ace");
    for (int n = 0; n <= 10; ++n) {
        REQUIRE(ace3d_count(n) == general_count(ace, n));
        REQUIRE(ace3d_count_expanded(n) == ace3d_count(n));
    }
}

TEST_CASE("vandermonde_chain") {
    CHECK(vandermonde_chain(0) == std::array<Natural, 6>{1, 1, 1, 1, 1, 1});
    CHECK(vandermonde_chain(2) == std::array<Natural, 6>{3, 3, 3, 3, 3, 3});
    const auto eight = vandermonde_chain(8);
    for (const auto& v : eight) {
        CHECK(v == catalan(4) * binomial(9, 4));
    }
    for (int n = 0; n <= 20; n += 2) {
        const auto chain = vandermonde_chain(n);
        for (const auto& v : chain) {
            REQUIRE(v == ab_closed(n));
        }
    }
    CHECK_THROWS_AS((void)vandermonde_chain(7), InputError);
}
