#pragma once

#include <cstdint>
#include <vector>

#include "walks/natural.hpp"
#include "walks/walk.hpp"

namespace walks::oracle {

/// Ceilings for the brute-force and DP oracles. Exceeding one throws
/// GuardExceeded instead of truncating.
struct Guards {
    std::uint64_t max_candidates = 10'000'000;  // (2 * dims)^n strings for enumerate
    std::uint64_t max_states = 100'000'000;     // memo entries for count_dp
};

/// All valid walks of length n, in lexicographic order of their token strings.
[[nodiscard]] std::vector<Walk> enumerate(const WalkType& type, int n, const Guards& guards = {});

/// Exact number of valid walks of length n by memoized DP over the heights of
/// the constrained (a, b, c) dimensions.
[[nodiscard]] Natural count_dp(const WalkType& type, int n, const Guards& guards = {});

/// count_dp for n = 0..n_max, sharing one memo table.
[[nodiscard]] std::vector<Natural> sequence_dp(const WalkType& type, int n_max, const Guards& guards = {});

}  // namespace walks::oracle
