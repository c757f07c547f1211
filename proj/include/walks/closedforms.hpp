#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "walks/natural.hpp"
#include "walks/walk.hpp"

namespace walks::closedforms {

/// Addends (i, C_i 2^(n-2i) binom(n, 2i)) for i = 0..floor(n/2); they sum to
/// C_(n+1).
[[nodiscard]] std::vector<std::pair<int, Natural>> touchard_terms(int n);

/// Sums the per-dimension factors over every split of the n steps between
/// dimensions: C_i for an excursion on 2i steps, binom(2i, i) for a bridge on
/// 2i steps, binom(j, floor(j/2)) for a meander on j steps, r^u for the u steps
/// left to the r unconstrained directions (u must be 0 when r = 0), and the
/// multinomial choice placing each group among the n steps.
[[nodiscard]] Natural general_count(const WalkType& type, int n);

/// Returning to the origin in an excursion/bridge plane: the sum
/// sum_i C_(n/2-i) binom(n, 2i) binom(2i, i) and its product C_(n/2) binom(n+1, n/2).
/// Both reject odd n with InputError.
[[nodiscard]] Natural ab_sum(int n);
[[nodiscard]] Natural ab_closed(int n);

/// Quadrant walks returning to the origin: sum_i C_i C_(n/2-i) binom(n, 2i)
/// and C_(n/2) C_(n/2+1). Odd n rejected.
[[nodiscard]] Natural aa_sum(int n);
[[nodiscard]] Natural aa_closed(int n);

/// sum_i C_i binom(n-2i, floor((n-2i)/2)) binom(n, 2i).
[[nodiscard]] Natural quadrant_axis_sum(int n);

/// binom(2n+1, n).
[[nodiscard]] Natural halfplane_closed(int n);

/// Double sum over i, j of 2^(n-2i-j)/(i+1) binom(2i,i) binom(j, floor(j/2))
/// multinomial(n; 2i, j, n-2i-j).
[[nodiscard]] Natural ace3d_count(int n);
/// Same count via multinomial(n; i, i, floor(j/2), ceil(j/2), n-2i-j).
[[nodiscard]] Natural ace3d_count_expanded(int n);

/// The six successive expressions of the binomial-cancellation/Vandermonde
/// rewrite of ab_sum, each evaluated independently. Odd n rejected.
[[nodiscard]] std::array<Natural, 6> vandermonde_chain(int n);

}  // namespace walks::closedforms
