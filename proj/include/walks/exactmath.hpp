#pragma once

#include <cstdint>
#include <span>

#include "walks/natural.hpp"

namespace walks {

/// n choose k; zero whenever k lies outside [0, n]. Requires n >= 0.
Natural binomial(std::int64_t n, std::int64_t k);

/// n! / (parts[0]! parts[1]! ...). Throws std::invalid_argument unless the
/// parts are nonnegative and sum to n.
Natural multinomial(std::int64_t n, std::span<const std::int64_t> parts);
Natural multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts);

/// C_i = binom(2i, i) / (i + 1).
Natural catalan(std::int64_t i);

/// binom(2i, i): returning one-dimensional walks of length 2i.
Natural central_binomial_even(std::int64_t i);

/// binom(j, floor(j/2)): nonnegative one-dimensional walks of length j.
Natural central_binomial_any(std::int64_t j);

/// Motzkin number, sum over i of C_i binom(n, 2i).
Natural motzkin(std::int64_t n);

}  // namespace walks
