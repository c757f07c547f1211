#include "walks/closedforms.hpp"

#include <functional>
#include <stdexcept>

#include "walks/exactmath.hpp"

namespace walks::closedforms {

namespace {

void require_nonnegative(int n) {
    if (n < 0) {
        throw InputError("walk length must be nonnegative, got " + std::to_string(n));
    }
}

int require_even(int n) {
    require_nonnegative(n);
    if (n % 2 != 0) {
        throw InputError("closed form defined for even n only, got " + std::to_string(n));
    }
    return n / 2;
}

Natural nat(std::int64_t v) { return Natural(static_cast<std::uint64_t>(v)); }

/// Exact quotient; a remainder means the formula was transcribed wrongly.
Natural quotient(const Natural& numerator, std::int64_t denominator) {
    const auto d = nat(denominator);
    if (!numerator.divisible_by(d)) {
        throw std::logic_error("inexact division of " + numerator.to_string() + " by " + d.to_string());
    }
    return numerator.divexact(d);
}

}  // namespace

std::vector<std::pair<int, Natural>> touchard_terms(int n) {
    require_nonnegative(n);
    std::vector<std::pair<int, Natural>> terms;
    for (int i = 0; 2 * i <= n; ++i) {
        terms.emplace_back(i, catalan(i) * Natural::pow(2, n - 2 * i) * binomial(n, 2 * i));
    }
    return terms;
}

Natural general_count(const WalkType& type, int n) {
    require_nonnegative(n);
    std::vector<DimKind> constrained;
    for (auto k : type.dims()) {
        if (is_constrained(k)) {
            constrained.push_back(k);
        }
    }
    const auto r = static_cast<std::uint64_t>(type.free_direction_count());

    std::vector<std::int64_t> parts;
    Natural total = 0;
    // Picks the step budget of constrained dimension d, then recurses.
    std::function<void(std::size_t, std::int64_t, const Natural&)> split =
        [&](std::size_t d, std::int64_t used, const Natural& factor) {
            if (d == constrained.size()) {
                const std::int64_t rest = n - used;
                if (r == 0 && rest != 0) {
                    return;
                }
                parts.push_back(rest);
                total += factor * Natural::pow(r, static_cast<std::uint64_t>(rest)) * multinomial(n, parts);
                parts.pop_back();
                return;
            }
            const bool paired = returns_to_zero(constrained[d]);
            const std::int64_t stride = paired ? 2 : 1;
            for (std::int64_t steps = 0; used + steps <= n; steps += stride) {
                Natural f;
                switch (constrained[d]) {
                    case DimKind::Excursion: f = catalan(steps / 2); break;
                    case DimKind::Bridge: f = central_binomial_even(steps / 2); break;
                    default: f = central_binomial_any(steps); break;
                }
                parts.push_back(steps);
                split(d + 1, used + steps, factor * f);
                parts.pop_back();
            }
        };
    split(0, 0, 1);
    return total;
}

Natural ab_sum(int n) {
    const int h = require_even(n);
    Natural sum = 0;
    for (int i = 0; i <= h; ++i) {
        sum += catalan(h - i) * binomial(n, 2 * i) * binomial(2 * i, i);
    }
    return sum;
}

Natural ab_closed(int n) {
    const int h = require_even(n);
    return catalan(h) * binomial(n + 1, h);
}

Natural aa_sum(int n) {
    const int h = require_even(n);
    Natural sum = 0;
    for (int i = 0; i <= h; ++i) {
        sum += catalan(i) * catalan(h - i) * binomial(n, 2 * i);
    }
    return sum;
}

Natural aa_closed(int n) {
    const int h = require_even(n);
    return catalan(h) * catalan(h + 1);
}

Natural quadrant_axis_sum(int n) {
    require_nonnegative(n);
    Natural sum = 0;
    for (int i = 0; 2 * i <= n; ++i) {
        sum += catalan(i) * central_binomial_any(n - 2 * i) * binomial(n, 2 * i);
    }
    return sum;
}

Natural halfplane_closed(int n) {
    require_nonnegative(n);
    return binomial(2 * n + 1, n);
}

Natural ace3d_count(int n) {
    require_nonnegative(n);
    Natural sum = 0;
    for (int i = 0; 2 * i <= n; ++i) {
        for (int j = 0; 2 * i + j <= n; ++j) {
            const int rest = n - 2 * i - j;
            const Natural numerator = Natural::pow(2, rest) * binomial(2 * i, i) * binomial(j, j / 2) *
                                      multinomial(n, {2 * i, j, rest});
            sum += quotient(numerator, i + 1);
        }
    }
    return sum;
}

Natural ace3d_count_expanded(int n) {
    require_nonnegative(n);
    Natural sum = 0;
    for (int i = 0; 2 * i <= n; ++i) {
        for (int j = 0; 2 * i + j <= n; ++j) {
            const int rest = n - 2 * i - j;
            const Natural numerator = Natural::pow(2, rest) * multinomial(n, {i, i, j / 2, (j + 1) / 2, rest});
            sum += quotient(numerator, i + 1);
        }
    }
    return sum;
}

std::array<Natural, 6> vandermonde_chain(int n) {
    const int h = require_even(n);
    std::array<Natural, 6> out{};
    for (int i = 0; i <= h; ++i) {
        const int w = h - i + 1;
        out[0] += quotient(binomial(n - 2 * i, h - i) * binomial(n, 2 * i) * binomial(2 * i, i), w);
        out[1] += quotient(binomial(n - 2 * i, h - i) * binomial(n, i) * binomial(n - i, i), w);
        out[2] += quotient(binomial(n, i) * binomial(n - i, h - i) * binomial(h, i), w);
        out[3] += quotient(binomial(n, h) * binomial(h, i) * binomial(h, i), w);
    }
    Natural convolution = 0;
    for (int i = 0; i <= h; ++i) {
        convolution += binomial(h, i) * binomial(h + 1, h - i);
    }
    out[4] = quotient(binomial(n, h) * convolution, h + 1);
    out[5] = quotient(binomial(n, h) * binomial(n + 1, h), h + 1);
    return out;
}

}  // namespace walks::closedforms
