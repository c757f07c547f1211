#include "walks/exactmath.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace walks {

namespace {

void require_nonnegative(std::int64_t v, const char* what) {
    if (v < 0) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(v));
    }
}

}  // namespace

Natural binomial(std::int64_t n, std::int64_t k) {
    require_nonnegative(n, "binomial n");
    if (k < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Natural(std::move(r));
}

Natural multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
    require_nonnegative(n, "multinomial n");
    std::int64_t total = 0;
    for (auto p : parts) {
        require_nonnegative(p, "multinomial part");
        total += p;
    }
    if (total != n) {
        throw std::invalid_argument("multinomial parts sum to " + std::to_string(total) + ", expected " +
                                    std::to_string(n));
    }
    Natural result = 1;
    std::int64_t remaining = n;
    for (auto p : parts) {
        result *= binomial(remaining, p);
        remaining -= p;
    }
    return result;
}

Natural multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts) {
    return multinomial(n, std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Natural catalan(std::int64_t i) {
    require_nonnegative(i, "catalan index");
    return binomial(2 * i, i).divexact(Natural(static_cast<std::uint64_t>(i + 1)));
}

Natural central_binomial_even(std::int64_t i) {
    require_nonnegative(i, "central binomial index");
    return binomial(2 * i, i);
}

Natural central_binomial_any(std::int64_t j) {
    require_nonnegative(j, "central binomial index");
    return binomial(j, j / 2);
}

Natural motzkin(std::int64_t n) {
    require_nonnegative(n, "motzkin index");
    Natural sum = 0;
    for (std::int64_t i = 0; 2 * i <= n; ++i) {
        sum += catalan(i) * binomial(n, 2 * i);
    }
    return sum;
}

}  // namespace walks
