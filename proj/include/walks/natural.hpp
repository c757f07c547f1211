#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace walks {

/// Nonnegative integer of unbounded magnitude. Every count in the library is
/// a Natural; there is no fixed-width path that could overflow.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    explicit Natural(mpz_class v) : value_(std::move(v)) {}

    /// Parses a decimal string of digits. Throws std::invalid_argument otherwise.
    static Natural from_string(std::string_view decimal);

    static Natural pow(std::uint64_t base, std::uint64_t exponent);

    Natural& operator+=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

    /// Division that must leave no remainder. The remainder is checked in
    /// debug builds only.
    [[nodiscard]] Natural divexact(const Natural& divisor) const;
    [[nodiscard]] bool divisible_by(const Natural& divisor) const;

    [[nodiscard]] bool is_zero() const { return value_ == 0; }
    [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

private:
    mpz_class value_{0};
};

}  // namespace walks
