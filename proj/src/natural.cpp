#include "walks/natural.hpp"

#include <cassert>
#include <stdexcept>

namespace walks {

Natural::Natural(std::uint64_t v) {
    // mpz_class has no portable constructor for 64-bit values on every ABI.
    mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

Natural Natural::from_string(std::string_view decimal) {
    if (decimal.empty()) {
        throw std::invalid_argument("empty natural number literal");
    }
    for (char c : decimal) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a decimal natural number: " + std::string(decimal));
        }
    }
    return Natural(mpz_class(std::string(decimal), 10));
}

Natural Natural::pow(std::uint64_t base, std::uint64_t exponent) {
    mpz_class result;
    mpz_class b = Natural(base).value_;
    mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
    return Natural(std::move(result));
}

Natural& Natural::operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Natural Natural::divexact(const Natural& divisor) const {
    assert(divisible_by(divisor));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
    return Natural(std::move(q));
}

bool Natural::divisible_by(const Natural& divisor) const {
    return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

}  // namespace walks
