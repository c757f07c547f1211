#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walks/errors.hpp"

namespace walks {

/// Per-dimension constraint class, written with the letters a-e.
enum class DimKind : char {
    Excursion = 'a',  // stays >= 0 and ends at 0
    Bridge = 'b',     // ends at 0
    Meander = 'c',    // stays >= 0
    OneWay = 'd',     // positive direction only
    Free = 'e',       // both directions, unconstrained
};

[[nodiscard]] constexpr char letter(DimKind k) noexcept { return static_cast<char>(k); }
[[nodiscard]] constexpr bool stays_nonnegative(DimKind k) noexcept {
    return k == DimKind::Excursion || k == DimKind::Meander;
}
[[nodiscard]] constexpr bool returns_to_zero(DimKind k) noexcept {
    return k == DimKind::Excursion || k == DimKind::Bridge;
}
[[nodiscard]] constexpr bool is_constrained(DimKind k) noexcept {
    return stays_nonnegative(k) || returns_to_zero(k);
}

inline constexpr std::size_t kMaxDimensions = 4;

/// A walk family: one constraint class per dimension, kept in canonical
/// (sorted) letter order so that "ea" and "ae" are the same type.
class WalkType {
public:
    /// Throws InputError on an empty string, unknown letters or more than
    /// kMaxDimensions dimensions.
    static WalkType parse(std::string_view letters);

    [[nodiscard]] std::span<const DimKind> dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t dimension_count() const noexcept { return dims_.size(); }
    [[nodiscard]] DimKind kind(std::size_t dim) const { return dims_.at(dim); }

    /// Number of unconstrained directions: one per OneWay, two per Free.
    [[nodiscard]] int free_direction_count() const noexcept;

    /// True when every dimension is an excursion or a bridge.
    [[nodiscard]] bool returns_everywhere() const noexcept;

    [[nodiscard]] std::string letters() const;

    friend bool operator==(const WalkType&, const WalkType&) = default;

private:
    std::vector<DimKind> dims_;
};

[[nodiscard]] inline WalkType canonicalize_type(std::string_view letters) { return WalkType::parse(letters); }

struct Direction {
    std::uint8_t dim = 0;
    std::int8_t sign = +1;

    friend auto operator<=>(const Direction&, const Direction&) = default;
};

struct Walk {
    std::vector<Direction> steps;

    [[nodiscard]] std::size_t size() const noexcept { return steps.size(); }
    [[nodiscard]] bool empty() const noexcept { return steps.empty(); }

    friend bool operator==(const Walk&, const Walk&) = default;
};

struct AlphabetEntry {
    std::string token;
    Direction direction;
};

/// Printable step alphabet. Dimensions 0..3 use N/S, E/W, U/D and +3/-3 in
/// canonical type order; a one-way dimension exposes only its positive token.
[[nodiscard]] std::vector<AlphabetEntry> step_alphabet(const WalkType& type);

/// Case-insensitive, whitespace-insensitive. Throws ParseError carrying the
/// byte offset of the first unrecognized token.
[[nodiscard]] Walk parse_walk(std::string_view text, const WalkType& type);

[[nodiscard]] std::string format_walk(const Walk& walk, const WalkType& type);

/// Running sums per dimension.
class HeightState {
public:
    explicit HeightState(std::size_t dimensions) : heights_(dimensions, 0) {}

    void apply(Direction d) { heights_.at(d.dim) += d.sign; }
    [[nodiscard]] std::int64_t operator[](std::size_t dim) const { return heights_.at(dim); }
    [[nodiscard]] std::span<const std::int64_t> heights() const noexcept { return heights_; }

private:
    std::vector<std::int64_t> heights_;
};

struct Violation {
    enum class Kind { BelowZero, NonzeroFinal, IllegalDirection };

    Kind kind;
    std::size_t step_index;  // first offending step, or the walk length for NonzeroFinal
    std::size_t dim;

    [[nodiscard]] std::string reason() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// std::nullopt when the walk is valid for the type. Prefix violations are
/// reported at the first step that takes a nonnegative dimension below zero;
/// otherwise the first returning dimension that ends away from zero is
/// reported with step_index == walk.size().
[[nodiscard]] std::optional<Violation> validate(const Walk& walk, const WalkType& type);

}  // namespace walks
