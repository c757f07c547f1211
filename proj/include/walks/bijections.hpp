#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "walks/oracle.hpp"
#include "walks/walk.hpp"

namespace walks::bijections {

enum class DyckStep : char { Up = 'N', Down = 'S' };

/// Up/down word whose prefix sums never go negative and whose total is zero.
class DyckPath {
public:
    /// Throws InputError when the word is not a Dyck path.
    explicit DyckPath(std::vector<DyckStep> word);

    /// Word over {N, S}; case- and whitespace-insensitive. Throws ParseError on
    /// other characters and InputError on an invalid path.
    static DyckPath parse(std::string_view text);

    [[nodiscard]] const std::vector<DyckStep>& word() const noexcept { return word_; }
    [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<DyckStep> word_;
};

/// The half-plane walk type ("ae") that the bijection targets.
[[nodiscard]] const WalkType& touchard_type();

/// Drops the leading N and trailing S, then rewrites disjoint pairs left to
/// right: NN -> N, SS -> S, NS -> E, SN -> W. Rejects the empty path.
[[nodiscard]] Walk dyck_to_touchard(const DyckPath& path);

/// Inverse: N -> NN, S -> SS, E -> NS, W -> SN, wrapped in N ... S.
/// Rejects walks that are not valid for touchard_type().
[[nodiscard]] DyckPath touchard_to_dyck(const Walk& walk);

enum class MotzkinStep { Up, Down, FlatColor1, FlatColor2 };

/// N -> Up, S -> Down, E -> FlatColor1, W -> FlatColor2.
[[nodiscard]] std::vector<MotzkinStep> to_two_colored_motzkin(const Walk& walk);

/// All Dyck words of the given even length, lexicographic with N < S.
[[nodiscard]] std::vector<DyckPath> enumerate_dyck(int length, const oracle::Guards& guards = {});

}  // namespace walks::bijections
