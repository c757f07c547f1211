#include "walks/walk.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace walks {

namespace {

struct TokenPair {
    const char* positive;
    const char* negative;
};

constexpr std::array<TokenPair, kMaxDimensions> kTokens{{
    {"N", "S"},
    {"E", "W"},
    {"U", "D"},
    {"+3", "-3"},
}};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

bool matches_at(std::string_view text, std::size_t pos, std::string_view token) {
    if (text.size() - pos < token.size()) {
        return false;
    }
    for (std::size_t i = 0; i < token.size(); ++i) {
        if (upper(text[pos + i]) != token[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

WalkType WalkType::parse(std::string_view letters) {
    if (letters.empty()) {
        throw InputError("walk type must contain at least one letter");
    }
    WalkType t;
    for (char c : letters) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower < 'a' || lower > 'e') {
            throw InputError(std::string("unknown dimension letter '") + c + "' in walk type (expected a-e)");
        }
        t.dims_.push_back(static_cast<DimKind>(lower));
    }
    if (t.dims_.size() > kMaxDimensions) {
        throw InputError("walk types with more than " + std::to_string(kMaxDimensions) +
                         " dimensions are not supported");
    }
    std::sort(t.dims_.begin(), t.dims_.end());
    return t;
}

int WalkType::free_direction_count() const noexcept {
    int r = 0;
    for (auto k : dims_) {
        if (k == DimKind::OneWay) {
            r += 1;
        } else if (k == DimKind::Free) {
            r += 2;
        }
    }
    return r;
}

bool WalkType::returns_everywhere() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(), [](DimKind k) { return returns_to_zero(k); });
}

std::string WalkType::letters() const {
    std::string s;
    for (auto k : dims_) {
        s.push_back(letter(k));
    }
    return s;
}

std::vector<AlphabetEntry> step_alphabet(const WalkType& type) {
    std::vector<AlphabetEntry> out;
    for (std::size_t d = 0; d < type.dimension_count(); ++d) {
        const auto dim = static_cast<std::uint8_t>(d);
        out.push_back({kTokens[d].positive, {dim, +1}});
        if (type.kind(d) != DimKind::OneWay) {
            out.push_back({kTokens[d].negative, {dim, -1}});
        }
    }
    return out;
}

Walk parse_walk(std::string_view text, const WalkType& type) {
    const auto alphabet = step_alphabet(type);
    Walk walk;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        const AlphabetEntry* hit = nullptr;
        for (const auto& entry : alphabet) {
            if (matches_at(text, pos, entry.token)) {
                hit = &entry;
                break;
            }
        }
        if (hit == nullptr) {
            throw ParseError("unrecognized step '" + std::string(1, text[pos]) + "' at offset " +
                                 std::to_string(pos) + " for walk type " + type.letters(),
                             pos);
        }
        walk.steps.push_back(hit->direction);
        pos += hit->token.size();
    }
    return walk;
}

std::string format_walk(const Walk& walk, const WalkType& type) {
    std::string out;
    for (const auto& step : walk.steps) {
        if (step.dim >= type.dimension_count()) {
            throw InputError("step in dimension " + std::to_string(step.dim) + " outside walk type " +
                             type.letters());
        }
        out += step.sign > 0 ? kTokens[step.dim].positive : kTokens[step.dim].negative;
    }
    return out;
}

std::string Violation::reason() const {
    switch (kind) {
        case Kind::BelowZero:
            return "height below zero in dimension " + std::to_string(dim);
        case Kind::NonzeroFinal:
            return "nonzero final height in dimension " + std::to_string(dim);
        case Kind::IllegalDirection:
            return "illegal direction in dimension " + std::to_string(dim);
    }
    return {};
}

std::optional<Violation> validate(const Walk& walk, const WalkType& type) {
    HeightState state(type.dimension_count());
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const auto step = walk.steps[i];
        if (step.dim >= type.dimension_count() || (step.sign != 1 && step.sign != -1) ||
            (step.sign < 0 && type.kind(step.dim) == DimKind::OneWay)) {
            return Violation{Violation::Kind::IllegalDirection, i, step.dim};
        }
        state.apply(step);
        if (stays_nonnegative(type.kind(step.dim)) && state[step.dim] < 0) {
            return Violation{Violation::Kind::BelowZero, i, step.dim};
        }
    }
    for (std::size_t d = 0; d < type.dimension_count(); ++d) {
        if (returns_to_zero(type.kind(d)) && state[d] != 0) {
            return Violation{Violation::Kind::NonzeroFinal, walk.size(), d};
        }
    }
    return std::nullopt;
}

}  // namespace walks
