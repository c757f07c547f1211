#include "walks/bijections.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace walks::bijections {

namespace {

bool is_dyck(const std::vector<DyckStep>& word) {
    long height = 0;
    for (auto s : word) {
        height += s == DyckStep::Up ? 1 : -1;
        if (height < 0) {
            return false;
        }
    }
    return height == 0;
}

constexpr Direction kNorth{0, +1};
constexpr Direction kSouth{0, -1};
constexpr Direction kEast{1, +1};
constexpr Direction kWest{1, -1};

void require_touchard(const Walk& walk) {
    if (auto v = validate(walk, touchard_type())) {
        throw InputError("not a valid " + touchard_type().letters() + " walk: step " +
                         std::to_string(v->step_index) + ": " + v->reason());
    }
}

}  // namespace

DyckPath::DyckPath(std::vector<DyckStep> word) : word_(std::move(word)) {
    if (!is_dyck(word_)) {
        throw InputError("not a Dyck path: " + to_string());
    }
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<DyckStep> word;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            continue;
        }
        if (c == 'N') {
            word.push_back(DyckStep::Up);
        } else if (c == 'S') {
            word.push_back(DyckStep::Down);
        } else {
            throw ParseError("unrecognized Dyck step '" + std::string(1, text[pos]) + "' at offset " +
                                 std::to_string(pos),
                             pos);
        }
    }
    return DyckPath(std::move(word));
}

std::string DyckPath::to_string() const {
    std::string s;
    s.reserve(word_.size());
    for (auto step : word_) {
        s.push_back(static_cast<char>(step));
    }
    return s;
}

const WalkType& touchard_type() {
    static const WalkType type = WalkType::parse("ae");
    return type;
}

Walk dyck_to_touchard(const DyckPath& path) {
    const auto& w = path.word();
    if (w.empty()) {
        throw InputError("the empty Dyck path has no corresponding walk");
    }
    Walk walk;
    for (std::size_t i = 1; i + 2 < w.size(); i += 2) {
        const bool first_up = w[i] == DyckStep::Up;
        const bool second_up = w[i + 1] == DyckStep::Up;
        if (first_up && second_up) {
            walk.steps.push_back(kNorth);
        } else if (!first_up && !second_up) {
            walk.steps.push_back(kSouth);
        } else if (first_up) {
            walk.steps.push_back(kEast);
        } else {
            walk.steps.push_back(kWest);
        }
    }
    return walk;
}

DyckPath touchard_to_dyck(const Walk& walk) {
    require_touchard(walk);
    std::vector<DyckStep> word;
    word.reserve(2 * walk.size() + 2);
    word.push_back(DyckStep::Up);
    for (const auto& step : walk.steps) {
        const bool vertical = step.dim == 0;
        const bool positive = step.sign > 0;
        if (vertical) {
            word.push_back(positive ? DyckStep::Up : DyckStep::Down);
            word.push_back(positive ? DyckStep::Up : DyckStep::Down);
        } else {
            word.push_back(positive ? DyckStep::Up : DyckStep::Down);
            word.push_back(positive ? DyckStep::Down : DyckStep::Up);
        }
    }
    word.push_back(DyckStep::Down);
    return DyckPath(std::move(word));
}

std::vector<MotzkinStep> to_two_colored_motzkin(const Walk& walk) {
    require_touchard(walk);
    std::vector<MotzkinStep> out;
    out.reserve(walk.size());
    for (const auto& step : walk.steps) {
        if (step == kNorth) {
            out.push_back(MotzkinStep::Up);
        } else if (step == kSouth) {
            out.push_back(MotzkinStep::Down);
        } else if (step == kEast) {
            out.push_back(MotzkinStep::FlatColor1);
        } else {
            out.push_back(MotzkinStep::FlatColor2);
        }
    }
    return out;
}

std::vector<DyckPath> enumerate_dyck(int length, const oracle::Guards& guards) {
    if (length < 0 || length % 2 != 0) {
        throw InputError("Dyck path length must be even and nonnegative, got " + std::to_string(length));
    }
    if (std::pow(2.0L, length) > static_cast<long double>(guards.max_candidates)) {
        throw GuardExceeded("enumerating Dyck paths of length " + std::to_string(length) + " exceeds the limit of " +
                            std::to_string(guards.max_candidates) + " candidate words");
    }
    const int half = length / 2;
    std::vector<DyckPath> out;
    std::vector<DyckStep> word;
    std::function<void(int, int)> extend = [&](int ups, int downs) {
        if (ups == half && downs == half) {
            out.emplace_back(word);
            return;
        }
        if (ups < half) {
            word.push_back(DyckStep::Up);
            extend(ups + 1, downs);
            word.pop_back();
        }
        if (downs < ups) {
            word.push_back(DyckStep::Down);
            extend(ups, downs + 1);
            word.pop_back();
        }
    };
    extend(0, 0);
    return out;
}

}  // namespace walks::bijections
