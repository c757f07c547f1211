#include "walks/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace walks::oracle {

namespace {

void require_length(int n) {
    if (n < 0) {
        throw InputError("walk length must be nonnegative, got " + std::to_string(n));
    }
}

struct StateKey {
    std::array<std::int32_t, kMaxDimensions + 1> fields{};  // steps remaining, then heights

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const noexcept {
        std::size_t h = 0;
        for (auto f : key.fields) {
            h = h * 1000003U ^ std::hash<std::int32_t>{}(f);
        }
        return h;
    }
};

/// Counts completions from a height state. The unconstrained directions do
/// not enter the state; they contribute a factor r per step.
class DpCounter {
public:
    DpCounter(const WalkType& type, const Guards& guards) : guards_(guards), branch_(type.free_direction_count()) {
        for (auto k : type.dims()) {
            if (is_constrained(k)) {
                constrained_.push_back(k);
            }
        }
    }

    Natural count(int n) {
        std::array<std::int32_t, kMaxDimensions> heights{};
        return completions(n, heights);
    }

private:
    bool dead(std::int32_t remaining, const std::array<std::int32_t, kMaxDimensions>& heights) const {
        for (std::size_t d = 0; d < constrained_.size(); ++d) {
            if (returns_to_zero(constrained_[d]) && std::abs(heights[d]) > remaining) {
                return true;
            }
        }
        return false;
    }

    Natural completions(std::int32_t remaining, std::array<std::int32_t, kMaxDimensions> heights) {
        if (dead(remaining, heights)) {
            return 0;
        }
        if (remaining == 0) {
            return 1;
        }
        StateKey key;
        key.fields[0] = remaining;
        std::copy(heights.begin(), heights.end(), key.fields.begin() + 1);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }

        Natural total = 0;
        if (branch_ > 0) {
            total += completions(remaining - 1, heights) * Natural(static_cast<std::uint64_t>(branch_));
        }
        for (std::size_t d = 0; d < constrained_.size(); ++d) {
            for (int sign : {+1, -1}) {
                auto next = heights;
                next[d] += sign;
                if (stays_nonnegative(constrained_[d]) && next[d] < 0) {
                    continue;
                }
                total += completions(remaining - 1, next);
            }
        }

        if (memo_.size() >= guards_.max_states) {
            throw GuardExceeded("DP memo table exceeds " + std::to_string(guards_.max_states) +
                                " states; raise WALKS_MAX_STATES to continue");
        }
        memo_.emplace(key, total);
        return total;
    }

    Guards guards_;
    int branch_;
    std::vector<DimKind> constrained_;
    std::unordered_map<StateKey, Natural, StateKeyHash> memo_;
};

/// Depth-first scan over the sorted alphabet; pruning dead prefixes keeps
/// lexicographic order because every survivor is still visited in order.
class Enumerator {
public:
    Enumerator(const WalkType& type, int n) : type_(type), n_(n), state_(type.dimension_count()) {
        alphabet_ = step_alphabet(type);
        std::sort(alphabet_.begin(), alphabet_.end(),
                  [](const AlphabetEntry& a, const AlphabetEntry& b) { return a.token < b.token; });
    }

    std::vector<Walk> run() {
        extend();
        return std::move(out_);
    }

private:
    bool hopeless() const {
        const auto remaining = static_cast<std::int64_t>(n_) - static_cast<std::int64_t>(current_.size());
        for (std::size_t d = 0; d < type_.dimension_count(); ++d) {
            const auto h = state_[d];
            if (stays_nonnegative(type_.kind(d)) && h < 0) {
                return true;
            }
            if (returns_to_zero(type_.kind(d)) && std::abs(h) > remaining) {
                return true;
            }
        }
        return false;
    }

    void extend() {
        if (hopeless()) {
            return;
        }
        if (current_.size() == static_cast<std::size_t>(n_)) {
            out_.push_back(current_);
            return;
        }
        for (const auto& entry : alphabet_) {
            current_.steps.push_back(entry.direction);
            state_.apply(entry.direction);
            extend();
            state_.apply({entry.direction.dim, static_cast<std::int8_t>(-entry.direction.sign)});
            current_.steps.pop_back();
        }
    }

    const WalkType& type_;
    int n_;
    std::vector<AlphabetEntry> alphabet_;
    HeightState state_;
    Walk current_;
    std::vector<Walk> out_;
};

}  // namespace

std::vector<Walk> enumerate(const WalkType& type, int n, const Guards& guards) {
    require_length(n);
    const long double candidates = std::pow(2.0L * static_cast<long double>(type.dimension_count()), n);
    if (candidates > static_cast<long double>(guards.max_candidates)) {
        std::ostringstream msg;
        msg << "enumerating type " << type.letters() << " at n = " << n << " would scan about " << std::scientific
            << static_cast<double>(candidates) << " candidate strings (limit " << guards.max_candidates
            << "; raise --max-brute)";
        throw GuardExceeded(msg.str());
    }
    return Enumerator(type, n).run();
}

Natural count_dp(const WalkType& type, int n, const Guards& guards) {
    require_length(n);
    return DpCounter(type, guards).count(n);
}

std::vector<Natural> sequence_dp(const WalkType& type, int n_max, const Guards& guards) {
    require_length(n_max);
    DpCounter counter(type, guards);
    std::vector<Natural> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(counter.count(n));
    }
    return out;
}

}  // namespace walks::oracle
