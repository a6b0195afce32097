#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topmono/core.hpp"

namespace topmono {

enum class PairVerdict { FirstWins, SecondWins, Tie };

// Head-to-head counts for one unordered pair, first < second by id.
struct PairwiseTally {
    Alternative first, second;
    std::size_t first_over_second = 0;
    std::size_t second_over_first = 0;
    std::size_t ties = 0;

    PairVerdict verdict() const {
        if (first_over_second > second_over_first) return PairVerdict::FirstWins;
        if (second_over_first > first_over_second) return PairVerdict::SecondWins;
        return PairVerdict::Tie;
    }
};

class MajorityRelation {
public:
    explicit MajorityRelation(std::vector<PairwiseTally> tallies);

    const std::vector<PairwiseTally>& tallies() const noexcept { return tallies_; }

    // Lookup is unordered: tally(a, b) and tally(b, a) return the same entry.
    const PairwiseTally& tally(const Alternative& a, const Alternative& b) const;

private:
    std::vector<PairwiseTally> tallies_;  // sorted by (first, second)
};

// True when every voter's preference falls off monotonically with distance
// from their peak along the axis, on each side separately. All voters must
// be linear; the axis must range over the profile's alternatives.
bool is_single_peaked_wrt(const WeakProfile& profile, const LinearOrder& axis);

// Lexicographically first axis the profile is single peaked with respect
// to, or nullopt. Exhaustive over all axes; capped at `max_alternatives`.
std::optional<LinearOrder> find_sp_axis(const WeakProfile& profile,
                                        std::size_t max_alternatives = 8);

// Every voter uses at most two indifference classes.
bool is_dichotomous(const WeakProfile& profile);

MajorityRelation majority_relation(const WeakProfile& profile);

// Alternatives that lose no head-to-head contest outright.
AltVec weak_condorcet_winners(const WeakProfile& profile);

enum class ProfileKind { RandomWeak, RandomLinear, Dichotomous, SinglePeaked };

struct GeneratedProfile {
    WeakProfile profile;
    std::optional<LinearOrder> axis;  // reported for single-peaked output
};

// Deterministic pseudo-random profile: identical (kind, m, n, seed) always
// yields identical output. Alternatives are named a, b, ..., z, aa, ab, ...
// and voters 1..n.
GeneratedProfile generate(ProfileKind kind, std::size_t m, std::size_t n, std::uint64_t seed);

std::string alternative_name(std::size_t index);

}  // namespace topmono
