#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topmono/core.hpp"

namespace topmono {

// Which branch of the top-monotonicity consequent failed: the checked voter
// owed the middle alternative at least indifference, or strict preference.
enum class TmViolationReason { IndifferenceRequired, StrictRequired };

struct TmViolation {
    AltVec witness_set;   // the quantified subset S, sorted
    std::size_t voter_i;  // 0-based index; the consequent constrains this voter
    std::size_t voter_j;
    Alternative x;  // a top of voter_i on S
    Alternative y;  // a top of voter_j on S, strictly between x and z
    Alternative z;  // member of S
    TmViolationReason reason;
};

struct VerifyStats {
    std::uint64_t tuple_checks = 0;
};

// Order-independent part of the verification scan (triple family, per-voter
// top sets and ranks), reusable across many candidate orders.
class VerifyContext {
public:
    explicit VerifyContext(const WeakProfile& profile);

    // First violation in deterministic scan order (family members sorted,
    // voter indices ascending, alternatives sorted), or nullopt when the
    // profile is top monotonic with respect to `order`.
    std::optional<TmViolation> check(const LinearOrder& order,
                                     VerifyStats* stats = nullptr) const;

    const std::vector<AltVec>& family() const noexcept { return family_; }

private:
    const WeakProfile& profile_;
    std::vector<AltVec> family_;
    std::vector<std::vector<std::size_t>> members_;        // family member -> alt indices
    std::vector<std::vector<std::vector<std::size_t>>> tops_;  // [set][voter] -> alt indices
    std::vector<std::vector<std::size_t>> ranks_;          // [voter][alt index]
};

// Checks whether `profile` satisfies the top-monotonicity conditions with
// respect to the candidate order. The order must range over exactly the
// profile's alternatives.
std::optional<TmViolation> verify_tm(const WeakProfile& profile, const LinearOrder& order,
                                     VerifyStats* stats = nullptr);

}  // namespace topmono
