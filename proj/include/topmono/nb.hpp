#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topmono/core.hpp"

namespace topmono {

// Ordering constraint "the middle alternative may not sit strictly between
// the two outer alternatives". The outer pair is unordered and stored in
// sorted id order.
class NBConstraint {
public:
    NBConstraint(Alternative middle, Alternative outer_a, Alternative outer_b);

    const Alternative& middle() const noexcept { return middle_; }
    const std::pair<Alternative, Alternative>& outer() const noexcept { return outer_; }

    bool operator==(const NBConstraint& other) const {
        return middle_ == other.middle_ && outer_ == other.outer_;
    }
    std::strong_ordering operator<=>(const NBConstraint& other) const {
        if (auto c = middle_ <=> other.middle_; c != 0) return c;
        if (auto c = outer_.first <=> other.outer_.first; c != 0) return c;
        return outer_.second <=> other.outer_.second;
    }

private:
    Alternative middle_;
    std::pair<Alternative, Alternative> outer_;
};

// A set of non-betweenness constraints over a fixed element set.
// Constraints are deduplicated and kept in canonical sorted order.
class NBConstraintSet {
public:
    NBConstraintSet(AltVec elements, std::vector<NBConstraint> constraints);

    const AltVec& elements() const noexcept { return elements_; }
    const std::vector<NBConstraint>& constraints() const noexcept { return constraints_; }
    std::size_t size() const noexcept { return constraints_.size(); }
    bool empty() const noexcept { return constraints_.empty(); }

    bool operator==(const NBConstraintSet& other) const {
        return elements_ == other.elements_ && constraints_ == other.constraints_;
    }

private:
    AltVec elements_;  // sorted unique, non-empty
    std::vector<NBConstraint> constraints_;
};

// Reads off every constraint whose violation would block some candidate
// order: for each quantified subset, each ordered voter pair (i, j), each
// top x of i, top y of j and member z (pairwise distinct), the consequent
// voter i owes y over z is tested, and failure contributes (y, {x, z}).
// Elements of the result are the profile's alternatives.
NBConstraintSet extract_constraints(const WeakProfile& profile);

// First constraint (in canonical order) whose middle sits strictly between
// its outer pair under `order`, or nullopt when the order satisfies the set.
// The order must be a permutation of cs.elements().
std::optional<NBConstraint> order_violation(const LinearOrder& order,
                                            const NBConstraintSet& cs);

inline bool order_satisfies(const LinearOrder& order, const NBConstraintSet& cs) {
    return !order_violation(order, cs).has_value();
}

// Strong reading for strict partial orders: a constraint counts as forced
// only when the middle is strictly above both outers or strictly below both.
// Returns the first constraint not forced, or nullopt when all are.
std::optional<NBConstraint> partial_unforced(const StrictPartialOrder& order,
                                             const NBConstraintSet& cs);

inline bool partial_satisfies(const StrictPartialOrder& order, const NBConstraintSet& cs) {
    return !partial_unforced(order, cs).has_value();
}

struct SolveOptions {
    // Placements examined before the search gives up with BudgetError.
    std::uint64_t node_budget = 50'000'000;
    // Fixes the relative order of the two smallest elements; sound by the
    // reversal symmetry of non-betweenness, but the witness found may then
    // differ from the lexicographically first one.
    bool reversal_pruning = false;
};

struct SolveStats {
    std::uint64_t nodes = 0;
};

// Exact backtracking search for a linear order satisfying every constraint.
// Positions are filled greatest-first and candidates tried in ascending id
// order, so a satisfiable set yields the lexicographically first witness
// (unless reversal pruning is on). Unsatisfiable sets return nullopt.
std::optional<LinearOrder> solve_nb(const NBConstraintSet& cs, const SolveOptions& options = {},
                                    SolveStats* stats = nullptr);

// Oracle twin of solve_nb: scans all permutations in lexicographic order
// with no pruning. Capped at `max_elements` elements.
std::optional<LinearOrder> brute_force_nb(const NBConstraintSet& cs,
                                          std::size_t max_elements = 8);

}  // namespace topmono
