#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topmono/errors.hpp"

namespace topmono {

// An alternative is identified by a symbolic name. Names may not be empty,
// may not contain whitespace, and may not use the characters reserved by the
// text format: > , { } | #
class Alternative {
public:
    explicit Alternative(std::string id);

    const std::string& id() const noexcept { return id_; }

    bool operator==(const Alternative& other) const noexcept { return id_ == other.id_; }
    std::strong_ordering operator<=>(const Alternative& other) const noexcept {
        return id_ <=> other.id_;
    }

private:
    std::string id_;
};

using AltVec = std::vector<Alternative>;

// Sorted, duplicate-free copy.
AltVec sorted_unique(AltVec values);

// A weak order: a sequence of indifference classes, most preferred first.
// The classes partition the order's alternative set.
class WeakOrder {
public:
    explicit WeakOrder(std::vector<AltVec> classes);

    const std::vector<AltVec>& classes() const noexcept { return classes_; }
    const AltVec& alternatives() const noexcept { return universe_; }
    std::size_t class_count() const noexcept { return classes_.size(); }

    // 0 is the most preferred class.
    std::size_t rank(const Alternative& a) const;

    bool strictly_prefers(const Alternative& a, const Alternative& b) const {
        return rank(a) < rank(b);
    }
    bool weakly_prefers(const Alternative& a, const Alternative& b) const {
        return rank(a) <= rank(b);
    }
    bool indifferent(const Alternative& a, const Alternative& b) const {
        return rank(a) == rank(b);
    }

    // True when every class is a singleton.
    bool is_linear() const noexcept;

    bool operator==(const WeakOrder& other) const { return classes_ == other.classes_; }

private:
    std::vector<AltVec> classes_;  // members sorted within each class
    AltVec universe_;              // sorted union of the classes
    std::unordered_map<std::string, std::size_t> ranks_;
};

// A strict partial order, stored transitively closed. Construction rejects
// cycles, reflexive pairs and alternatives outside the universe.
class StrictPartialOrder {
public:
    StrictPartialOrder(AltVec universe,
                       const std::vector<std::pair<Alternative, Alternative>>& pairs);

    const AltVec& alternatives() const noexcept { return universe_; }

    bool prefers(const Alternative& a, const Alternative& b) const;

    // The full transitive closure, sorted.
    std::vector<std::pair<Alternative, Alternative>> pairs() const;

    // The transitive reduction (unique for a finite strict partial order), sorted.
    std::vector<std::pair<Alternative, Alternative>> reduced_pairs() const;

    std::size_t size() const noexcept { return universe_.size(); }

    bool operator==(const StrictPartialOrder& other) const {
        return universe_ == other.universe_ && closure_ == other.closure_;
    }

private:
    std::size_t index(const Alternative& a) const;

    AltVec universe_;                         // sorted unique
    std::vector<std::vector<bool>> closure_;  // closure_[i][j]: universe_[i] > universe_[j]
};

// A linear order over a set of alternatives, greatest first.
class LinearOrder {
public:
    explicit LinearOrder(AltVec sequence);

    const AltVec& sequence() const noexcept { return sequence_; }
    const AltVec& alternatives() const noexcept { return universe_; }
    std::size_t size() const noexcept { return sequence_.size(); }

    // 0 is the greatest position.
    std::size_t position(const Alternative& a) const;

    bool above(const Alternative& a, const Alternative& b) const {
        return position(a) < position(b);
    }

    // True when b sits strictly between a and c (either direction).
    bool between(const Alternative& a, const Alternative& b, const Alternative& c) const;

    LinearOrder reversed() const;

    bool operator==(const LinearOrder& other) const { return sequence_ == other.sequence_; }

private:
    AltVec sequence_;
    AltVec universe_;  // sorted
    std::unordered_map<std::string, std::size_t> positions_;
};

template <typename Relation>
struct Voter {
    std::string name;
    Relation relation;

    bool operator==(const Voter& other) const {
        return name == other.name && relation == other.relation;
    }
};

// A preference profile: a non-empty alternative set plus a (possibly empty)
// list of named voters whose relations all range over exactly that set.
// Voter names may not be empty or contain whitespace or ':'.
template <typename Relation>
class BasicProfile {
public:
    BasicProfile(AltVec alternatives, std::vector<Voter<Relation>> voters);

    const AltVec& alternatives() const noexcept { return alternatives_; }
    const std::vector<Voter<Relation>>& voters() const noexcept { return voters_; }
    const Relation& relation(std::size_t i) const { return voters_.at(i).relation; }

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t voter_count() const noexcept { return voters_.size(); }

    bool operator==(const BasicProfile& other) const {
        return alternatives_ == other.alternatives_ && voters_ == other.voters_;
    }

private:
    AltVec alternatives_;  // sorted unique
    std::vector<Voter<Relation>> voters_;
};

using WeakProfile = BasicProfile<WeakOrder>;
using PartialProfile = BasicProfile<StrictPartialOrder>;

// Most preferred members of `subset` under a weak order: the members whose
// class rank is minimal. `subset` must be non-empty and lie inside the
// order's alternative set. Result is sorted.
AltVec top_set(const WeakOrder& order, const AltVec& subset);

// Maximal members of `subset` under a strict partial order: members that no
// other member of `subset` beats. Result is sorted.
AltVec top_set_partial(const StrictPartialOrder& order, const AltVec& subset);

// The family of alternative subsets that top-monotonicity quantifies over:
// the full set A plus every 3-element subset of the union of the voters'
// top sets on A. Members are sorted internally and the family is sorted.
std::vector<AltVec> triple_family(const WeakProfile& profile);

// Every weak order over the partial order's alternatives that extends it
// (strict pairs preserved). Deterministic enumeration: rank vectors over the
// sorted alternatives in ascending lexicographic order. Throws CapacityError
// above the cap.
std::vector<WeakOrder> weak_extensions(const StrictPartialOrder& order,
                                       std::size_t max_alternatives = 6);

// Every linear extension, in lexicographic order of the sequence.
std::vector<LinearOrder> linear_extensions(const StrictPartialOrder& order,
                                           std::size_t max_alternatives = 8);

}  // namespace topmono
