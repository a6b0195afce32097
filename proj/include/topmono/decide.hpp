#pragma once

#include <cstdint>
#include <optional>

#include "topmono/core.hpp"
#include "topmono/nb.hpp"
#include "topmono/verify.hpp"

namespace topmono {

enum class TmStatus { TopMonotonic, NotTopMonotonic };

struct DecisionStats {
    std::size_t constraints_extracted = 0;
    std::uint64_t search_nodes = 0;
    double elapsed_seconds = 0.0;
};

struct TmDecision {
    TmStatus status;
    std::optional<LinearOrder> witness;        // present iff TopMonotonic
    std::optional<NBConstraintSet> certificate;  // extracted set, when one exists
    std::optional<WeakProfile> extension;      // chosen extensions (partial pipeline only)
    DecisionStats stats;
};

// Constraint pipeline: extract the non-betweenness set, solve it exactly,
// and cross-check any witness against the verification scan before
// reporting. The certificate is attached on both outcomes.
TmDecision test_tm(const WeakProfile& profile, const SolveOptions& solve = {});

// Independent oracle: scans all permutations in lexicographic order and
// returns the first one the verification scan accepts. No constraint
// machinery involved. Capped at `max_alternatives`.
TmDecision test_tm_bruteforce(const WeakProfile& profile, std::size_t max_alternatives = 8);

struct PartialTestOptions {
    std::size_t max_alternatives = 6;
    std::size_t max_voters = 6;
    // solve.node_budget bounds the whole search: every solver node plus
    // every extension placement counts against it.
    SolveOptions solve{};
};

// Decides whether some choice of one weak-order extension per voter yields a
// top-monotonic profile. Enumerates the product deterministically (linear
// extensions first, then all weak extensions), with two sound prunes: a
// pre-check on constraints forced into every extension, and a prefix prune
// justified by extraction growing monotonically with the voter list. On
// success the witness and the chosen extension profile are both reported.
TmDecision test_tm_partial(const PartialProfile& profile,
                           const PartialTestOptions& options = {});

// Builds the hardness gadget: three voters per constraint (b,{a,c}) with the
// outer pair read in sorted order. Voter 1 fixes a above everything and c
// above b; voters 2 and 3 fix c (resp. b) above everything. Voters are named
// c<k>.1, c<k>.2, c<k>.3 after their 1-based constraint index.
PartialProfile reduce_nb_to_profile(const NBConstraintSet& cs);

// For a gadget profile and an order satisfying its constraint set, builds
// the explicit single-peaked extension of every gadget voter: the peak goes
// first, voter 1 then lists the witness side holding c before the other side
// (each by increasing distance), and voters 2 and 3 interleave both sides by
// distance with ties broken toward the alternative earlier in the witness.
WeakProfile single_peaked_extension(const PartialProfile& gadget, const LinearOrder& witness);

}  // namespace topmono
