#include "topmono/nb.hpp"

#include <algorithm>
#include <set>

namespace topmono {

NBConstraint::NBConstraint(Alternative middle, Alternative outer_a, Alternative outer_b)
    : middle_(std::move(middle)),
      outer_(std::move(outer_a), std::move(outer_b)) {
    if (outer_.second < outer_.first) std::swap(outer_.first, outer_.second);
    if (outer_.first == outer_.second)
        throw InputError("constraint outer pair must be two distinct alternatives");
    if (middle_ == outer_.first || middle_ == outer_.second)
        throw InputError("constraint middle '" + middle_.id() +
                         "' may not be one of its outer alternatives");
}

NBConstraintSet::NBConstraintSet(AltVec elements, std::vector<NBConstraint> constraints)
    : elements_(sorted_unique(std::move(elements))), constraints_(std::move(constraints)) {
    if (elements_.empty()) throw InputError("constraint set needs at least one element");
    auto known = [&](const Alternative& a) {
        return std::binary_search(elements_.begin(), elements_.end(), a);
    };
    for (const auto& c : constraints_)
        if (!known(c.middle()) || !known(c.outer().first) || !known(c.outer().second))
            throw InputError("constraint mentions an alternative outside the element set");
    std::sort(constraints_.begin(), constraints_.end());
    constraints_.erase(std::unique(constraints_.begin(), constraints_.end()),
                       constraints_.end());
}

NBConstraintSet extract_constraints(const WeakProfile& profile) {
    const AltVec& alts = profile.alternatives();
    const std::size_t n = profile.voter_count();
    const auto family = triple_family(profile);

    std::set<NBConstraint> found;
    for (const auto& members : family) {
        std::vector<AltVec> tops(n);
        for (std::size_t i = 0; i < n; ++i) tops[i] = top_set(profile.relation(i), members);
        for (std::size_t i = 0; i < n; ++i) {
            const WeakOrder& rel_i = profile.relation(i);
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& x : tops[i]) {
                    for (const auto& y : tops[j]) {
                        if (x == y) continue;
                        for (const auto& z : members) {
                            if (z == x || z == y) continue;
                            const bool z_in_tops =
                                std::binary_search(tops[i].begin(), tops[i].end(), z) ||
                                std::binary_search(tops[j].begin(), tops[j].end(), z);
                            const bool fails = z_in_tops ? rel_i.strictly_prefers(z, y)
                                                         : rel_i.weakly_prefers(z, y);
                            if (fails) found.emplace(y, x, z);
                        }
                    }
                }
            }
        }
    }
    return NBConstraintSet(alts, std::vector<NBConstraint>(found.begin(), found.end()));
}

std::optional<NBConstraint> order_violation(const LinearOrder& order,
                                            const NBConstraintSet& cs) {
    if (order.alternatives() != cs.elements())
        throw InputError("order must be a permutation of the constraint set's elements");
    for (const auto& c : cs.constraints())
        if (order.between(c.outer().first, c.middle(), c.outer().second)) return c;
    return std::nullopt;
}

std::optional<NBConstraint> partial_unforced(const StrictPartialOrder& order,
                                             const NBConstraintSet& cs) {
    if (order.alternatives() != cs.elements())
        throw InputError("partial order must range over the constraint set's elements");
    for (const auto& c : cs.constraints()) {
        const auto& [a, b] = c.outer();
        const auto& y = c.middle();
        const bool above = order.prefers(y, a) && order.prefers(y, b);
        const bool below = order.prefers(a, y) && order.prefers(b, y);
        if (!above && !below) return c;
    }
    return std::nullopt;
}

namespace {

struct IndexedConstraint {
    std::size_t middle, outer_a, outer_b;
};

class NbSearch {
public:
    NbSearch(const NBConstraintSet& cs, const SolveOptions& options)
        : elements_(cs.elements()), options_(options) {
        const std::size_t m = elements_.size();
        touching_.resize(m);
        auto idx = [&](const Alternative& a) {
            return static_cast<std::size_t>(
                std::lower_bound(elements_.begin(), elements_.end(), a) - elements_.begin());
        };
        for (const auto& c : cs.constraints()) {
            IndexedConstraint ic{idx(c.middle()), idx(c.outer().first), idx(c.outer().second)};
            const std::size_t slot = constraints_.size();
            constraints_.push_back(ic);
            touching_[ic.middle].push_back(slot);
            touching_[ic.outer_a].push_back(slot);
            touching_[ic.outer_b].push_back(slot);
        }
        pos_.assign(m, kUnplaced);
    }

    std::optional<LinearOrder> run(std::uint64_t* nodes_out) {
        seq_.clear();
        nodes_ = 0;
        const bool found = descend();
        if (nodes_out) *nodes_out = nodes_;
        if (!found) return std::nullopt;
        AltVec seq;
        for (std::size_t i : seq_) seq.push_back(elements_[i]);
        return LinearOrder(std::move(seq));
    }

private:
    static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

    bool descend() {
        const std::size_t m = elements_.size();
        if (seq_.size() == m) return true;
        for (std::size_t c = 0; c < m; ++c) {
            if (pos_[c] != kUnplaced) continue;
            if (options_.reversal_pruning && m >= 2 && c == 1 && pos_[0] == kUnplaced)
                continue;  // keep element 0 above element 1
            if (++nodes_ > options_.node_budget)
                throw BudgetError("constraint search exceeded its node budget of " +
                                  std::to_string(options_.node_budget));
            pos_[c] = seq_.size();
            seq_.push_back(c);
            if (consistent(c) && descend()) return true;
            seq_.pop_back();
            pos_[c] = kUnplaced;
        }
        return false;
    }

    // Checks constraints touching the just-placed element whose three
    // members are now all placed.
    bool consistent(std::size_t placed) const {
        for (std::size_t slot : touching_[placed]) {
            const IndexedConstraint& ic = constraints_[slot];
            const std::size_t pm = pos_[ic.middle], pa = pos_[ic.outer_a],
                              pb = pos_[ic.outer_b];
            if (pm == kUnplaced || pa == kUnplaced || pb == kUnplaced) continue;
            if ((pa < pm && pm < pb) || (pb < pm && pm < pa)) return false;
        }
        return true;
    }

    const AltVec& elements_;
    SolveOptions options_;
    std::vector<IndexedConstraint> constraints_;
    std::vector<std::vector<std::size_t>> touching_;
    std::vector<std::size_t> pos_;
    std::vector<std::size_t> seq_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<LinearOrder> solve_nb(const NBConstraintSet& cs, const SolveOptions& options,
                                    SolveStats* stats) {
    NbSearch search(cs, options);
    std::uint64_t nodes = 0;
    auto result = search.run(&nodes);
    if (stats) stats->nodes = nodes;
    return result;
}

std::optional<LinearOrder> brute_force_nb(const NBConstraintSet& cs,
                                          std::size_t max_elements) {
    if (cs.elements().size() > max_elements)
        throw CapacityError("permutation scan is capped at " + std::to_string(max_elements) +
                            " elements (got " + std::to_string(cs.elements().size()) + ")");
    AltVec seq = cs.elements();
    do {
        LinearOrder cand(seq);
        if (order_satisfies(cand, cs)) return cand;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
}

}  // namespace topmono
