#include "topmono/decide.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace topmono {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Tracks one budget across every solver call and placement of a search.
class BudgetMeter {
public:
    explicit BudgetMeter(std::uint64_t budget) : budget_(budget) {}

    void charge(std::uint64_t n) {
        used_ += n;
        if (used_ > budget_)
            throw BudgetError("extension search exceeded its node budget of " +
                              std::to_string(budget_));
    }

    std::uint64_t remaining() const { return budget_ > used_ ? budget_ - used_ : 1; }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

// The unique member of `subset` strictly above all others in `rel`, if any.
std::optional<Alternative> forced_unique_top(const StrictPartialOrder& rel,
                                             const AltVec& subset) {
    for (const auto& a : subset) {
        bool dominates = true;
        for (const auto& b : subset)
            if (!(a == b) && !rel.prefers(a, b)) { dominates = false; break; }
        if (dominates) return a;
    }
    return std::nullopt;
}

// Constraints guaranteed to appear in the extraction of every weak-extension
// combination: tops forced by outright domination survive every extension,
// and a strict pair z > y survives every extension of the voter holding it.
NBConstraintSet forced_constraints(const PartialProfile& profile) {
    const AltVec& alts = profile.alternatives();
    const std::size_t n = profile.voter_count();

    AltVec forced_tops;
    for (std::size_t k = 0; k < n; ++k)
        if (auto t = forced_unique_top(profile.relation(k), alts)) forced_tops.push_back(*t);
    forced_tops = sorted_unique(std::move(forced_tops));

    std::vector<AltVec> family;
    family.push_back(alts);
    for (std::size_t i = 0; i < forced_tops.size(); ++i)
        for (std::size_t j = i + 1; j < forced_tops.size(); ++j)
            for (std::size_t l = j + 1; l < forced_tops.size(); ++l)
                family.push_back({forced_tops[i], forced_tops[j], forced_tops[l]});

    std::set<NBConstraint> found;
    for (const auto& members : family) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto x = forced_unique_top(profile.relation(i), members);
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const auto y = forced_unique_top(profile.relation(j), members);
                if (!y || *x == *y) continue;
                for (const auto& z : members) {
                    if (z == *x || z == *y) continue;
                    if (profile.relation(i).prefers(z, *y)) found.emplace(*y, *x, z);
                }
            }
        }
    }
    return NBConstraintSet(alts, std::vector<NBConstraint>(found.begin(), found.end()));
}

NBConstraintSet merge_constraints(const NBConstraintSet& a, const NBConstraintSet& b) {
    std::vector<NBConstraint> all = a.constraints();
    all.insert(all.end(), b.constraints().begin(), b.constraints().end());
    return NBConstraintSet(a.elements(), std::move(all));
}

// Deterministic walk of the per-voter extension product with prefix pruning.
class ExtensionSearch {
public:
    ExtensionSearch(const PartialProfile& profile, const NBConstraintSet& forced,
                    BudgetMeter& meter)
        : profile_(profile), forced_(forced), meter_(meter) {}

    // `lists` holds one extension list per voter. `skip_all_linear` skips
    // combinations consisting solely of linear orders (already covered by an
    // earlier phase). Returns the chosen extension profile on success.
    std::optional<WeakProfile> run(const std::vector<std::vector<WeakOrder>>& lists,
                                   bool skip_all_linear) {
        lists_ = &lists;
        skip_all_linear_ = skip_all_linear;
        chosen_.clear();
        if (descend()) return make_profile(chosen_.size());
        return std::nullopt;
    }

private:
    bool descend() {
        const std::size_t k = chosen_.size();
        if (k == profile_.voter_count()) return true;
        const bool last = (k + 1 == profile_.voter_count());
        for (const WeakOrder& ext : (*lists_)[k]) {
            if (skip_all_linear_ && last && all_linear_ && ext.is_linear()) continue;
            meter_.charge(1);
            chosen_.push_back(&ext);
            const bool was_all_linear = all_linear_;
            all_linear_ = all_linear_ && ext.is_linear();
            if (prefix_feasible() && descend()) return true;
            all_linear_ = was_all_linear;
            chosen_.pop_back();
        }
        return false;
    }

    bool prefix_feasible() {
        const WeakProfile prefix = make_profile(chosen_.size());
        const NBConstraintSet cs = merge_constraints(extract_constraints(prefix), forced_);
        SolveOptions opts;
        opts.node_budget = meter_.remaining();
        SolveStats stats;
        auto order = solve_nb(cs, opts, &stats);
        meter_.charge(stats.nodes);
        return order.has_value();
    }

    WeakProfile make_profile(std::size_t voter_count) const {
        std::vector<Voter<WeakOrder>> voters;
        for (std::size_t i = 0; i < voter_count; ++i)
            voters.push_back({profile_.voters()[i].name, *chosen_[i]});
        return WeakProfile(profile_.alternatives(), std::move(voters));
    }

    const PartialProfile& profile_;
    const NBConstraintSet& forced_;
    BudgetMeter& meter_;
    const std::vector<std::vector<WeakOrder>>* lists_ = nullptr;
    bool skip_all_linear_ = false;
    bool all_linear_ = true;
    std::vector<const WeakOrder*> chosen_;
};

WeakOrder as_weak(const LinearOrder& order) {
    std::vector<AltVec> classes;
    for (const auto& a : order.sequence()) classes.push_back({a});
    return WeakOrder(std::move(classes));
}

}  // namespace

TmDecision test_tm(const WeakProfile& profile, const SolveOptions& solve) {
    const auto start = Clock::now();
    NBConstraintSet cs = extract_constraints(profile);
    SolveStats solve_stats;
    auto order = solve_nb(cs, solve, &solve_stats);

    TmDecision decision{order ? TmStatus::TopMonotonic : TmStatus::NotTopMonotonic,
                        std::nullopt,
                        std::move(cs),
                        std::nullopt,
                        {}};
    decision.stats.constraints_extracted = decision.certificate->size();
    decision.stats.search_nodes = solve_stats.nodes;
    if (order) {
        if (verify_tm(profile, *order))
            throw InternalError(
                "solver produced an order the verification scan rejects; this is a bug");
        decision.witness = std::move(order);
    }
    decision.stats.elapsed_seconds = seconds_since(start);
    return decision;
}

TmDecision test_tm_bruteforce(const WeakProfile& profile, std::size_t max_alternatives) {
    const auto start = Clock::now();
    if (profile.alternative_count() > max_alternatives)
        throw CapacityError("permutation scan is capped at " +
                            std::to_string(max_alternatives) + " alternatives (got " +
                            std::to_string(profile.alternative_count()) + ")");

    const VerifyContext ctx(profile);
    AltVec seq = profile.alternatives();
    std::uint64_t tried = 0;
    std::optional<LinearOrder> witness;
    do {
        LinearOrder cand(seq);
        ++tried;
        if (!ctx.check(cand)) { witness = std::move(cand); break; }
    } while (std::next_permutation(seq.begin(), seq.end()));

    TmDecision decision{witness ? TmStatus::TopMonotonic : TmStatus::NotTopMonotonic,
                        std::move(witness),
                        std::nullopt,
                        std::nullopt,
                        {}};
    decision.stats.search_nodes = tried;
    decision.stats.elapsed_seconds = seconds_since(start);
    return decision;
}

TmDecision test_tm_partial(const PartialProfile& profile, const PartialTestOptions& options) {
    const auto start = Clock::now();
    if (profile.alternative_count() > options.max_alternatives)
        throw CapacityError("partial-order decision is capped at " +
                            std::to_string(options.max_alternatives) +
                            " alternatives (got " +
                            std::to_string(profile.alternative_count()) + ")");
    if (profile.voter_count() > options.max_voters)
        throw CapacityError("partial-order decision is capped at " +
                            std::to_string(options.max_voters) + " voters (got " +
                            std::to_string(profile.voter_count()) + ")");

    BudgetMeter meter(options.solve.node_budget);
    TmDecision decision{TmStatus::NotTopMonotonic, std::nullopt, std::nullopt, std::nullopt, {}};

    // Constraints forced into every extension combination; if they already
    // clash, no combination can succeed.
    const NBConstraintSet forced = forced_constraints(profile);
    {
        SolveOptions opts = options.solve;
        opts.node_budget = meter.remaining();
        SolveStats stats;
        auto order = solve_nb(forced, opts, &stats);
        meter.charge(stats.nodes);
        if (!order) {
            decision.stats.search_nodes = meter.used();
            decision.stats.elapsed_seconds = seconds_since(start);
            return decision;
        }
    }

    ExtensionSearch search(profile, forced, meter);
    std::optional<WeakProfile> combo;

    {  // fast path: linear extensions only
        std::vector<std::vector<WeakOrder>> lists;
        for (const auto& v : profile.voters()) {
            std::vector<WeakOrder> exts;
            for (const auto& lin : linear_extensions(v.relation, options.max_alternatives))
                exts.push_back(as_weak(lin));
            lists.push_back(std::move(exts));
        }
        combo = search.run(lists, false);
    }
    if (!combo) {  // complete: every weak extension
        std::vector<std::vector<WeakOrder>> lists;
        for (const auto& v : profile.voters())
            lists.push_back(weak_extensions(v.relation, options.max_alternatives));
        combo = search.run(lists, true);
    }

    if (combo) {
        NBConstraintSet cs = extract_constraints(*combo);
        SolveOptions opts = options.solve;
        opts.node_budget = meter.remaining();
        SolveStats stats;
        auto order = solve_nb(cs, opts, &stats);
        meter.charge(stats.nodes);
        if (!order)
            throw InternalError(
                "extension search accepted a combination its own solver rejects; this is a bug");
        if (verify_tm(*combo, *order))
            throw InternalError(
                "solver produced an order the verification scan rejects; this is a bug");
        decision.status = TmStatus::TopMonotonic;
        decision.witness = std::move(order);
        decision.stats.constraints_extracted = cs.size();
        decision.certificate = std::move(cs);
        decision.extension = std::move(combo);
    }
    decision.stats.search_nodes = meter.used();
    decision.stats.elapsed_seconds = seconds_since(start);
    return decision;
}

PartialProfile reduce_nb_to_profile(const NBConstraintSet& cs) {
    const AltVec& alts = cs.elements();
    std::vector<Voter<StrictPartialOrder>> voters;

    auto star = [&](const Alternative& top) {
        std::vector<std::pair<Alternative, Alternative>> pairs;
        for (const auto& x : alts)
            if (!(x == top)) pairs.emplace_back(top, x);
        return pairs;
    };

    std::size_t k = 0;
    for (const auto& c : cs.constraints()) {
        ++k;
        const Alternative& a = c.outer().first;
        const Alternative& b = c.middle();
        const Alternative& cc = c.outer().second;
        const std::string base = "c" + std::to_string(k);

        auto pairs1 = star(a);
        pairs1.emplace_back(cc, b);
        voters.push_back({base + ".1", StrictPartialOrder(alts, pairs1)});
        voters.push_back({base + ".2", StrictPartialOrder(alts, star(cc))});
        voters.push_back({base + ".3", StrictPartialOrder(alts, star(b))});
    }
    return PartialProfile(alts, std::move(voters));
}

namespace {

struct GadgetRoles {
    Alternative a, b, c;  // constraint (b, {a, c}), a the chain's source
};

// A voter whose closure is exactly "top beats everything else".
std::optional<Alternative> star_top(const StrictPartialOrder& rel) {
    const std::size_t m = rel.alternatives().size();
    if (rel.pairs().size() != m - 1) return std::nullopt;
    return forced_unique_top(rel, rel.alternatives());
}

GadgetRoles recognize_gadget_triple(const Voter<StrictPartialOrder>& v1,
                                    const Voter<StrictPartialOrder>& v2,
                                    const Voter<StrictPartialOrder>& v3) {
    const auto fail = [&](const std::string& why) {
        return InputError("profile is not a reduction gadget: " + why + " (voters '" +
                          v1.name + "', '" + v2.name + "', '" + v3.name + "')");
    };

    const auto c = star_top(v2.relation);
    if (!c) throw fail("second voter of a triple must rank one alternative above all others");
    const auto b = star_top(v3.relation);
    if (!b) throw fail("third voter of a triple must rank one alternative above all others");

    const std::size_t m = v1.relation.alternatives().size();
    const auto a = forced_unique_top(v1.relation, v1.relation.alternatives());
    if (!a || v1.relation.pairs().size() != m ||
        !v1.relation.prefers(*c, *b))
        throw fail("first voter of a triple must rank one alternative above all others "
                   "plus exactly one extra pair c > b");
    if (*a == *b || *a == *c || *b == *c)
        throw fail("triple roles must be three distinct alternatives");
    return GadgetRoles{*a, *b, *c};
}

}  // namespace

WeakProfile single_peaked_extension(const PartialProfile& gadget, const LinearOrder& witness) {
    if (witness.alternatives() != gadget.alternatives())
        throw InputError("witness must range over exactly the gadget's alternatives");
    if (gadget.voter_count() % 3 != 0)
        throw InputError("profile is not a reduction gadget: voter count is not a multiple of 3");

    std::vector<GadgetRoles> roles;
    std::vector<NBConstraint> constraints;
    for (std::size_t t = 0; t < gadget.voter_count(); t += 3) {
        roles.push_back(recognize_gadget_triple(gadget.voters()[t], gadget.voters()[t + 1],
                                                gadget.voters()[t + 2]));
        constraints.emplace_back(roles.back().b, roles.back().a, roles.back().c);
    }
    const NBConstraintSet cs(gadget.alternatives(), std::move(constraints));
    if (!order_satisfies(witness, cs))
        throw InputError("witness places a constraint middle between its outer pair");

    const AltVec& alts = gadget.alternatives();
    auto distance = [&](const Alternative& peak, const Alternative& x) {
        const auto pp = static_cast<long>(witness.position(peak));
        const auto px = static_cast<long>(witness.position(x));
        return px > pp ? px - pp : pp - px;
    };

    // Peak first, then the side holding `side_hint` by increasing distance,
    // then the other side by increasing distance.
    auto side_then_side = [&](const Alternative& peak, const Alternative& side_hint) {
        const long pp = static_cast<long>(witness.position(peak));
        const bool hint_right = static_cast<long>(witness.position(side_hint)) > pp;
        AltVec seq{peak};
        for (int phase = 0; phase < 2; ++phase) {
            const bool right = (phase == 0) == hint_right;
            AltVec side;
            for (const auto& x : alts) {
                if (x == peak) continue;
                const bool x_right = static_cast<long>(witness.position(x)) > pp;
                if (x_right == right) side.push_back(x);
            }
            std::sort(side.begin(), side.end(), [&](const auto& u, const auto& v) {
                return distance(peak, u) < distance(peak, v);
            });
            seq.insert(seq.end(), side.begin(), side.end());
        }
        return seq;
    };

    // Peak first, both sides interleaved by increasing distance; equidistant
    // pairs resolve toward the alternative earlier in the witness.
    auto interleaved = [&](const Alternative& peak) {
        AltVec rest;
        for (const auto& x : alts)
            if (!(x == peak)) rest.push_back(x);
        std::sort(rest.begin(), rest.end(), [&](const auto& u, const auto& v) {
            const auto du = distance(peak, u), dv = distance(peak, v);
            if (du != dv) return du < dv;
            return witness.position(u) < witness.position(v);
        });
        AltVec seq{peak};
        seq.insert(seq.end(), rest.begin(), rest.end());
        return seq;
    };

    auto linear_voter = [&](const std::string& name, AltVec seq) {
        std::vector<AltVec> classes;
        for (const auto& a : seq) classes.push_back({a});
        return Voter<WeakOrder>{name, WeakOrder(std::move(classes))};
    };

    std::vector<Voter<WeakOrder>> voters;
    for (std::size_t t = 0; t < roles.size(); ++t) {
        const GadgetRoles& r = roles[t];
        const auto& names = gadget.voters();
        voters.push_back(linear_voter(names[3 * t].name, side_then_side(r.a, r.c)));
        voters.push_back(linear_voter(names[3 * t + 1].name, interleaved(r.c)));
        voters.push_back(linear_voter(names[3 * t + 2].name, interleaved(r.b)));
    }
    return WeakProfile(alts, std::move(voters));
}

}  // namespace topmono
