#include "topmono/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace topmono {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (std::isspace(c)) return false;
        switch (c) {
            case '>': case ',': case '{': case '}': case '|': case '#':
                return false;
            default:
                break;
        }
    }
    return true;
}

}  // namespace

Alternative::Alternative(std::string id) : id_(std::move(id)) {
    if (!valid_token(id_))
        throw InputError("invalid alternative name '" + id_ + "'");
}

AltVec sorted_unique(AltVec values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

WeakOrder::WeakOrder(std::vector<AltVec> classes) : classes_(std::move(classes)) {
    if (classes_.empty()) throw InputError("weak order needs at least one class");
    for (auto& cls : classes_) {
        if (cls.empty()) throw InputError("weak order has an empty indifference class");
        std::sort(cls.begin(), cls.end());
    }
    for (std::size_t r = 0; r < classes_.size(); ++r) {
        for (const auto& a : classes_[r]) {
            auto [it, fresh] = ranks_.emplace(a.id(), r);
            (void)it;
            if (!fresh)
                throw InputError("alternative '" + a.id() +
                                 "' appears in two indifference classes");
            universe_.push_back(a);
        }
    }
    std::sort(universe_.begin(), universe_.end());
}

std::size_t WeakOrder::rank(const Alternative& a) const {
    auto it = ranks_.find(a.id());
    if (it == ranks_.end())
        throw InputError("alternative '" + a.id() + "' is not in this weak order");
    return it->second;
}

bool WeakOrder::is_linear() const noexcept {
    for (const auto& cls : classes_)
        if (cls.size() != 1) return false;
    return true;
}

StrictPartialOrder::StrictPartialOrder(
    AltVec universe, const std::vector<std::pair<Alternative, Alternative>>& pairs)
    : universe_(sorted_unique(std::move(universe))) {
    if (universe_.empty()) throw InputError("partial order needs at least one alternative");
    const std::size_t m = universe_.size();
    closure_.assign(m, std::vector<bool>(m, false));
    for (const auto& [a, b] : pairs) {
        if (a == b)
            throw InputError("partial order pair '" + a.id() + " > " + b.id() +
                             "' is reflexive");
        closure_[index(a)][index(b)] = true;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            if (!closure_[i][k]) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (closure_[k][j]) closure_[i][j] = true;
        }
    for (std::size_t i = 0; i < m; ++i)
        if (closure_[i][i])
            throw InputError("partial order pairs contain a cycle through '" +
                             universe_[i].id() + "'");
}

std::size_t StrictPartialOrder::index(const Alternative& a) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), a);
    if (it == universe_.end() || !(*it == a))
        throw InputError("alternative '" + a.id() + "' is not in this partial order");
    return static_cast<std::size_t>(it - universe_.begin());
}

bool StrictPartialOrder::prefers(const Alternative& a, const Alternative& b) const {
    return closure_[index(a)][index(b)];
}

std::vector<std::pair<Alternative, Alternative>> StrictPartialOrder::pairs() const {
    std::vector<std::pair<Alternative, Alternative>> out;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        for (std::size_t j = 0; j < universe_.size(); ++j)
            if (closure_[i][j]) out.emplace_back(universe_[i], universe_[j]);
    return out;  // index order is already sorted
}

std::vector<std::pair<Alternative, Alternative>> StrictPartialOrder::reduced_pairs() const {
    std::vector<std::pair<Alternative, Alternative>> out;
    const std::size_t m = universe_.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!closure_[i][j]) continue;
            bool redundant = false;
            for (std::size_t k = 0; k < m && !redundant; ++k)
                if (closure_[i][k] && closure_[k][j]) redundant = true;
            if (!redundant) out.emplace_back(universe_[i], universe_[j]);
        }
    return out;
}

LinearOrder::LinearOrder(AltVec sequence) : sequence_(std::move(sequence)) {
    if (sequence_.empty()) throw InputError("linear order needs at least one alternative");
    for (std::size_t p = 0; p < sequence_.size(); ++p) {
        auto [it, fresh] = positions_.emplace(sequence_[p].id(), p);
        (void)it;
        if (!fresh)
            throw InputError("alternative '" + sequence_[p].id() +
                             "' appears twice in a linear order");
    }
    universe_ = sequence_;
    std::sort(universe_.begin(), universe_.end());
}

std::size_t LinearOrder::position(const Alternative& a) const {
    auto it = positions_.find(a.id());
    if (it == positions_.end())
        throw InputError("alternative '" + a.id() + "' is not in this linear order");
    return it->second;
}

bool LinearOrder::between(const Alternative& a, const Alternative& b,
                          const Alternative& c) const {
    const std::size_t pa = position(a), pb = position(b), pc = position(c);
    return (pa < pb && pb < pc) || (pc < pb && pb < pa);
}

LinearOrder LinearOrder::reversed() const {
    AltVec seq(sequence_.rbegin(), sequence_.rend());
    return LinearOrder(std::move(seq));
}

namespace detail {

void check_voter_name(const std::string& name) {
    if (name.empty()) throw InputError("voter name may not be empty");
    for (unsigned char c : name)
        if (std::isspace(c) || c == ':')
            throw InputError("invalid voter name '" + name + "'");
}

}  // namespace detail

template <typename Relation>
BasicProfile<Relation>::BasicProfile(AltVec alternatives, std::vector<Voter<Relation>> voters)
    : alternatives_(sorted_unique(std::move(alternatives))), voters_(std::move(voters)) {
    if (alternatives_.empty()) throw InputError("profile needs at least one alternative");
    for (const auto& v : voters_) {
        detail::check_voter_name(v.name);
        if (v.relation.alternatives() != alternatives_)
            throw InputError("voter '" + v.name +
                             "' ranges over a different alternative set than the profile");
    }
}

template class BasicProfile<WeakOrder>;
template class BasicProfile<StrictPartialOrder>;

AltVec top_set(const WeakOrder& order, const AltVec& subset) {
    if (subset.empty()) throw InputError("top set of an empty subset is undefined");
    const AltVec sub = sorted_unique(subset);
    std::size_t best = order.rank(sub.front());
    for (const auto& a : sub) best = std::min(best, order.rank(a));
    AltVec out;
    for (const auto& a : sub)
        if (order.rank(a) == best) out.push_back(a);
    return out;
}

AltVec top_set_partial(const StrictPartialOrder& order, const AltVec& subset) {
    if (subset.empty()) throw InputError("top set of an empty subset is undefined");
    const AltVec sub = sorted_unique(subset);
    AltVec out;
    for (const auto& a : sub) {
        bool beaten = false;
        for (const auto& b : sub)
            if (!(a == b) && order.prefers(b, a)) { beaten = true; break; }
        if (!beaten) out.push_back(a);
    }
    return out;
}

std::vector<AltVec> triple_family(const WeakProfile& profile) {
    AltVec tops;
    for (const auto& v : profile.voters()) {
        AltVec t = top_set(v.relation, profile.alternatives());
        tops.insert(tops.end(), t.begin(), t.end());
    }
    tops = sorted_unique(std::move(tops));

    std::vector<AltVec> family;
    family.push_back(profile.alternatives());
    const std::size_t k = tops.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                family.push_back({tops[i], tops[j], tops[l]});
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

std::vector<WeakOrder> weak_extensions(const StrictPartialOrder& order,
                                       std::size_t max_alternatives) {
    const AltVec& alts = order.alternatives();
    const std::size_t m = alts.size();
    if (m > max_alternatives)
        throw CapacityError("weak extension enumeration is capped at " +
                            std::to_string(max_alternatives) + " alternatives (got " +
                            std::to_string(m) + ")");

    const auto closure = order.pairs();
    std::vector<std::pair<std::size_t, std::size_t>> pairs_idx;
    for (const auto& [a, b] : closure) {
        auto pos = [&](const Alternative& x) {
            return static_cast<std::size_t>(
                std::lower_bound(alts.begin(), alts.end(), x) - alts.begin());
        };
        pairs_idx.emplace_back(pos(a), pos(b));
    }

    std::vector<WeakOrder> out;
    std::vector<std::size_t> rank(m, 0);
    while (true) {
        // keep only dense rank vectors: every level up to the max is used
        std::size_t top_rank = 0;
        for (std::size_t r : rank) top_rank = std::max(top_rank, r);
        std::vector<bool> used(top_rank + 1, false);
        for (std::size_t r : rank) used[r] = true;
        bool dense = std::all_of(used.begin(), used.end(), [](bool u) { return u; });

        if (dense) {
            bool extends = true;
            for (const auto& [i, j] : pairs_idx)
                if (rank[i] >= rank[j]) { extends = false; break; }
            if (extends) {
                std::vector<AltVec> classes(top_rank + 1);
                for (std::size_t i = 0; i < m; ++i) classes[rank[i]].push_back(alts[i]);
                out.emplace_back(std::move(classes));
            }
        }

        // next vector in ascending lexicographic order, base m
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (rank[i] + 1 < m) { ++rank[i]; break; }
            rank[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<LinearOrder> linear_extensions(const StrictPartialOrder& order,
                                           std::size_t max_alternatives) {
    const std::size_t m = order.alternatives().size();
    if (m > max_alternatives)
        throw CapacityError("linear extension enumeration is capped at " +
                            std::to_string(max_alternatives) + " alternatives (got " +
                            std::to_string(m) + ")");

    AltVec seq = order.alternatives();
    std::vector<LinearOrder> out;
    do {
        LinearOrder cand(seq);
        bool extends = true;
        for (const auto& [a, b] : order.pairs())
            if (!cand.above(a, b)) { extends = false; break; }
        if (extends) out.push_back(std::move(cand));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

}  // namespace topmono
