#include "topmono/structure.hpp"

#include <algorithm>
#include <random>

namespace topmono {

MajorityRelation::MajorityRelation(std::vector<PairwiseTally> tallies)
    : tallies_(std::move(tallies)) {
    std::sort(tallies_.begin(), tallies_.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
}

const PairwiseTally& MajorityRelation::tally(const Alternative& a,
                                             const Alternative& b) const {
    const Alternative& lo = a < b ? a : b;
    const Alternative& hi = a < b ? b : a;
    for (const auto& t : tallies_)
        if (t.first == lo && t.second == hi) return t;
    throw InputError("no tally for pair '" + a.id() + "', '" + b.id() + "'");
}

bool is_single_peaked_wrt(const WeakProfile& profile, const LinearOrder& axis) {
    if (axis.alternatives() != profile.alternatives())
        throw InputError("axis must range over exactly the profile's alternatives");
    for (const auto& v : profile.voters()) {
        if (!v.relation.is_linear())
            throw InputError("single-peakedness is defined for linear voters; voter '" +
                             v.name + "' has ties");
        const Alternative& peak = v.relation.classes().front().front();
        const long pp = static_cast<long>(axis.position(peak));
        for (const auto& u : profile.alternatives()) {
            for (const auto& w : profile.alternatives()) {
                if (u == w || u == peak || w == peak) continue;
                const long pu = static_cast<long>(axis.position(u));
                const long pw = static_cast<long>(axis.position(w));
                const bool same_side = (pu > pp) == (pw > pp);
                const bool u_nearer = std::abs(pu - pp) < std::abs(pw - pp);
                if (same_side && u_nearer && !v.relation.strictly_prefers(u, w))
                    return false;
            }
        }
    }
    return true;
}

std::optional<LinearOrder> find_sp_axis(const WeakProfile& profile,
                                        std::size_t max_alternatives) {
    if (profile.alternative_count() > max_alternatives)
        throw CapacityError("axis search is capped at " + std::to_string(max_alternatives) +
                            " alternatives (got " +
                            std::to_string(profile.alternative_count()) + ")");
    AltVec seq = profile.alternatives();
    do {
        LinearOrder axis(seq);
        if (is_single_peaked_wrt(profile, axis)) return axis;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
}

bool is_dichotomous(const WeakProfile& profile) {
    for (const auto& v : profile.voters())
        if (v.relation.class_count() > 2) return false;
    return true;
}

MajorityRelation majority_relation(const WeakProfile& profile) {
    const AltVec& alts = profile.alternatives();
    std::vector<PairwiseTally> tallies;
    for (std::size_t i = 0; i < alts.size(); ++i) {
        for (std::size_t j = i + 1; j < alts.size(); ++j) {
            PairwiseTally t{alts[i], alts[j], 0, 0, 0};
            for (const auto& v : profile.voters()) {
                if (v.relation.strictly_prefers(alts[i], alts[j]))
                    ++t.first_over_second;
                else if (v.relation.strictly_prefers(alts[j], alts[i]))
                    ++t.second_over_first;
                else
                    ++t.ties;
            }
            tallies.push_back(std::move(t));
        }
    }
    return MajorityRelation(std::move(tallies));
}

AltVec weak_condorcet_winners(const WeakProfile& profile) {
    const MajorityRelation mr = majority_relation(profile);
    AltVec winners;
    for (const auto& a : profile.alternatives()) {
        bool never_beaten = true;
        for (const auto& b : profile.alternatives()) {
            if (a == b) continue;
            const PairwiseTally& t = mr.tally(a, b);
            const bool a_is_first = t.first == a;
            const std::size_t for_a = a_is_first ? t.first_over_second : t.second_over_first;
            const std::size_t against_a = a_is_first ? t.second_over_first : t.first_over_second;
            if (against_a > for_a) { never_beaten = false; break; }
        }
        if (never_beaten) winners.push_back(a);
    }
    return winners;
}

namespace {

// Thin deterministic wrapper; mt19937_64's output sequence is pinned by the
// standard, and we avoid std::uniform_int_distribution because its mapping
// is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
    bool coin() { return (eng_() & 1u) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

WeakOrder singleton_classes(const AltVec& seq) {
    std::vector<AltVec> classes;
    for (const auto& a : seq) classes.push_back({a});
    return WeakOrder(std::move(classes));
}

}  // namespace

std::string alternative_name(std::size_t index) {
    std::string s;
    while (true) {
        s.insert(s.begin(), static_cast<char>('a' + index % 26));
        if (index < 26) break;
        index = index / 26 - 1;
    }
    return s;
}

GeneratedProfile generate(ProfileKind kind, std::size_t m, std::size_t n,
                          std::uint64_t seed) {
    if (m == 0) throw InputError("a profile needs at least one alternative");
    Rng rng(seed);

    AltVec alts;
    for (std::size_t i = 0; i < m; ++i) alts.emplace_back(alternative_name(i));

    std::optional<LinearOrder> axis;
    if (kind == ProfileKind::SinglePeaked) {
        AltVec axis_seq = alts;
        rng.shuffle(axis_seq);
        axis = LinearOrder(std::move(axis_seq));
    }

    std::vector<Voter<WeakOrder>> voters;
    for (std::size_t v = 0; v < n; ++v) {
        const std::string name = std::to_string(v + 1);
        switch (kind) {
            case ProfileKind::RandomWeak: {
                AltVec seq = alts;
                rng.shuffle(seq);
                std::vector<AltVec> classes{{seq[0]}};
                for (std::size_t i = 1; i < m; ++i) {
                    if (rng.coin()) classes.emplace_back();
                    classes.back().push_back(seq[i]);
                }
                voters.push_back({name, WeakOrder(std::move(classes))});
                break;
            }
            case ProfileKind::RandomLinear: {
                AltVec seq = alts;
                rng.shuffle(seq);
                voters.push_back({name, singleton_classes(seq)});
                break;
            }
            case ProfileKind::Dichotomous: {
                AltVec seq = alts;
                rng.shuffle(seq);
                const std::size_t k = 1 + rng.below(m);
                std::vector<AltVec> classes{AltVec(seq.begin(), seq.begin() + k)};
                if (k < m) classes.emplace_back(seq.begin() + k, seq.end());
                voters.push_back({name, WeakOrder(std::move(classes))});
                break;
            }
            case ProfileKind::SinglePeaked: {
                const AltVec& ax = axis->sequence();
                const std::size_t peak = rng.below(m);
                AltVec seq{ax[peak]};
                std::size_t l = peak, r = peak + 1;
                while (l > 0 && r < m) {
                    if (rng.coin())
                        seq.push_back(ax[--l]);
                    else
                        seq.push_back(ax[r++]);
                }
                while (l > 0) seq.push_back(ax[--l]);
                while (r < m) seq.push_back(ax[r++]);
                voters.push_back({name, singleton_classes(seq)});
                break;
            }
        }
    }
    return GeneratedProfile{WeakProfile(std::move(alts), std::move(voters)), std::move(axis)};
}

}  // namespace topmono
