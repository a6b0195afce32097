#include "topmono/verify.hpp"

#include <algorithm>

namespace topmono {

namespace {

std::size_t alt_index(const AltVec& sorted_alts, const Alternative& a) {
    return static_cast<std::size_t>(
        std::lower_bound(sorted_alts.begin(), sorted_alts.end(), a) - sorted_alts.begin());
}

}  // namespace

VerifyContext::VerifyContext(const WeakProfile& profile)
    : profile_(profile), family_(triple_family(profile)) {
    const AltVec& alts = profile.alternatives();
    const std::size_t n = profile.voter_count();

    ranks_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ranks_[i].resize(alts.size());
        for (std::size_t a = 0; a < alts.size(); ++a)
            ranks_[i][a] = profile.relation(i).rank(alts[a]);
    }

    members_.resize(family_.size());
    tops_.resize(family_.size());
    for (std::size_t s = 0; s < family_.size(); ++s) {
        for (const auto& a : family_[s]) members_[s].push_back(alt_index(alts, a));
        tops_[s].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = ranks_[i][members_[s][0]];
            for (std::size_t a : members_[s]) best = std::min(best, ranks_[i][a]);
            for (std::size_t a : members_[s])
                if (ranks_[i][a] == best) tops_[s][i].push_back(a);
        }
    }
}

std::optional<TmViolation> VerifyContext::check(const LinearOrder& order,
                                                VerifyStats* stats) const {
    const AltVec& alts = profile_.alternatives();
    if (order.alternatives() != alts)
        throw InputError("candidate order must range over exactly the profile's alternatives");

    std::vector<std::size_t> pos(alts.size());
    for (std::size_t a = 0; a < alts.size(); ++a) pos[a] = order.position(alts[a]);

    const std::size_t n = profile_.voter_count();
    std::uint64_t checks = 0;

    for (std::size_t s = 0; s < family_.size(); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& ranks_i = ranks_[i];
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t x : tops_[s][i]) {
                    for (std::size_t y : tops_[s][j]) {
                        for (std::size_t z : members_[s]) {
                            ++checks;
                            if (x == y || z == x || z == y) continue;
                            const bool between = (pos[x] < pos[y] && pos[y] < pos[z]) ||
                                                 (pos[z] < pos[y] && pos[y] < pos[x]);
                            if (!between) continue;
                            const bool z_in_tops =
                                std::binary_search(tops_[s][i].begin(), tops_[s][i].end(), z) ||
                                std::binary_search(tops_[s][j].begin(), tops_[s][j].end(), z);
                            const bool ok = z_in_tops ? ranks_i[y] <= ranks_i[z]
                                                      : ranks_i[y] < ranks_i[z];
                            if (ok) continue;
                            if (stats) stats->tuple_checks += checks;
                            return TmViolation{
                                family_[s],
                                i,
                                j,
                                alts[x],
                                alts[y],
                                alts[z],
                                z_in_tops ? TmViolationReason::IndifferenceRequired
                                          : TmViolationReason::StrictRequired};
                        }
                    }
                }
            }
        }
    }
    if (stats) stats->tuple_checks += checks;
    return std::nullopt;
}

std::optional<TmViolation> verify_tm(const WeakProfile& profile, const LinearOrder& order,
                                     VerifyStats* stats) {
    return VerifyContext(profile).check(order, stats);
}

}  // namespace topmono
