// Acceptance sweep: one line per criterion, PASS or FAIL with a reason.
// Exit code 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/schema.hpp"
#include "topmono/decide.hpp"
#include "topmono/io.hpp"
#include "topmono/nb.hpp"
#include "topmono/structure.hpp"
#include "topmono/verify.hpp"

using namespace topmono;

namespace {

struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed * 2862933555777941757ull + 3037000493ull) {}
    std::size_t next(std::size_t bound) {
        state = state * 2862933555777941757ull + 3037000493ull;
        return static_cast<std::size_t>((state >> 33) % bound);
    }
};

std::string fail(const std::string& detail) { return detail; }

NBConstraint nb(const char* middle, const char* o1, const char* o2) {
    return NBConstraint(Alternative(middle), Alternative(o1), Alternative(o2));
}

WeakProfile rotating_tops() {
    auto cls = [](std::initializer_list<std::initializer_list<const char*>> classes) {
        std::vector<AltVec> out;
        for (const auto& c : classes) {
            AltVec members;
            for (const char* id : c) members.emplace_back(id);
            out.push_back(std::move(members));
        }
        return WeakOrder(std::move(out));
    };
    AltVec xyz{Alternative("x"), Alternative("y"), Alternative("z")};
    return WeakProfile(xyz, {{"1", cls({{"x"}, {"y", "z"}})},
                             {"2", cls({{"y"}, {"x", "z"}})},
                             {"3", cls({{"z"}, {"x", "y"}})}});
}

LinearOrder random_order(Lcg& rng, AltVec alternatives) {
    for (std::size_t i = alternatives.size(); i > 1; --i)
        std::swap(alternatives[i - 1], alternatives[rng.next(i)]);
    return LinearOrder(std::move(alternatives));
}

NBConstraintSet random_nbset(Lcg& rng, std::size_t m, std::size_t count) {
    AltVec elements;
    for (std::size_t i = 0; i < m; ++i) elements.push_back(Alternative(alternative_name(i)));
    std::vector<NBConstraint> cs;
    while (cs.size() < count) {
        const std::size_t a = rng.next(m), b = rng.next(m), c = rng.next(m);
        if (a == b || b == c || a == c) continue;
        cs.emplace_back(elements[a], elements[b], elements[c]);
    }
    return NBConstraintSet(std::move(elements), std::move(cs));
}

// ---- criteria ----

std::string golden_example() {
    const WeakProfile p = rotating_tops();
    if (test_tm(p).status != TmStatus::NotTopMonotonic)
        return fail("constraint pipeline accepted the blocked profile");
    if (test_tm_bruteforce(p).status != TmStatus::NotTopMonotonic)
        return fail("brute-force scan accepted the blocked profile");
    const NBConstraintSet expected(
        p.alternatives(), {nb("x", "y", "z"), nb("y", "x", "z"), nb("z", "x", "y")});
    if (!(extract_constraints(p) == expected))
        return fail("extracted constraint set differs from the published one");
    return "";
}

std::string extraction_bound() {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto kind = static_cast<ProfileKind>(seed % 4);
        const std::size_t m = 1 + seed % 6, n = seed % 6;
        const WeakProfile p = generate(kind, m, n, seed).profile;
        const std::size_t count = extract_constraints(p).size();
        if (count > m * m * m) {
            std::ostringstream msg;
            msg << "seed " << seed << ": " << count << " constraints for m=" << m;
            return fail(msg.str());
        }
    }
    return "";
}

std::string characterization() {
    AltVec abc{Alternative("a"), Alternative("b"), Alternative("c")};
    const std::vector<WeakOrder> orders = oracles::all_weak_orders(abc);

    std::vector<WeakProfile> profiles{WeakProfile(abc, {})};
    for (const auto& w1 : orders) {
        profiles.push_back(WeakProfile(abc, {{"1", w1}}));
        for (const auto& w2 : orders)
            profiles.push_back(WeakProfile(abc, {{"1", w1}, {"2", w2}}));
    }

    std::size_t checked = 0;
    for (const WeakProfile& p : profiles) {
        const NBConstraintSet cs = extract_constraints(p);
        const VerifyContext ctx(p);
        AltVec perm = abc;
        do {
            const LinearOrder order(perm);
            const bool accepted = !ctx.check(order).has_value();
            const bool satisfied = order_satisfies(order, cs);
            ++checked;
            if (accepted != satisfied) {
                std::ostringstream msg;
                msg << "profile " << serialize_profile(p) << "order "
                    << serialize_order(order) << ": verify "
                    << (accepted ? "ok" : "violation") << " but constraints "
                    << (satisfied ? "satisfied" : "broken");
                return fail(msg.str());
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (checked != profiles.size() * 6) return fail("sweep size mismatch");
    return "";
}

std::string pipeline_vs_oracle() {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto kind = static_cast<ProfileKind>(seed % 4);
        const std::size_t m = 1 + seed % 6, n = seed % 6;
        const WeakProfile p = generate(kind, m, n, seed).profile;
        const TmStatus fast = test_tm(p).status;
        const TmStatus slow = test_tm_bruteforce(p).status;
        if (fast != slow) {
            std::ostringstream msg;
            msg << "seed " << seed << ": pipeline and brute force disagree on\n"
                << serialize_profile(p);
            return fail(msg.str());
        }
    }
    return "";
}

std::string reversal_invariance() {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto kind = static_cast<ProfileKind>(seed % 4);
        const std::size_t m = 1 + seed % 6, n = seed % 6;
        const WeakProfile p = generate(kind, m, n, seed).profile;
        Lcg rng(seed ^ 0x5eed);
        const LinearOrder order = random_order(rng, p.alternatives());
        const bool forward = !verify_tm(p, order).has_value();
        const bool backward = !verify_tm(p, order.reversed()).has_value();
        if (forward != backward) {
            std::ostringstream msg;
            msg << "seed " << seed << ": order " << serialize_order(order)
                << " accepted differently from its reverse";
            return fail(msg.str());
        }
    }
    return "";
}

std::string single_peaked_implies_tm() {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t m = 1 + seed % 6, n = seed % 7;
        const GeneratedProfile g = generate(ProfileKind::SinglePeaked, m, n, seed);
        if (verify_tm(g.profile, *g.axis).has_value()) {
            std::ostringstream msg;
            msg << "seed " << seed << ": generation axis rejected";
            return fail(msg.str());
        }
        if (test_tm(g.profile).status != TmStatus::TopMonotonic) {
            std::ostringstream msg;
            msg << "seed " << seed << ": single-peaked profile decided not top monotone";
            return fail(msg.str());
        }
    }
    return "";
}

std::string reduction_round_trip() {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Lcg rng(seed);
        const std::size_t m = 3 + rng.next(3), count = 1 + rng.next(3);
        const NBConstraintSet cs = random_nbset(rng, m, count);
        const std::optional<LinearOrder> witness = solve_nb(cs);

        const PartialProfile gadget = reduce_nb_to_profile(cs);
        PartialTestOptions options;
        options.max_voters = 9;
        const TmDecision d = test_tm_partial(gadget, options);
        const bool tm = d.status == TmStatus::TopMonotonic;
        if (tm != witness.has_value()) {
            std::ostringstream msg;
            msg << "seed " << seed << ": constraints "
                << (witness ? "satisfiable" : "unsatisfiable") << " but gadget decided "
                << (tm ? "top monotone" : "not top monotone");
            return fail(msg.str());
        }
        if (!witness) continue;

        const WeakProfile ext = single_peaked_extension(gadget, *witness);
        if (!is_single_peaked_wrt(ext, *witness)) {
            std::ostringstream msg;
            msg << "seed " << seed << ": extension not single peaked on the witness";
            return fail(msg.str());
        }
        for (std::size_t i = 0; i < gadget.voter_count(); ++i)
            for (const auto& [hi, lo] : gadget.relation(i).pairs())
                if (!ext.relation(i).strictly_prefers(hi, lo)) {
                    std::ostringstream msg;
                    msg << "seed " << seed << ": voter " << gadget.voters()[i].name
                        << " extension drops " << hi.id() << " > " << lo.id();
                    return fail(msg.str());
                }
    }
    return "";
}

std::string solver_vs_oracle() {
    // exhaustive over 3 elements: every subset of the three possible constraints
    AltVec abc{Alternative("a"), Alternative("b"), Alternative("c")};
    const std::vector<NBConstraint> all3{nb("a", "b", "c"), nb("b", "a", "c"),
                                         nb("c", "a", "b")};
    for (std::size_t mask = 0; mask < 8; ++mask) {
        std::vector<NBConstraint> cs;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask & (1u << i)) cs.push_back(all3[i]);
        const NBConstraintSet set(abc, cs);
        if (solve_nb(set).has_value() != brute_force_nb(set).has_value()) {
            std::ostringstream msg;
            msg << "3-element subset " << mask << ": solver and oracle disagree";
            return fail(msg.str());
        }
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Lcg rng(seed * 31 + 7);
        const std::size_t m = 3 + rng.next(5), count = rng.next(7);
        const NBConstraintSet cs = random_nbset(rng, m, count);
        if (solve_nb(cs).has_value() != brute_force_nb(cs).has_value()) {
            std::ostringstream msg;
            msg << "seed " << seed << ": solver and oracle disagree on\n" << serialize_nb(cs);
            return fail(msg.str());
        }
    }
    return "";
}

std::string single_voter_universality() {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t m = 1 + seed % 6;
        const WeakProfile p = generate(ProfileKind::RandomWeak, m, 1, seed).profile;
        const TmDecision d = test_tm(p);
        if (d.status != TmStatus::TopMonotonic) {
            std::ostringstream msg;
            msg << "seed " << seed << ": single-voter profile rejected";
            return fail(msg.str());
        }
        if (!d.certificate || !d.certificate->empty()) {
            std::ostringstream msg;
            msg << "seed " << seed << ": single-voter profile extracted constraints";
            return fail(msg.str());
        }
    }
    return "";
}

std::string format_round_trip() {
    namespace fs = std::filesystem;
    std::vector<fs::path> toc, nbdocs;
    for (const auto& entry : fs::directory_iterator(TOPMONO_FIXTURE_DIR)) {
        if (entry.path().extension() == ".toc") toc.push_back(entry.path());
        if (entry.path().extension() == ".nb") nbdocs.push_back(entry.path());
    }
    std::sort(toc.begin(), toc.end());
    std::sort(nbdocs.begin(), nbdocs.end());
    if (toc.empty() || nbdocs.empty()) return fail("fixture corpus missing");

    for (const auto& path : toc) {
        const ParsedProfile p = parse_profile(helpers::slurp(path.string()));
        const std::string text =
            p.is_weak() ? serialize_profile(p.weak()) : serialize_profile(p.partial());
        const ParsedProfile back = parse_profile(text);
        const bool same =
            p.is_weak() ? (back.is_weak() && back.weak() == p.weak())
                        : (!back.is_weak() && back.partial() == p.partial());
        const std::string again =
            back.is_weak() ? serialize_profile(back.weak()) : serialize_profile(back.partial());
        if (!same || again != text)
            return fail(path.filename().string() + ": profile round-trip not an identity");
    }
    for (const auto& path : nbdocs) {
        const NBConstraintSet cs = parse_nb(helpers::slurp(path.string()));
        const std::string text = serialize_nb(cs);
        if (!(parse_nb(text) == cs) || serialize_nb(parse_nb(text)) != text)
            return fail(path.filename().string() + ": constraint round-trip not an identity");
    }

    // every command's JSON report must validate against the published schema
    const auto validator = schema::load_report_validator();
    const std::string gadget = helpers::temp_file(
        "acceptance_gadget.toc",
        helpers::run_cli({"reduce", helpers::fixture_path("single_constraint.nb")}).out);
    const std::vector<std::vector<std::string>> invocations = {
        {"check", helpers::fixture_path("example.toc"), "--order", "x>y>z", "--json"},
        {"check", helpers::fixture_path("sp5.toc"), "--order", "b>d>e>c>a", "--json"},
        {"test", helpers::fixture_path("example.toc"), "--json"},
        {"test", helpers::fixture_path("single.toc"), "--json"},
        {"test", helpers::fixture_path("weak46.toc"), "--brute-force", "--json"},
        {"extract-nb", helpers::fixture_path("example.toc"), "--json"},
        {"solve-nb", helpers::fixture_path("pair.nb"), "--json"},
        {"solve-nb", helpers::fixture_path("triple_unsat.nb"), "--json"},
        {"solve-nb", helpers::fixture_path("empty.nb"), "--brute-force", "--json"},
        {"reduce", helpers::fixture_path("triple_unsat.nb"), "--json"},
        {"test-partial", gadget, "--json"},
        {"test-partial", helpers::fixture_path("partial_empty.toc"), "--json"},
        {"sp-extend", gadget, "--order", "b>a>c", "--json"},
        {"gen", "--kind", "weak", "-m", "5", "-n", "4", "--seed", "21", "--json"},
        {"gen", "--kind", "single-peaked", "-m", "6", "-n", "3", "--seed", "4", "--json"},
        {"analyze", helpers::fixture_path("weak46.toc"), "--json"},
        {"analyze", helpers::fixture_path("linear3.toc"), "--json"},
        {"analyze", helpers::fixture_path("zero_voters.toc"), "--json"},
    };
    for (const auto& args : invocations) {
        const helpers::CliResult r = helpers::run_cli(args);
        if (r.code > 1) return fail(args[0] + ": command failed: " + r.err);
        const std::string verdict = validator.validate(nlohmann::json::parse(r.out));
        if (!verdict.empty()) return fail(args[0] + ": report rejected: " + verdict);
    }
    return "";
}

struct Criterion {
    std::string name;
    double time_limit = 0.0;  // seconds; 0 means no limit
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden rotating-tops example", 1.0, golden_example},
        {"extraction bound |C| <= m^3 over 10000 profiles", 0.0, extraction_bound},
        {"characterization: verify ok iff extracted set satisfied", 60.0, characterization},
        {"decision pipeline agrees with brute-force oracle", 300.0, pipeline_vs_oracle},
        {"acceptance of an order is reversal-invariant", 0.0, reversal_invariance},
        {"single-peaked profiles are top monotone", 0.0, single_peaked_implies_tm},
        {"reduction round-trip with single-peaked extensions", 600.0, reduction_round_trip},
        {"solver agrees with brute-force oracle", 0.0, solver_vs_oracle},
        {"single-voter profiles pass universally", 0.0, single_voter_universality},
        {"format round-trip and schema validation", 0.0, format_round_trip},
    };

    std::size_t passed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && c.time_limit > 0.0 && elapsed > c.time_limit) {
            std::ostringstream msg;
            msg << "correct but took " << std::fixed << std::setprecision(1) << elapsed
                << " s, limit " << c.time_limit << " s";
            detail = msg.str();
        }
        const bool ok = detail.empty();
        if (ok) ++passed;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << " (" << std::fixed
                  << std::setprecision(2) << elapsed << " s)";
        if (!ok) std::cout << "\n      " << detail;
        std::cout << "\n";
    }
    std::cout << passed << "/" << criteria.size() << " criteria passed\n";
    return passed == criteria.size() ? 0 : 1;
}
