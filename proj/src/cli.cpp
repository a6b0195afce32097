#include "topmono/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topmono/decide.hpp"
#include "topmono/errors.hpp"
#include "topmono/io.hpp"
#include "topmono/nb.hpp"
#include "topmono/structure.hpp"
#include "topmono/verify.hpp"

namespace topmono {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join_ids(const AltVec& alts) {
    std::string out;
    for (std::size_t i = 0; i < alts.size(); ++i) {
        if (i) out += ", ";
        out += alts[i].id();
    }
    return out;
}

json alt_array(const AltVec& alts) {
    json arr = json::array();
    for (const auto& a : alts) arr.push_back(a.id());
    return arr;
}

json profile_json(const AltVec& alts, std::size_t voters) {
    return json{{"alternatives", alt_array(alts)}, {"voters", voters}};
}

const char* reason_name(TmViolationReason r) {
    return r == TmViolationReason::StrictRequired ? "strict-required"
                                                  : "indifference-required";
}

json violation_json(const WeakProfile& profile, const TmViolation& v) {
    return json{{"witness_set", alt_array(v.witness_set)},
                {"voter_i", v.voter_i},
                {"voter_j", v.voter_j},
                {"voter_i_name", profile.voters()[v.voter_i].name},
                {"voter_j_name", profile.voters()[v.voter_j].name},
                {"x", v.x.id()},
                {"y", v.y.id()},
                {"z", v.z.id()},
                {"reason", reason_name(v.reason)}};
}

json constraints_json(const NBConstraintSet& cs) {
    json arr = json::array();
    for (const auto& c : cs.constraints())
        arr.push_back(json{
            {"middle", c.middle().id()},
            {"outer", json::array({c.outer().first.id(), c.outer().second.id()})}});
    return arr;
}

json stats_json(const DecisionStats& s) {
    return json{{"constraints_extracted", s.constraints_extracted},
                {"search_nodes", s.search_nodes},
                {"elapsed_seconds", s.elapsed_seconds}};
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << "\n"; }

struct CheckArgs {
    std::string path;
    std::string order;
    bool as_json = false;
};

int run_check(const CheckArgs& a, std::ostream& out) {
    const WeakProfile profile = as_weak_profile(parse_profile(read_file(a.path)));
    const LinearOrder order = parse_order(a.order, profile.alternatives());
    VerifyStats stats;
    const auto violation = verify_tm(profile, order, &stats);

    if (a.as_json) {
        json report{{"command", "check"},
                    {"profile", profile_json(profile.alternatives(), profile.voter_count())},
                    {"order", serialize_order(order)},
                    {"ok", !violation.has_value()},
                    {"violation", violation ? violation_json(profile, *violation) : json()},
                    {"tuple_checks", stats.tuple_checks}};
        emit(out, report);
    } else if (!violation) {
        out << "ok\n";
    } else {
        const TmViolation& v = *violation;
        const std::string& ni = profile.voters()[v.voter_i].name;
        const std::string& nj = profile.voters()[v.voter_j].name;
        out << "violation in set {" << join_ids(v.witness_set) << "}: " << v.y.id()
            << " lies between " << v.x.id() << " and " << v.z.id() << ", so voter '" << ni
            << "' must " << (v.reason == TmViolationReason::StrictRequired ? "strictly" : "weakly")
            << " prefer " << v.y.id() << " over " << v.z.id() << " (" << v.x.id()
            << " tops voter '" << ni << "', " << v.y.id() << " tops voter '" << nj << "')\n";
    }
    return violation ? 1 : 0;
}

struct TestArgs {
    std::string path;
    std::uint64_t budget = SolveOptions{}.node_budget;
    bool reversal = false;
    bool brute = false;
    bool as_json = false;
};

int run_test(const TestArgs& a, std::ostream& out) {
    const WeakProfile profile = as_weak_profile(parse_profile(read_file(a.path)));
    TmDecision d;
    if (a.brute) {
        d = test_tm_bruteforce(profile);
    } else {
        SolveOptions solve;
        solve.node_budget = a.budget;
        solve.reversal_pruning = a.reversal;
        d = test_tm(profile, solve);
    }
    const bool tm = d.status == TmStatus::TopMonotonic;

    if (a.as_json) {
        json report{{"command", "test"},
                    {"profile", profile_json(profile.alternatives(), profile.voter_count())},
                    {"method", a.brute ? "brute-force" : "pipeline"},
                    {"top_monotone", tm},
                    {"witness", d.witness ? json(serialize_order(*d.witness)) : json()},
                    {"constraints",
                     d.certificate ? constraints_json(*d.certificate) : json()},
                    {"stats", stats_json(d.stats)}};
        emit(out, report);
    } else {
        out << (tm ? "top monotone\n" : "not top monotone\n");
        if (d.witness) out << "witness: " << serialize_order(*d.witness) << "\n";
        if (d.certificate) out << "constraints: " << d.stats.constraints_extracted << "\n";
        out << "nodes: " << d.stats.search_nodes << "\n";
    }
    return tm ? 0 : 1;
}

struct ExtractArgs {
    std::string path;
    bool as_json = false;
};

int run_extract(const ExtractArgs& a, std::ostream& out) {
    const WeakProfile profile = as_weak_profile(parse_profile(read_file(a.path)));
    const NBConstraintSet cs = extract_constraints(profile);
    if (a.as_json) {
        json report{{"command", "extract-nb"},
                    {"elements", alt_array(cs.elements())},
                    {"constraints", constraints_json(cs)}};
        emit(out, report);
    } else {
        out << serialize_nb(cs);
    }
    return 0;
}

struct SolveArgs {
    std::string path;
    std::uint64_t budget = SolveOptions{}.node_budget;
    bool reversal = false;
    bool brute = false;
    bool as_json = false;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
    const NBConstraintSet cs = parse_nb(read_file(a.path));
    std::optional<LinearOrder> witness;
    json nodes;  // null under brute force, where no search tree exists
    if (a.brute) {
        witness = brute_force_nb(cs);
    } else {
        SolveOptions solve;
        solve.node_budget = a.budget;
        solve.reversal_pruning = a.reversal;
        SolveStats stats;
        witness = solve_nb(cs, solve, &stats);
        nodes = stats.nodes;
    }

    if (a.as_json) {
        json report{{"command", "solve-nb"},
                    {"elements", alt_array(cs.elements())},
                    {"constraint_count", cs.size()},
                    {"method", a.brute ? "brute-force" : "backtracking"},
                    {"satisfiable", witness.has_value()},
                    {"witness", witness ? json(serialize_order(*witness)) : json()},
                    {"nodes", nodes}};
        emit(out, report);
    } else {
        out << (witness ? "satisfiable\n" : "unsatisfiable\n");
        if (witness) out << "witness: " << serialize_order(*witness) << "\n";
        if (!nodes.is_null()) out << "nodes: " << nodes.get<std::uint64_t>() << "\n";
    }
    return witness ? 0 : 1;
}

struct ReduceArgs {
    std::string path;
    bool as_json = false;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
    const NBConstraintSet cs = parse_nb(read_file(a.path));
    const PartialProfile gadget = reduce_nb_to_profile(cs);
    if (a.as_json) {
        json names = json::array();
        for (const auto& v : gadget.voters()) names.push_back(v.name);
        json report{{"command", "reduce"},
                    {"alternatives", alt_array(gadget.alternatives())},
                    {"voter_names", names},
                    {"profile_text", serialize_profile(gadget)}};
        emit(out, report);
    } else {
        out << serialize_profile(gadget);
    }
    return 0;
}

struct TestPartialArgs {
    std::string path;
    std::uint64_t budget = SolveOptions{}.node_budget;
    std::size_t max_alternatives = PartialTestOptions{}.max_alternatives;
    std::size_t max_voters = PartialTestOptions{}.max_voters;
    bool as_json = false;
};

int run_test_partial(const TestPartialArgs& a, std::ostream& out) {
    const PartialProfile profile = as_partial_profile(parse_profile(read_file(a.path)));
    PartialTestOptions options;
    options.max_alternatives = a.max_alternatives;
    options.max_voters = a.max_voters;
    options.solve.node_budget = a.budget;
    const TmDecision d = test_tm_partial(profile, options);
    const bool tm = d.status == TmStatus::TopMonotonic;

    if (a.as_json) {
        json report{{"command", "test-partial"},
                    {"profile", profile_json(profile.alternatives(), profile.voter_count())},
                    {"top_monotone", tm},
                    {"witness", d.witness ? json(serialize_order(*d.witness)) : json()},
                    {"extension_text",
                     d.extension ? json(serialize_profile(*d.extension)) : json()},
                    {"stats", stats_json(d.stats)}};
        emit(out, report);
    } else {
        out << (tm ? "top monotone\n" : "not top monotone\n");
        if (d.witness) out << "witness: " << serialize_order(*d.witness) << "\n";
        if (d.extension) out << "extension:\n" << serialize_profile(*d.extension);
    }
    return tm ? 0 : 1;
}

struct SpExtendArgs {
    std::string path;
    std::string order;
    bool as_json = false;
};

int run_sp_extend(const SpExtendArgs& a, std::ostream& out) {
    const PartialProfile gadget = as_partial_profile(parse_profile(read_file(a.path)));
    const LinearOrder witness = parse_order(a.order, gadget.alternatives());
    const WeakProfile extension = single_peaked_extension(gadget, witness);
    if (a.as_json) {
        json report{{"command", "sp-extend"},
                    {"axis", serialize_order(witness)},
                    {"profile_text", serialize_profile(extension)}};
        emit(out, report);
    } else {
        out << serialize_profile(extension);
    }
    return 0;
}

struct GenArgs {
    std::string kind;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool as_json = false;
};

ProfileKind kind_from_name(const std::string& name) {
    if (name == "weak") return ProfileKind::RandomWeak;
    if (name == "linear") return ProfileKind::RandomLinear;
    if (name == "dichotomous") return ProfileKind::Dichotomous;
    if (name == "single-peaked") return ProfileKind::SinglePeaked;
    throw InputError("unknown profile kind '" + name + "'");
}

int run_gen(const GenArgs& a, std::ostream& out) {
    const GeneratedProfile g = generate(kind_from_name(a.kind), a.m, a.n, a.seed);
    if (a.as_json) {
        json report{{"command", "gen"},
                    {"kind", a.kind},
                    {"m", a.m},
                    {"n", a.n},
                    {"seed", a.seed},
                    {"axis", g.axis ? json(serialize_order(*g.axis)) : json()},
                    {"profile_text", serialize_profile(g.profile)}};
        emit(out, report);
    } else {
        if (g.axis) out << "# axis: " << serialize_order(*g.axis) << "\n";
        out << serialize_profile(g.profile);
    }
    return 0;
}

struct AnalyzeArgs {
    std::string path;
    bool as_json = false;
};

const char* verdict_name(PairVerdict v) {
    switch (v) {
        case PairVerdict::FirstWins: return "first";
        case PairVerdict::SecondWins: return "second";
        default: return "tie";
    }
}

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const WeakProfile profile = as_weak_profile(parse_profile(read_file(a.path)));

    const bool all_linear = std::all_of(
        profile.voters().begin(), profile.voters().end(),
        [](const Voter<WeakOrder>& v) { return v.relation.is_linear(); });
    const bool sp_checked = all_linear && profile.alternatives().size() <= 8;
    const std::optional<LinearOrder> axis =
        sp_checked ? find_sp_axis(profile) : std::nullopt;

    const bool dichotomous = is_dichotomous(profile);
    const MajorityRelation majority = majority_relation(profile);
    const AltVec winners = weak_condorcet_winners(profile);

    if (a.as_json) {
        json tallies = json::array();
        for (const auto& t : majority.tallies())
            tallies.push_back(json{{"first", t.first.id()},
                                   {"second", t.second.id()},
                                   {"first_over_second", t.first_over_second},
                                   {"second_over_first", t.second_over_first},
                                   {"ties", t.ties},
                                   {"verdict", verdict_name(t.verdict())}});
        json report{{"command", "analyze"},
                    {"profile", profile_json(profile.alternatives(), profile.voter_count())},
                    {"dichotomous", dichotomous},
                    {"single_peaked",
                     json{{"checked", sp_checked},
                          {"axis", axis ? json(serialize_order(*axis)) : json()}}},
                    {"weak_condorcet_winners", alt_array(winners)},
                    {"majority", tallies}};
        emit(out, report);
    } else {
        out << "alternatives: " << profile.alternatives().size() << "\n";
        out << "voters: " << profile.voter_count() << "\n";
        out << "dichotomous: " << (dichotomous ? "yes" : "no") << "\n";
        if (!sp_checked)
            out << "single peaked: not checked (needs linear voters and at most 8 "
                   "alternatives)\n";
        else if (axis)
            out << "single peaked: yes, axis " << serialize_order(*axis) << "\n";
        else
            out << "single peaked: no\n";
        out << "weak condorcet winners: "
            << (winners.empty() ? std::string("(none)") : join_ids(winners)) << "\n";
        for (const auto& t : majority.tallies()) {
            out << "  " << t.first.id() << " vs " << t.second.id() << ": "
                << t.first_over_second << "-" << t.second_over_first << ", ties " << t.ties
                << " -> ";
            switch (t.verdict()) {
                case PairVerdict::FirstWins: out << t.first.id(); break;
                case PairVerdict::SecondWins: out << t.second.id(); break;
                default: out << "tie"; break;
            }
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"top monotonicity toolkit", "topmono"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "verify a witness order against a profile");
    c_check->add_option("profile", check.path, "profile document")->required();
    c_check->add_option("--order", check.order, "candidate order, e.g. x>y>z")->required();
    c_check->add_flag("--json", check.as_json, "emit a JSON report");

    TestArgs test;
    auto* c_test = app.add_subcommand("test", "decide top monotonicity of a weak profile");
    c_test->add_option("profile", test.path, "profile document")->required();
    c_test->add_option("--budget", test.budget, "search node budget");
    c_test->add_flag("--reversal-pruning", test.reversal,
                     "prune reversed orders (witness may not be lexicographically first)");
    c_test->add_flag("--brute-force", test.brute,
                     "scan all orders instead of the constraint pipeline (at most 8 "
                     "alternatives)");
    c_test->add_flag("--json", test.as_json, "emit a JSON report");

    ExtractArgs extract;
    auto* c_extract =
        app.add_subcommand("extract-nb", "extract the non-betweenness constraint set");
    c_extract->add_option("profile", extract.path, "profile document")->required();
    c_extract->add_flag("--json", extract.as_json, "emit a JSON report");

    SolveArgs solve;
    auto* c_solve = app.add_subcommand("solve-nb", "find an order satisfying a constraint set");
    c_solve->add_option("constraints", solve.path, "constraint document")->required();
    c_solve->add_option("--budget", solve.budget, "search node budget");
    c_solve->add_flag("--reversal-pruning", solve.reversal,
                      "prune reversed orders (witness may not be lexicographically first)");
    c_solve->add_flag("--brute-force", solve.brute,
                      "scan all permutations instead of backtracking (at most 8 elements)");
    c_solve->add_flag("--json", solve.as_json, "emit a JSON report");

    ReduceArgs reduce;
    auto* c_reduce =
        app.add_subcommand("reduce", "build the hardness gadget profile for a constraint set");
    c_reduce->add_option("constraints", reduce.path, "constraint document")->required();
    c_reduce->add_flag("--json", reduce.as_json, "emit a JSON report");

    TestPartialArgs test_partial;
    auto* c_partial = app.add_subcommand(
        "test-partial", "decide top monotonicity of a partial profile over its extensions");
    c_partial->add_option("profile", test_partial.path, "profile document")->required();
    c_partial->add_option("--budget", test_partial.budget, "search node budget");
    c_partial->add_option("--max-alternatives", test_partial.max_alternatives,
                          "refuse profiles with more alternatives than this");
    c_partial->add_option("--max-voters", test_partial.max_voters,
                          "refuse profiles with more voters than this");
    c_partial->add_flag("--json", test_partial.as_json, "emit a JSON report");

    SpExtendArgs sp_extend;
    auto* c_sp = app.add_subcommand(
        "sp-extend", "extend a gadget profile to linear orders single peaked on the witness");
    c_sp->add_option("profile", sp_extend.path, "gadget profile document")->required();
    c_sp->add_option("--order", sp_extend.order, "witness order, e.g. x>y>z")->required();
    c_sp->add_flag("--json", sp_extend.as_json, "emit a JSON report");

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "generate a pseudo-random profile");
    c_gen->add_option("--kind", gen.kind, "weak, linear, dichotomous or single-peaked")
        ->required()
        ->check(CLI::IsMember({"weak", "linear", "dichotomous", "single-peaked"}));
    c_gen->add_option("-m,--alternatives", gen.m, "number of alternatives")
        ->required()
        ->check(CLI::PositiveNumber);
    c_gen->add_option("-n,--voters", gen.n, "number of voters")->required();
    c_gen->add_option("--seed", gen.seed, "RNG seed");
    c_gen->add_flag("--json", gen.as_json, "emit a JSON report");

    AnalyzeArgs analyze;
    auto* c_analyze = app.add_subcommand("analyze", "structural diagnostics for a profile");
    c_analyze->add_option("profile", analyze.path, "profile document")->required();
    c_analyze->add_flag("--json", analyze.as_json, "emit a JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (c_check->parsed()) return run_check(check, out);
        if (c_test->parsed()) return run_test(test, out);
        if (c_extract->parsed()) return run_extract(extract, out);
        if (c_solve->parsed()) return run_solve(solve, out);
        if (c_reduce->parsed()) return run_reduce(reduce, out);
        if (c_partial->parsed()) return run_test_partial(test_partial, out);
        if (c_sp->parsed()) return run_sp_extend(sp_extend, out);
        if (c_gen->parsed()) return run_gen(gen, out);
        if (c_analyze->parsed()) return run_analyze(analyze, out);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace topmono
