#include <doctest.h>

#include <algorithm>

#include "support/builders.hpp"
#include "topmono/nb.hpp"
#include "topmono/structure.hpp"

using namespace topmono;
using builders::alts;
using builders::linear;
using builders::weak;
using builders::wprofile;

namespace {

NBConstraint nb(const char* middle, const char* o1, const char* o2) {
    return NBConstraint(Alternative(middle), Alternative(o1), Alternative(o2));
}

NBConstraintSet nbset(std::initializer_list<const char*> elements,
                      std::vector<NBConstraint> cs) {
    return NBConstraintSet(alts(elements), std::move(cs));
}

// Pseudo-random constraint sets for property sweeps: element count and
// constraint triples driven off a small linear congruence.
NBConstraintSet random_nbset(std::uint64_t seed, std::size_t m, std::size_t count) {
    AltVec elements;
    for (std::size_t i = 0; i < m; ++i) elements.push_back(Alternative(alternative_name(i)));
    std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next = [&state](std::size_t bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::size_t>((state >> 33) % bound);
    };
    std::vector<NBConstraint> cs;
    while (cs.size() < count) {
        const std::size_t a = next(m), b = next(m), c = next(m);
        if (a == b || b == c || a == c) continue;
        cs.emplace_back(elements[a], elements[b], elements[c]);
    }
    return NBConstraintSet(std::move(elements), std::move(cs));
}

}  // namespace

TEST_CASE("constraints canonicalize their outer pair") {
    const NBConstraint c = nb("b", "c", "a");
    CHECK(c.middle() == Alternative("b"));
    CHECK(c.outer().first == Alternative("a"));
    CHECK(c.outer().second == Alternative("c"));
    CHECK(c == nb("b", "a", "c"));
    CHECK_THROWS_AS(nb("b", "b", "c"), InputError);
    CHECK_THROWS_AS(nb("b", "a", "a"), InputError);
    CHECK_THROWS_AS(nb("b", "a", "b"), InputError);
    CHECK(nb("a", "b", "c") < nb("b", "a", "c"));
    CHECK(nb("b", "a", "c") < nb("b", "a", "d"));
}

TEST_CASE("constraint sets deduplicate and sort") {
    const NBConstraintSet cs =
        nbset({"a", "b", "c"}, {nb("c", "a", "b"), nb("b", "c", "a"), nb("b", "a", "c")});
    REQUIRE(cs.size() == 2);
    CHECK(cs.constraints()[0] == nb("b", "a", "c"));
    CHECK(cs.constraints()[1] == nb("c", "a", "b"));

    CHECK_THROWS_AS(nbset({"a", "b"}, {nb("b", "a", "c")}), InputError);
    CHECK_THROWS_AS(NBConstraintSet({}, {}), InputError);
    CHECK_NOTHROW(nbset({"a"}, {}));
}

TEST_CASE("extraction reproduces the rotating-tops constraint set") {
    const WeakProfile p = wprofile(
        {"x", "y", "z"},
        {weak({{"x"}, {"y", "z"}}), weak({{"y"}, {"x", "z"}}), weak({{"z"}, {"x", "y"}})});
    const NBConstraintSet cs = extract_constraints(p);
    CHECK(cs.elements() == alts({"x", "y", "z"}));
    REQUIRE(cs.size() == 3);
    CHECK(cs.constraints()[0] == nb("x", "y", "z"));
    CHECK(cs.constraints()[1] == nb("y", "x", "z"));
    CHECK(cs.constraints()[2] == nb("z", "x", "y"));
}

TEST_CASE("extraction of trivial profiles is empty") {
    CHECK(extract_constraints(WeakProfile(alts({"a", "b", "c"}), {})).empty());
    // single voter
    CHECK(extract_constraints(wprofile({"a", "b", "c"}, {weak({{"b"}, {"a", "c"}})})).empty());
    // identical voters, linear
    CHECK(extract_constraints(
              wprofile({"a", "b"}, {weak({{"a"}, {"b"}}), weak({{"a"}, {"b"}})}))
              .empty());
}

TEST_CASE("extraction is bounded by the cube of the alternative count") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto kind = static_cast<ProfileKind>(seed % 4);
        const std::size_t m = 2 + seed % 5;
        const WeakProfile p = generate(kind, m, 1 + seed % 5, seed).profile;
        CHECK(extract_constraints(p).size() <= m * m * m);
    }
}

TEST_CASE("order_violation reports the first broken constraint in canonical order") {
    const NBConstraintSet cs =
        nbset({"a", "b", "c", "d"}, {nb("c", "b", "d"), nb("b", "a", "c")});
    // a > b > c > d breaks both; the canonical first is (b, {a, c})
    const auto v = order_violation(linear({"a", "b", "c", "d"}), cs);
    REQUIRE(v.has_value());
    CHECK(*v == nb("b", "a", "c"));
    // b > d > c > a breaks neither: b outside {a..c} span, c not between b and d
    CHECK(order_satisfies(linear({"b", "d", "c", "a"}), cs));
    CHECK_THROWS_AS(order_violation(linear({"a", "b", "c"}), cs), InputError);
}

TEST_CASE("partial satisfaction needs the middle clear of both outers") {
    const NBConstraintSet cs = nbset({"a", "b", "c"}, {nb("b", "a", "c")});
    // chain a > b > c traps b between the outers
    CHECK(partial_unforced(builders::partial({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), cs)
              .has_value());
    // b above both outers: forced
    CHECK(partial_satisfies(builders::partial({"a", "b", "c"}, {{"b", "a"}, {"b", "c"}}), cs));
    // b below both outers: forced
    CHECK(partial_satisfies(builders::partial({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}}), cs));
    // incomparable does not count, even though some extension would comply
    CHECK(partial_unforced(builders::partial({"a", "b", "c"}, {{"a", "c"}}), cs).has_value());
}

TEST_CASE("solver finds the lexicographically first witness") {
    SUBCASE("single constraint") {
        const auto w = solve_nb(nbset({"a", "b", "c"}, {nb("b", "a", "c")}));
        REQUIRE(w.has_value());
        CHECK(*w == linear({"a", "c", "b"}));
    }
    SUBCASE("pair of constraints") {
        const auto w = solve_nb(nbset({"a", "b", "c"}, {nb("b", "a", "c"), nb("c", "a", "b")}));
        REQUIRE(w.has_value());
        CHECK(*w == linear({"b", "a", "c"}));
    }
    SUBCASE("empty set") {
        const auto w = solve_nb(nbset({"a", "b", "c"}, {}));
        REQUIRE(w.has_value());
        CHECK(*w == linear({"a", "b", "c"}));
    }
    SUBCASE("single element") {
        const auto w = solve_nb(nbset({"a"}, {}));
        REQUIRE(w.has_value());
        CHECK(w->size() == 1);
    }
}

TEST_CASE("the rotating triple is unsatisfiable") {
    const NBConstraintSet cs =
        nbset({"a", "b", "c"}, {nb("a", "b", "c"), nb("b", "a", "c"), nb("c", "a", "b")});
    SolveStats stats;
    CHECK(!solve_nb(cs, {}, &stats).has_value());
    CHECK(stats.nodes > 0);
    CHECK(!brute_force_nb(cs).has_value());
}

TEST_CASE("solver output always satisfies the set") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t m = 3 + seed % 4;
        const NBConstraintSet cs = random_nbset(seed, m, 1 + seed % 5);
        const auto w = solve_nb(cs);
        if (w) CHECK(order_satisfies(*w, cs));
    }
}

TEST_CASE("solver agrees with the brute-force oracle, witness included") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t m = 3 + seed % 4;
        const NBConstraintSet cs = random_nbset(seed, m, 1 + seed % 6);
        const auto fast = solve_nb(cs);
        const auto slow = brute_force_nb(cs);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) CHECK(*fast == *slow);  // both scans are lexicographic-first
    }
}

TEST_CASE("reversal pruning preserves satisfiability") {
    SolveOptions pruned;
    pruned.reversal_pruning = true;
    for (std::uint64_t seed = 500; seed < 580; ++seed) {
        const NBConstraintSet cs = random_nbset(seed, 4 + seed % 3, 2 + seed % 5);
        const auto base = solve_nb(cs);
        const auto quick = solve_nb(cs, pruned);
        CHECK(base.has_value() == quick.has_value());
        if (quick) CHECK(order_satisfies(*quick, cs));
    }
}

TEST_CASE("the node budget aborts hopeless searches") {
    const NBConstraintSet cs =
        nbset({"a", "b", "c"}, {nb("a", "b", "c"), nb("b", "a", "c"), nb("c", "a", "b")});
    SolveOptions tight;
    tight.node_budget = 3;
    CHECK_THROWS_AS(solve_nb(cs, tight), BudgetError);
}

TEST_CASE("the brute-force oracle is capped") {
    AltVec nine;
    for (std::size_t i = 0; i < 9; ++i) nine.push_back(Alternative(alternative_name(i)));
    CHECK_THROWS_AS(brute_force_nb(NBConstraintSet(nine, {})), CapacityError);
}
