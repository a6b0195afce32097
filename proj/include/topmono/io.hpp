#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "topmono/core.hpp"
#include "topmono/nb.hpp"

namespace topmono {

// Result of parsing a profile document. Documents are homogeneous: either
// every voter line is weak or every voter line is partial. A document with
// no voter lines parses as a weak profile.
struct ParsedProfile {
    std::variant<WeakProfile, PartialProfile> value;

    bool is_weak() const noexcept { return std::holds_alternative<WeakProfile>(value); }
    const WeakProfile& weak() const { return std::get<WeakProfile>(value); }
    const PartialProfile& partial() const { return std::get<PartialProfile>(value); }

    const AltVec& alternatives() const {
        return is_weak() ? weak().alternatives() : partial().alternatives();
    }
    std::size_t voter_count() const {
        return is_weak() ? weak().voter_count() : partial().voter_count();
    }
};

// Profile document:
//   # comment lines and blank lines are ignored
//   alternatives: x, y, z
//   voter 1: {x} > {y, z}          weak voter; braces optional for singletons
//   voter 2 partial: a > c, c > b  partial voter; a list of strict pairs
// Throws ParseError (with 1-based line and column) on malformed input.
ParsedProfile parse_profile(std::string_view text);

// A weak view of a parsed profile; a voterless partial profile converts.
WeakProfile as_weak_profile(const ParsedProfile& parsed);
// A partial view of a parsed profile; a voterless weak profile converts.
PartialProfile as_partial_profile(const ParsedProfile& parsed);

// Canonical form; parse_profile(serialize_profile(p)) reproduces p exactly.
// Partial voters are written as their transitive reduction.
std::string serialize_profile(const WeakProfile& profile);
std::string serialize_profile(const PartialProfile& profile);

// Constraint document:
//   elements: a, b, c
//   nb: b | a, c
NBConstraintSet parse_nb(std::string_view text);
std::string serialize_nb(const NBConstraintSet& cs);

// Witness format "x>y>z". The order must be a permutation of `universe`.
LinearOrder parse_order(std::string_view text, const AltVec& universe);
std::string serialize_order(const LinearOrder& order);

}  // namespace topmono
