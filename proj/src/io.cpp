#include "topmono/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace topmono {

namespace {

struct Tok {
    std::string text;
    std::size_t col = 1;  // 1-based column of the first character
};

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

Tok trim_range(const std::string& line, std::size_t begin, std::size_t end) {
    while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
    return Tok{line.substr(begin, end - begin), begin + 1};
}

std::vector<Tok> split_range(const std::string& line, std::size_t begin, std::size_t end,
                             char delim) {
    std::vector<Tok> out;
    std::size_t start = begin;
    for (std::size_t i = begin; i <= end; ++i) {
        if (i == end || line[i] == delim) {
            out.push_back(trim_range(line, start, i));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
    return lines;
}

// Leading keyword of a significant line: the run of alphabetic characters
// after indentation.
Tok leading_word(const std::string& line) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) ++j;
    return Tok{line.substr(i, j - i), i + 1};
}

Alternative make_alt(const Tok& tok, std::size_t lineno) {
    if (tok.text.empty()) throw ParseError("expected an alternative name", lineno, tok.col);
    try {
        return Alternative(tok.text);
    } catch (const InputError& e) {
        throw ParseError(e.what(), lineno, tok.col);
    }
}

class AltLookup {
public:
    explicit AltLookup(const AltVec& alts) : alts_(alts) {}

    Alternative resolve(const Tok& tok, std::size_t lineno) const {
        Alternative a = make_alt(tok, lineno);
        if (!std::binary_search(alts_.begin(), alts_.end(), a))
            throw ParseError("unknown alternative '" + tok.text + "'", lineno, tok.col);
        return a;
    }

private:
    const AltVec& alts_;
};

struct VoterHeader {
    std::string name;
    bool partial = false;
    std::size_t body_begin = 0;  // offset just past the ':'
};

VoterHeader parse_voter_header(const std::string& line, std::size_t lineno,
                               std::size_t after_keyword) {
    const std::size_t colon = line.find(':', after_keyword);
    if (colon == std::string::npos)
        throw ParseError("voter line is missing ':'", lineno, line.size() + 1);

    std::vector<Tok> words;
    std::size_t i = after_keyword;
    while (i < colon) {
        while (i < colon && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < colon && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) words.push_back(Tok{line.substr(i, j - i), i + 1});
        i = j;
    }

    VoterHeader h;
    h.body_begin = colon + 1;
    if (words.size() == 1) {
        h.name = words[0].text;
    } else if (words.size() == 2 && words[1].text == "partial") {
        h.name = words[0].text;
        h.partial = true;
    } else {
        throw ParseError("expected 'voter <name>:' or 'voter <name> partial:'", lineno,
                         words.empty() ? after_keyword + 1 : words.back().col);
    }
    return h;
}

std::vector<AltVec> parse_weak_classes(const std::string& line, std::size_t lineno,
                                       const VoterHeader& h, const AltLookup& lookup,
                                       const AltVec& alts, const std::string& /*name*/) {
    std::vector<AltVec> classes;
    AltVec seen;
    for (const Tok& cls : split_range(line, h.body_begin, line.size(), '>')) {
        if (cls.text.empty())
            throw ParseError("empty indifference class", lineno, cls.col);
        std::size_t begin = cls.col - 1;  // back to 0-based offset
        std::size_t end = begin + cls.text.size();
        if (line[begin] == '{') {
            if (line[end - 1] != '}')
                throw ParseError("unbalanced '{' in indifference class", lineno, cls.col);
            ++begin;
            --end;
        } else if (line[end - 1] == '}') {
            throw ParseError("unbalanced '}' in indifference class", lineno, cls.col);
        }
        AltVec members;
        for (const Tok& id : split_range(line, begin, end, ',')) {
            Alternative a = lookup.resolve(id, lineno);
            if (std::binary_search(seen.begin(), seen.end(), a))
                throw ParseError("alternative '" + id.text + "' is ranked twice", lineno,
                                 id.col);
            seen.insert(std::upper_bound(seen.begin(), seen.end(), a), a);
            members.push_back(std::move(a));
        }
        classes.push_back(std::move(members));
    }
    for (const auto& a : alts)
        if (!std::binary_search(seen.begin(), seen.end(), a))
            throw ParseError("voter does not rank alternative '" + a.id() + "'", lineno, 1);
    return classes;
}

std::vector<std::pair<Alternative, Alternative>> parse_partial_pairs(
    const std::string& line, std::size_t lineno, const VoterHeader& h,
    const AltLookup& lookup) {
    std::vector<std::pair<Alternative, Alternative>> pairs;
    const Tok body = trim_range(line, h.body_begin, line.size());
    if (body.text.empty()) return pairs;

    for (const Tok& pair_tok : split_range(line, h.body_begin, line.size(), ',')) {
        const std::size_t begin = pair_tok.col - 1;
        const std::size_t end = begin + pair_tok.text.size();
        const std::size_t gt = line.find('>', begin);
        if (gt == std::string::npos || gt >= end)
            throw ParseError("expected a pair 'a > b'", lineno, pair_tok.col);
        if (line.find('>', gt + 1) < end)
            throw ParseError("a pair relates exactly two alternatives", lineno, pair_tok.col);
        const Alternative lhs = lookup.resolve(trim_range(line, begin, gt), lineno);
        const Alternative rhs = lookup.resolve(trim_range(line, gt + 1, end), lineno);
        if (lhs == rhs)
            throw ParseError("pair '" + lhs.id() + " > " + rhs.id() + "' is reflexive",
                             lineno, pair_tok.col);
        pairs.emplace_back(lhs, rhs);
    }
    return pairs;
}

AltVec parse_id_list_line(const std::string& line, std::size_t lineno, std::size_t body_begin,
                          const char* what) {
    AltVec out;
    for (const Tok& tok : split_range(line, body_begin, line.size(), ',')) {
        Alternative a = make_alt(tok, lineno);
        if (std::binary_search(out.begin(), out.end(), a))
            throw ParseError(std::string("duplicate ") + what + " '" + tok.text + "'",
                             lineno, tok.col);
        out.insert(std::upper_bound(out.begin(), out.end(), a), std::move(a));
    }
    return out;
}

// Expects optional spaces then ':' right after a keyword.
std::size_t expect_colon(const std::string& line, std::size_t lineno, std::size_t after) {
    std::size_t i = after;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] != ':')
        throw ParseError("expected ':'", lineno, i + 1);
    return i + 1;
}

}  // namespace

ParsedProfile parse_profile(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);

    std::optional<AltVec> alts;
    std::vector<Voter<WeakOrder>> weak_voters;
    std::vector<Voter<StrictPartialOrder>> partial_voters;
    enum class Kind { Unknown, Weak, Partial } kind = Kind::Unknown;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        const std::size_t lineno = li + 1;
        if (blank(line)) continue;
        const Tok word = leading_word(line);
        if (line[word.col - 1] == '#') continue;

        if (word.text == "alternatives") {
            if (alts) throw ParseError("duplicate alternatives line", lineno, word.col);
            const std::size_t body = expect_colon(line, lineno, word.col - 1 + word.text.size());
            AltVec parsed = parse_id_list_line(line, lineno, body, "alternative");
            if (parsed.empty())
                throw ParseError("at least one alternative is required", lineno, body + 1);
            alts = std::move(parsed);
        } else if (word.text == "voter") {
            if (!alts)
                throw ParseError("alternatives must be declared before voters", lineno,
                                 word.col);
            const AltLookup lookup(*alts);
            const VoterHeader h =
                parse_voter_header(line, lineno, word.col - 1 + word.text.size());
            if (h.partial) {
                if (kind == Kind::Weak)
                    throw ParseError("mixed weak and partial voters in one document", lineno,
                                     word.col);
                kind = Kind::Partial;
                auto pairs = parse_partial_pairs(line, lineno, h, lookup);
                try {
                    partial_voters.push_back({h.name, StrictPartialOrder(*alts, pairs)});
                } catch (const InputError& e) {
                    throw ParseError(e.what(), lineno, word.col);
                }
            } else {
                if (kind == Kind::Partial)
                    throw ParseError("mixed weak and partial voters in one document", lineno,
                                     word.col);
                kind = Kind::Weak;
                auto classes = parse_weak_classes(line, lineno, h, lookup, *alts, h.name);
                try {
                    weak_voters.push_back({h.name, WeakOrder(std::move(classes))});
                } catch (const InputError& e) {
                    throw ParseError(e.what(), lineno, word.col);
                }
            }
        } else {
            throw ParseError("expected 'alternatives:', 'voter ...:' or a '#' comment",
                             lineno, word.col);
        }
    }

    if (!alts) throw ParseError("missing alternatives line", 1, 1);

    try {
        if (kind == Kind::Partial)
            return ParsedProfile{PartialProfile(*alts, std::move(partial_voters))};
        return ParsedProfile{WeakProfile(*alts, std::move(weak_voters))};
    } catch (const InputError& e) {
        throw ParseError(e.what(), lines.size(), 1);
    }
}

WeakProfile as_weak_profile(const ParsedProfile& parsed) {
    if (parsed.is_weak()) return parsed.weak();
    if (parsed.partial().voter_count() == 0)
        return WeakProfile(parsed.partial().alternatives(), {});
    throw InputError("this operation needs a weak-order profile");
}

PartialProfile as_partial_profile(const ParsedProfile& parsed) {
    if (!parsed.is_weak()) return parsed.partial();
    if (parsed.weak().voter_count() == 0)
        return PartialProfile(parsed.weak().alternatives(), {});
    throw InputError("this operation needs a partial-order profile");
}

namespace {

std::string id_list(const AltVec& alts) {
    std::string out;
    for (std::size_t i = 0; i < alts.size(); ++i) {
        if (i) out += ", ";
        out += alts[i].id();
    }
    return out;
}

}  // namespace

std::string serialize_profile(const WeakProfile& profile) {
    std::ostringstream out;
    out << "alternatives: " << id_list(profile.alternatives()) << "\n";
    for (const auto& v : profile.voters()) {
        out << "voter " << v.name << ":";
        for (std::size_t c = 0; c < v.relation.classes().size(); ++c) {
            const AltVec& cls = v.relation.classes()[c];
            out << (c ? " > " : " ");
            if (cls.size() == 1)
                out << cls.front().id();
            else
                out << "{" << id_list(cls) << "}";
        }
        out << "\n";
    }
    return out.str();
}

std::string serialize_profile(const PartialProfile& profile) {
    std::ostringstream out;
    out << "alternatives: " << id_list(profile.alternatives()) << "\n";
    for (const auto& v : profile.voters()) {
        out << "voter " << v.name << " partial:";
        const auto pairs = v.relation.reduced_pairs();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            out << (i ? ", " : " ") << pairs[i].first.id() << " > " << pairs[i].second.id();
        out << "\n";
    }
    return out.str();
}

NBConstraintSet parse_nb(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);

    std::optional<AltVec> elements;
    std::vector<NBConstraint> constraints;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        const std::size_t lineno = li + 1;
        if (blank(line)) continue;
        const Tok word = leading_word(line);
        if (line[word.col - 1] == '#') continue;

        if (word.text == "elements") {
            if (elements) throw ParseError("duplicate elements line", lineno, word.col);
            const std::size_t body = expect_colon(line, lineno, word.col - 1 + word.text.size());
            AltVec parsed = parse_id_list_line(line, lineno, body, "element");
            if (parsed.empty())
                throw ParseError("at least one element is required", lineno, body + 1);
            elements = std::move(parsed);
        } else if (word.text == "nb") {
            if (!elements)
                throw ParseError("elements must be declared before constraints", lineno,
                                 word.col);
            const AltLookup lookup(*elements);
            const std::size_t body = expect_colon(line, lineno, word.col - 1 + word.text.size());
            const std::size_t bar = line.find('|', body);
            if (bar == std::string::npos)
                throw ParseError("expected 'nb: <middle> | <outer>, <outer>'", lineno,
                                 line.size() + 1);
            const Alternative middle = lookup.resolve(trim_range(line, body, bar), lineno);
            const auto outer_toks = split_range(line, bar + 1, line.size(), ',');
            if (outer_toks.size() != 2)
                throw ParseError("outer pair must list exactly two alternatives", lineno,
                                 bar + 2);
            const Alternative o1 = lookup.resolve(outer_toks[0], lineno);
            const Alternative o2 = lookup.resolve(outer_toks[1], lineno);
            try {
                constraints.emplace_back(middle, o1, o2);
            } catch (const InputError& e) {
                throw ParseError(e.what(), lineno, word.col);
            }
        } else {
            throw ParseError("expected 'elements:', 'nb: ...' or a '#' comment", lineno,
                             word.col);
        }
    }

    if (!elements) throw ParseError("missing elements line", 1, 1);
    return NBConstraintSet(*elements, std::move(constraints));
}

std::string serialize_nb(const NBConstraintSet& cs) {
    std::ostringstream out;
    out << "elements: " << id_list(cs.elements()) << "\n";
    for (const auto& c : cs.constraints())
        out << "nb: " << c.middle().id() << " | " << c.outer().first.id() << ", "
            << c.outer().second.id() << "\n";
    return out.str();
}

LinearOrder parse_order(std::string_view text, const AltVec& universe) {
    const std::string s(text);
    AltVec seq;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '>') {
            const Tok tok = trim_range(s, start, i);
            if (tok.text.empty()) throw InputError("malformed order '" + s + "'");
            seq.push_back(Alternative(tok.text));
            start = i + 1;
        }
    }
    LinearOrder order(std::move(seq));
    if (order.alternatives() != sorted_unique(universe))
        throw InputError("order '" + s + "' is not a permutation of the alternatives");
    return order;
}

std::string serialize_order(const LinearOrder& order) {
    std::string out;
    for (std::size_t i = 0; i < order.sequence().size(); ++i) {
        if (i) out += ">";
        out += order.sequence()[i].id();
    }
    return out;
}

}  // namespace topmono
