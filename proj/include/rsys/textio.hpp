#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsys/core.hpp"
#include "rsys/dynamics.hpp"
#include "rsys/formula.hpp"

namespace rsys {

/// Members of a state printed inside braces, comma separated, in entity
/// declaration order. The empty set prints as {}.
inline std::string format_state(const entity_table& table, const state& s) {
    std::string out = "{";
    bool first = true;
    s.for_each_member([&](std::uint32_t i) {
        if (!first) out += ',';
        out += table.name(i);
        first = false;
    });
    out += '}';
    return out;
}

/// Parses a state given as comma or space separated entity names,
/// optionally wrapped in braces; "-" and the empty string mean ∅.
inline state parse_state(const entity_table& table, std::string text) {
    if (!text.empty() && text.front() == '{' && text.back() == '}')
        text = text.substr(1, text.size() - 2);
    state s(table.size());
    std::string tok;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!tok.empty() && tok != "-") s.set(table.index_of(tok));
            tok.clear();
        } else {
            tok += ch;
        }
    }
    return s;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& msg) {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
}

} // namespace detail

/// Reads the plain-text system format:
///   # comment
///   system <name>
///   entities <n1> <n2> ...
///   reaction <R> | <I> | <P>
/// where each reaction side is a space separated name list or "-".
inline reaction_system parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::string name = "rs";
    bool saw_name = false;
    std::optional<entity_table> table;
    std::vector<reaction> reactions;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "system") {
            if (saw_name) detail::parse_fail(line_no, "repeated system line");
            if (toks.size() != 2) detail::parse_fail(line_no, "expected: system <name>");
            name = toks[1];
            saw_name = true;
        } else if (toks[0] == "entities") {
            if (table) detail::parse_fail(line_no, "repeated entities line");
            try {
                table.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
            } catch (const usage_error& e) {
                detail::parse_fail(line_no, e.what());
            }
        } else if (toks[0] == "reaction") {
            std::vector<std::vector<std::string>> sides(1);
            for (std::size_t k = 1; k < toks.size(); ++k) {
                if (toks[k] == "|")
                    sides.emplace_back();
                else
                    sides.back().push_back(toks[k]);
            }
            if (sides.size() != 3)
                detail::parse_fail(line_no, "expected: reaction <R> | <I> | <P>");
            for (auto& side : sides)
                if (side.size() == 1 && side[0] == "-") side.clear();
            if (sides[2].empty()) detail::parse_fail(line_no, "empty product set");
            if (!table) detail::parse_fail(line_no, "reaction before entities line");
            auto to_state = [&](const std::vector<std::string>& names) {
                state s(table->size());
                for (const auto& n : names) {
                    auto idx = table->find(n);
                    if (!idx) detail::parse_fail(line_no, "unknown entity name '" + n + "'");
                    s.set(*idx);
                }
                return s;
            };
            reactions.push_back(reaction{to_state(sides[0]), to_state(sides[1]), to_state(sides[2])});
        } else {
            detail::parse_fail(line_no, "malformed line (unknown directive '" + toks[0] + "')");
        }
    }
    if (!table) table.emplace(std::vector<std::string>{});
    return reaction_system(std::move(name), std::move(*table), std::move(reactions));
}

/// Canonical emission of the system format; parse ∘ emit is the identity
/// on parsed systems and emission of a parsed system is idempotent.
inline std::string emit_system(const reaction_system& sys) {
    std::ostringstream out;
    out << "system " << sys.name() << '\n';
    out << "entities";
    for (const auto& n : sys.entities().names()) out << ' ' << n;
    out << '\n';
    auto side = [&](const state& s) {
        if (s.none()) return std::string("-");
        std::string txt;
        s.for_each_member([&](std::uint32_t i) {
            if (!txt.empty()) txt += ' ';
            txt += sys.entities().name(i);
        });
        return txt;
    };
    for (const reaction& a : sys.reactions())
        out << "reaction " << side(a.reactants) << " | " << side(a.inhibitors) << " | "
            << side(a.products) << '\n';
    return out.str();
}

/// Reads DIMACS-style formula text: header "p cnf n m" or "p dnf n m",
/// then an optional universal line "a ... 0" followed by an optional
/// existential line "e ... 0" (the two-level forall/exists prefix), then m
/// clause lines terminated by 0. 'c' lines are comments.
inline formula parse_formula(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    int num_vars = -1, num_clauses = -1;
    formula_kind kind = formula_kind::cnf;
    std::optional<std::vector<bool>> universal;
    bool saw_universal_line = false, saw_existential_line = false;
    std::vector<std::vector<int>> clauses;
    std::vector<bool> listed_existential;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (num_vars >= 0) detail::parse_fail(line_no, "repeated header");
            if (toks.size() != 4) detail::parse_fail(line_no, "expected: p cnf|dnf <vars> <clauses>");
            if (toks[1] == "cnf")
                kind = formula_kind::cnf;
            else if (toks[1] == "dnf")
                kind = formula_kind::dnf;
            else
                detail::parse_fail(line_no, "unknown formula kind '" + toks[1] + "'");
            try {
                num_vars = std::stoi(toks[2]);
                num_clauses = std::stoi(toks[3]);
            } catch (...) {
                detail::parse_fail(line_no, "bad header counts");
            }
            if (num_vars < 0 || num_clauses < 0) detail::parse_fail(line_no, "bad header counts");
            continue;
        }
        if (num_vars < 0) detail::parse_fail(line_no, "clause data before header");
        if (toks[0] == "a" || toks[0] == "e") {
            const bool is_universal = toks[0] == "a";
            if (!clauses.empty()) detail::parse_fail(line_no, "quantifier line after clauses");
            if (is_universal) {
                if (saw_universal_line || saw_existential_line)
                    detail::parse_fail(line_no, "only a single forall/exists alternation is supported");
                saw_universal_line = true;
                universal.emplace(static_cast<std::size_t>(num_vars), false);
            } else {
                if (!saw_universal_line)
                    detail::parse_fail(line_no, "exists block without a leading forall block "
                                                "(only forall/exists prefixes are supported)");
                if (saw_existential_line) detail::parse_fail(line_no, "repeated exists line");
                saw_existential_line = true;
                listed_existential.assign(static_cast<std::size_t>(num_vars), false);
            }
            for (std::size_t k = 1; k < toks.size(); ++k) {
                int v = 0;
                try {
                    v = std::stoi(toks[k]);
                } catch (...) {
                    detail::parse_fail(line_no, "bad variable '" + toks[k] + "'");
                }
                if (v == 0) break;
                if (v < 0 || v > num_vars) detail::parse_fail(line_no, "variable out of range");
                if (is_universal)
                    (*universal)[static_cast<std::size_t>(v - 1)] = true;
                else
                    listed_existential[static_cast<std::size_t>(v - 1)] = true;
            }
            continue;
        }
        std::vector<int> clause;
        bool terminated = false;
        for (const auto& tok : toks) {
            int lit = 0;
            try {
                lit = std::stoi(tok);
            } catch (...) {
                detail::parse_fail(line_no, "bad literal '" + tok + "'");
            }
            if (lit == 0) {
                terminated = true;
                break;
            }
            if (std::abs(lit) > num_vars) detail::parse_fail(line_no, "variable out of range");
            clause.push_back(lit);
        }
        if (!terminated) detail::parse_fail(line_no, "clause line not terminated by 0");
        if (clause.empty()) detail::parse_fail(line_no, "empty clause");
        clauses.push_back(std::move(clause));
    }
    if (num_vars < 0) throw parse_error("missing formula header");
    if (static_cast<int>(clauses.size()) != num_clauses)
        throw parse_error("header announces " + std::to_string(num_clauses) + " clauses but " +
                          std::to_string(clauses.size()) + " were given");
    if (saw_existential_line) {
        // When both blocks are listed they must be disjoint and covering.
        for (int v = 1; v <= num_vars; ++v) {
            const bool u = (*universal)[static_cast<std::size_t>(v - 1)];
            const bool e = listed_existential[static_cast<std::size_t>(v - 1)];
            if (u && e) throw parse_error("variable " + std::to_string(v) + " is in both blocks");
            if (!u && !e)
                throw parse_error("variable " + std::to_string(v) + " is in neither block");
        }
    }
    try {
        return formula(kind, num_vars, std::move(clauses), std::move(universal));
    } catch (const usage_error& e) {
        throw parse_error(e.what());
    }
}

/// DIMACS-style emission of a formula (used by round-trip tests and the
/// manifest sidecar).
inline std::string emit_formula(const formula& f) {
    std::ostringstream out;
    out << "p " << (f.kind == formula_kind::cnf ? "cnf" : "dnf") << ' ' << f.num_vars << ' '
        << f.clauses.size() << '\n';
    if (f.has_prefix()) {
        out << 'a';
        for (int v : f.universal_vars()) out << ' ' << v;
        out << " 0\ne";
        for (int v = 1; v <= f.num_vars; ++v)
            if (!f.is_universal(v)) out << ' ' << v;
        out << " 0\n";
    }
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

/// Transition edges as a DOT digraph, nodes labelled with brace notation.
inline std::string to_dot(const reaction_system& sys, const std::vector<transition>& edges) {
    std::ostringstream out;
    out << "digraph \"" << sys.name() << "\" {\n";
    for (const auto& e : edges)
        out << "  \"" << format_state(sys.entities(), e.from) << "\" -> \""
            << format_state(sys.entities(), e.to) << "\";\n";
    out << "}\n";
    return out.str();
}

/// A human-facing analysis report: verdict plus optional witness or
/// counterexample and run metadata.
struct report {
    bool yes = false;
    std::optional<std::string> witness;
    std::optional<std::string> counterexample;
    std::vector<std::pair<std::string, std::string>> metadata;

    std::string to_text() const {
        std::ostringstream out;
        out << "verdict: " << (yes ? "YES" : "NO") << '\n';
        if (witness) out << "witness: " << *witness << '\n';
        if (counterexample) out << "counterexample: " << *counterexample << '\n';
        for (const auto& [k, v] : metadata) out << k << ": " << v << '\n';
        return out.str();
    }
};

} // namespace rsys
