#pragma once

// Test-side ground truth: naive brute-force evaluators for formulas and
// dynamics questions, plus seeded random instance generators. Everything
// here is deliberately independent of the library's decision procedures.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rsys/rsys.hpp"

namespace oracle {

// ---- formula truth by assignment enumeration -------------------------

inline bool assignment_satisfies(const rsys::formula& f, std::uint32_t assign) {
    auto lit_true = [&](int lit) {
        const bool v = (assign >> (std::abs(lit) - 1)) & 1u;
        return lit > 0 ? v : !v;
    };
    if (f.kind == rsys::formula_kind::cnf) {
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause)
                if (lit_true(lit)) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }
    for (const auto& clause : f.clauses) {
        bool sat = true;
        for (int lit : clause)
            if (!lit_true(lit)) {
                sat = false;
                break;
            }
        if (sat) return true;
    }
    return false;
}

inline bool satisfiable(const rsys::formula& f) {
    const std::uint32_t total = 1u << f.num_vars;
    for (std::uint32_t a = 0; a < total; ++a)
        if (assignment_satisfies(f, a)) return true;
    return false;
}

inline bool tautology(const rsys::formula& f) {
    const std::uint32_t total = 1u << f.num_vars;
    for (std::uint32_t a = 0; a < total; ++a)
        if (!assignment_satisfies(f, a)) return false;
    return true;
}

/// Validity of (forall V1)(exists V2) f for a prefixed CNF.
inline bool forall_exists_valid(const rsys::formula& f) {
    std::vector<int> v1, v2;
    for (int v = 1; v <= f.num_vars; ++v) (f.is_universal(v) ? v1 : v2).push_back(v);
    const std::uint32_t u_total = 1u << v1.size();
    const std::uint32_t e_total = 1u << v2.size();
    for (std::uint32_t um = 0; um < u_total; ++um) {
        bool extendable = false;
        for (std::uint32_t em = 0; em < e_total && !extendable; ++em) {
            std::uint32_t assign = 0;
            for (std::size_t k = 0; k < v1.size(); ++k)
                if ((um >> k) & 1u) assign |= 1u << (v1[k] - 1);
            for (std::size_t k = 0; k < v2.size(); ++k)
                if ((em >> k) & 1u) assign |= 1u << (v2[k] - 1);
            extendable = assignment_satisfies(f, assign);
        }
        if (!extendable) return false;
    }
    return true;
}

/// True variables of an assignment restricted to the universal block must
/// have no satisfying extension for it to refute validity.
inline bool universal_assignment_refutes(const rsys::formula& f, const std::vector<bool>& assign) {
    std::vector<int> v2;
    for (int v = 1; v <= f.num_vars; ++v)
        if (!f.is_universal(v)) v2.push_back(v);
    std::uint32_t base = 0;
    for (int v = 1; v <= f.num_vars; ++v)
        if (f.is_universal(v) && assign[static_cast<std::size_t>(v - 1)]) base |= 1u << (v - 1);
    const std::uint32_t e_total = 1u << v2.size();
    for (std::uint32_t em = 0; em < e_total; ++em) {
        std::uint32_t a = base;
        for (std::size_t k = 0; k < v2.size(); ++k)
            if ((em >> k) & 1u) a |= 1u << (v2[k] - 1);
        if (assignment_satisfies(f, a)) return false;
    }
    return true;
}

// ---- dynamics-side decisions ------------------------------------------

/// Decides a reduction's target problem purely through the dynamics
/// module's exhaustive analyses.
inline bool decide_by_dynamics(const rsys::reduction_output& red, const rsys::brute_options& opt = {}) {
    const auto& a = red.system_a;
    if (red.target_problem == "given-state-attractor")
        return rsys::is_attractor(a, *red.distinguished_state, opt);
    if (red.target_problem == "exists-fixpoint")
        return rsys::enumerate_fixed_points(a, opt).count() > 0;
    if (red.target_problem == "exists-attractor")
        return rsys::enumerate_fixed_points(a, opt).any_attractor();
    if (red.target_problem == "exists-fixge")
        return rsys::enumerate_fixed_points(a, opt).any_non_attractor();
    const auto mode = rsys::compare_mode_from_string(red.target_problem);
    if (!mode) throw rsys::usage_error("unknown target problem " + red.target_problem);
    return rsys::shared_analysis(a, *red.system_b, *mode, opt).yes;
}

/// The verdict the formula side predicts for a reduction target.
inline bool expected_formula_verdict(const std::string& target, const rsys::formula& f) {
    if (target == "given-state-attractor" || target == "exists-fixpoint" ||
        target == "exists-attractor" || target == "common-fixpoint" || target == "common-attractor")
        return satisfiable(f);
    if (target == "exists-fixge") return !forall_exists_valid(f);
    if (target == "shared-attractors") return forall_exists_valid(f);
    if (target == "shared-fixpoints" || target == "shared-fixge" || target == "res-eq")
        return tautology(f);
    throw rsys::usage_error("unknown target problem " + target);
}

inline bool brute_res_eq(const rsys::reaction_system& a, const rsys::reaction_system& b) {
    const std::uint64_t total = std::uint64_t{1} << a.width();
    for (std::uint64_t v = 0; v < total; ++v) {
        const auto t = rsys::state::from_index(a.width(), v);
        if (rsys::result(a, t) != rsys::result(b, t)) return false;
    }
    return true;
}

inline bool brute_bijective(const rsys::reaction_system& sys) {
    const std::uint64_t total = std::uint64_t{1} << sys.width();
    std::vector<bool> hit(total, false);
    for (std::uint64_t v = 0; v < total; ++v) {
        const auto img = rsys::result(sys, rsys::state::from_index(sys.width(), v)).to_index();
        if (hit[img]) return false;
        hit[img] = true;
    }
    return true;
}

/// Bijectivity of the twice-iterated result function, by composition.
inline bool brute_squared_bijective(const rsys::reaction_system& sys) {
    const std::uint64_t total = std::uint64_t{1} << sys.width();
    std::vector<bool> hit(total, false);
    for (std::uint64_t v = 0; v < total; ++v) {
        const auto mid = rsys::result(sys, rsys::state::from_index(sys.width(), v));
        const auto img = rsys::result(sys, mid).to_index();
        if (hit[img]) return false;
        hit[img] = true;
    }
    return true;
}

/// Is the fixed point T reached from a strict subset or superset of itself?
inline bool comparable_preimage_exists(const rsys::reaction_system& sys, const rsys::state& t) {
    const std::uint64_t total = std::uint64_t{1} << sys.width();
    for (std::uint64_t v = 0; v < total; ++v) {
        const auto u = rsys::state::from_index(sys.width(), v);
        if (u == t) continue;
        if (!(u.is_subset_of(t) || t.is_subset_of(u))) continue;
        if (rsys::result(sys, u) == t) return true;
    }
    return false;
}

inline bool brute_empty_function(const rsys::reaction_system& sys) {
    const std::uint64_t total = std::uint64_t{1} << sys.width();
    for (std::uint64_t v = 0; v < total; ++v)
        if (!rsys::result(sys, rsys::state::from_index(sys.width(), v)).none()) return false;
    return true;
}

// ---- random instance generators ---------------------------------------

struct system_options {
    bool reactantless = false;
    bool inhibitorless = false;
    std::uint32_t max_reactions = 8;
    bool allow_overlap = true; // allow R and I to share entities
};

inline std::vector<std::string> default_names(std::uint32_t width) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < width; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

inline rsys::state random_subset(std::mt19937_64& rng, std::uint32_t width, double density) {
    rsys::state s(width);
    std::bernoulli_distribution pick(density);
    for (std::uint32_t i = 0; i < width; ++i)
        if (pick(rng)) s.set(i);
    return s;
}

inline rsys::state random_nonempty_subset(std::mt19937_64& rng, std::uint32_t width, double density) {
    rsys::state s = random_subset(rng, width, density);
    if (s.none()) s.set(std::uniform_int_distribution<std::uint32_t>(0, width - 1)(rng));
    return s;
}

inline rsys::reaction_system random_system(std::mt19937_64& rng, std::uint32_t width,
                                           const system_options& opt = {}) {
    const std::uint32_t count =
        std::uniform_int_distribution<std::uint32_t>(1, std::max<std::uint32_t>(1, opt.max_reactions))(rng);
    const double density = 1.5 / std::max<std::uint32_t>(1, width);
    std::vector<rsys::reaction> reactions;
    for (std::uint32_t k = 0; k < count; ++k) {
        rsys::state r = opt.reactantless ? rsys::state(width) : random_subset(rng, width, density);
        rsys::state i = opt.inhibitorless ? rsys::state(width) : random_subset(rng, width, density);
        if (!opt.allow_overlap) i -= r;
        reactions.push_back(rsys::reaction{std::move(r), std::move(i),
                                           random_nonempty_subset(rng, width, density)});
    }
    return rsys::reaction_system("rand", rsys::entity_table(default_names(width)),
                                 std::move(reactions));
}

/// A random inhibitorless system with bijective result function: a
/// permutation on singletons, optionally padded with redundant wide
/// reactions whose products are unions of singleton images.
inline rsys::reaction_system random_bijective_monotone(std::mt19937_64& rng, std::uint32_t width,
                                                       std::uint32_t extra_reactions) {
    std::vector<std::uint32_t> perm(width);
    for (std::uint32_t i = 0; i < width; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<rsys::reaction> reactions;
    for (std::uint32_t i = 0; i < width; ++i) {
        rsys::state r(width), p(width);
        r.set(i);
        p.set(perm[i]);
        reactions.push_back(rsys::reaction{std::move(r), rsys::state(width), std::move(p)});
    }
    for (std::uint32_t k = 0; k < extra_reactions; ++k) {
        rsys::state r = random_nonempty_subset(rng, width, 0.4);
        rsys::state p(width);
        r.for_each_member([&](std::uint32_t i) { p.set(perm[i]); });
        reactions.push_back(rsys::reaction{std::move(r), rsys::state(width), std::move(p)});
    }
    std::shuffle(reactions.begin(), reactions.end(), rng);
    return rsys::reaction_system("perm", rsys::entity_table(default_names(width)),
                                 std::move(reactions));
}

/// A syntactically different system with provably identical result
/// function: shuffled reactions plus redundant ones whose products are
/// already implied at their critical states.
inline rsys::reaction_system equivalent_variant(std::mt19937_64& rng, const rsys::reaction_system& sys,
                                                bool monotone) {
    std::vector<rsys::reaction> reactions = sys.reactions();
    std::shuffle(reactions.begin(), reactions.end(), rng);
    const std::uint32_t width = sys.width();
    const std::uint32_t extras = std::uniform_int_distribution<std::uint32_t>(0, 3)(rng);
    for (std::uint32_t k = 0; k < extras; ++k) {
        if (monotone) {
            rsys::state r = random_subset(rng, width, 0.5);
            rsys::state img = rsys::result(sys, r);
            if (img.none()) continue;
            reactions.push_back(rsys::reaction{std::move(r), rsys::state(width), std::move(img)});
        } else {
            rsys::state i = random_subset(rng, width, 0.5);
            rsys::state img = rsys::result(sys, i.complement());
            if (img.none()) continue;
            reactions.push_back(rsys::reaction{rsys::state(width), std::move(i), std::move(img)});
        }
    }
    if (reactions.empty()) reactions = sys.reactions();
    return rsys::reaction_system(sys.name() + "_variant", sys.entities(), std::move(reactions));
}

inline rsys::formula random_cnf(std::mt19937_64& rng, int n, int max_clauses,
                                bool with_prefix = false) {
    const int m = std::uniform_int_distribution<int>(1, max_clauses)(rng);
    std::vector<std::vector<int>> clauses;
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j < m; ++j) {
        std::vector<int> clause;
        while (clause.empty())
            for (int v = 1; v <= n; ++v) {
                if (coin(rng)) continue;
                clause.push_back(coin(rng) ? v : -v);
            }
        clauses.push_back(std::move(clause));
    }
    std::optional<std::vector<bool>> prefix;
    if (with_prefix) {
        prefix.emplace(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) (*prefix)[static_cast<std::size_t>(v)] = coin(rng);
    }
    return rsys::formula(rsys::formula_kind::cnf, n, std::move(clauses), std::move(prefix));
}

inline rsys::formula random_dnf(std::mt19937_64& rng, int n, int max_clauses) {
    rsys::formula f = random_cnf(rng, n, max_clauses);
    return rsys::formula(rsys::formula_kind::dnf, f.num_vars, f.clauses);
}

/// Every nonempty clause over n variables where each variable occurs
/// positively, negatively, both ways or not at all.
inline std::vector<std::vector<int>> all_clause_patterns(int n) {
    std::vector<std::vector<int>> out;
    std::uint32_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (std::uint32_t code = 1; code < total; ++code) {
        std::vector<int> clause;
        std::uint32_t c = code;
        for (int v = 1; v <= n; ++v, c /= 4) {
            switch (c % 4) {
                case 1: clause.push_back(v); break;
                case 2: clause.push_back(-v); break;
                case 3:
                    clause.push_back(v);
                    clause.push_back(-v);
                    break;
                default: break;
            }
        }
        if (!clause.empty()) out.push_back(std::move(clause));
    }
    return out;
}

/// All formulas with up to max_clauses clauses drawn from the full clause
/// patterns over n variables (ordered, duplicates allowed).
inline std::vector<rsys::formula> exhaustive_formulas(rsys::formula_kind kind, int n, int max_clauses) {
    const auto patterns = all_clause_patterns(n);
    std::vector<rsys::formula> out;
    std::vector<std::size_t> pick;
    auto emit = [&]() {
        std::vector<std::vector<int>> clauses;
        for (auto idx : pick) clauses.push_back(patterns[idx]);
        out.emplace_back(kind, n, std::move(clauses));
    };
    std::function<void()> grow = [&]() {
        if (!pick.empty()) emit();
        if (static_cast<int>(pick.size()) == max_clauses) return;
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            pick.push_back(i);
            grow();
            pick.pop_back();
        }
    };
    grow();
    return out;
}

/// All universal-block choices for a formula.
inline std::vector<rsys::formula> with_all_prefixes(const rsys::formula& f) {
    std::vector<rsys::formula> out;
    const std::uint32_t total = 1u << f.num_vars;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<bool> universal(static_cast<std::size_t>(f.num_vars));
        for (int v = 0; v < f.num_vars; ++v) universal[static_cast<std::size_t>(v)] = (mask >> v) & 1u;
        out.emplace_back(f.kind, f.num_vars, f.clauses, universal);
    }
    return out;
}

} // namespace oracle
