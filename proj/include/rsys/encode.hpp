#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rsys/core.hpp"

// Propositional and two-level quantified encodings of the dynamics
// questions, over one indicator variable per entity.
//
// Variable numbering is fixed: the t-group comes first, then the u-groups
// (preimage evidence), then per-system enabled/result groups, then the
// remaining auxiliaries, and for quantified problems the universally
// quantified state group followed by its definitional auxiliaries. Every
// group is recorded in encoded_problem::groups, which is all a decoder
// needs.
//
// Quantified problems use the prenex shape  ∃(decisions, defs) ∀(state)
// ∃(defs of the quantified state);  the trailing block holds only
// Tseitin-defined variables, so the problem keeps exactly two decision
// levels. Deeper alternation is not representable on purpose.

namespace rsys {

enum class encode_mode {
    exists_fixpoint,
    given_state_attractor,
    exists_attractor,
    common_fixpoint,
    common_attractor,
    res_eq_counterexample,
    shared_fixpoints_counterexample,
    exists_fixge,
    shared_attractors,
};

inline const char* to_string(encode_mode m) {
    switch (m) {
        case encode_mode::exists_fixpoint: return "exists-fixpoint";
        case encode_mode::given_state_attractor: return "given-state-attractor";
        case encode_mode::exists_attractor: return "exists-attractor";
        case encode_mode::common_fixpoint: return "common-fixpoint";
        case encode_mode::common_attractor: return "common-attractor";
        case encode_mode::res_eq_counterexample: return "res-eq";
        case encode_mode::shared_fixpoints_counterexample: return "shared-fixpoints";
        case encode_mode::exists_fixge: return "exists-fixge";
        case encode_mode::shared_attractors: return "shared-attractors";
    }
    return "?";
}

/// How "state U differs from state T" is encoded. The default spells the
/// difference out over XOR bits of U and T, which is correct for any T.
/// The alternative compares U against the result of T instead; for fixed
/// points the two coincide.
enum class reach_style { direct_difference, result_mismatch };

struct var_group {
    std::string name;
    int first = 0; // 1-based DIMACS variable index
    int count = 0;
    bool decision = false; // enumerated block member (state bits, selector)
};

struct encoded_problem {
    enum class kind_t { cnf, qbf_exists_forall, qbf_forall_exists };

    kind_t kind = kind_t::cnf;
    encode_mode mode = encode_mode::exists_fixpoint;
    bool counterexample_polarity = false; // satisfiable ⇒ problem answer NO
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    // Clause layout for quantified problems: [0, outer_clauses_end) constrain
    // the existential block, [outer_clauses_end, defs_clauses_end) define the
    // auxiliaries of the universal state, and the rest are the goal clauses
    // that must hold for every universal state.
    std::size_t outer_clauses_end = 0;
    std::size_t defs_clauses_end = 0;
    std::vector<int> exists_vars;
    std::vector<int> forall_vars;
    std::vector<int> inner_aux_vars;
    std::vector<var_group> groups;
    std::uint32_t background_width = 0;

    const var_group* find_group(const std::string& name) const {
        for (const auto& g : groups)
            if (g.name == name) return &g;
        return nullptr;
    }

    const var_group& group(const std::string& name) const {
        const var_group* g = find_group(name);
        if (!g) throw usage_error("encoded problem has no variable group '" + name + "'");
        return *g;
    }
};

namespace detail {

enum class alloc_phase { outer, forall_block, inner };

inline int allocate_group(encoded_problem& p, const std::string& name, int count, bool decision,
                          alloc_phase phase) {
    const int first = p.num_vars + 1;
    p.num_vars += count;
    p.groups.push_back(var_group{name, first, count, decision});
    for (int v = first; v < first + count; ++v) {
        switch (phase) {
            case alloc_phase::outer: p.exists_vars.push_back(v); break;
            case alloc_phase::forall_block: p.forall_vars.push_back(v); break;
            case alloc_phase::inner: p.inner_aux_vars.push_back(v); break;
        }
    }
    return first;
}

// d ↔ (a xor b)
inline void define_xor(encoded_problem& p, int d, int a, int b) {
    p.clauses.push_back({-d, a, b});
    p.clauses.push_back({-d, -a, -b});
    p.clauses.push_back({d, -a, b});
    p.clauses.push_back({d, a, -b});
}

// e ↔ (a ↔ b)
inline void define_eq(encoded_problem& p, int e, int a, int b) {
    p.clauses.push_back({-e, -a, b});
    p.clauses.push_back({-e, a, -b});
    p.clauses.push_back({e, a, b});
    p.clauses.push_back({e, -a, -b});
}

// f ↔ (x_first ∧ ... ∧ x_{first+count-1})
inline void define_and(encoded_problem& p, int f, int first, int count) {
    std::vector<int> big{f};
    for (int k = 0; k < count; ++k) {
        p.clauses.push_back({-f, first + k});
        big.push_back(-(first + k));
    }
    p.clauses.push_back(std::move(big));
}

} // namespace detail

struct result_map_groups {
    int enabled_first = 0; // one variable per reaction
    int result_first = 0;  // one variable per entity
};

/// Appends the definition of the result map of `sys` applied to the state
/// variables starting at state_first: enabled_j ↔ (reactants in, inhibitors
/// out) and result_i ↔ (some producing reaction enabled). Every model then
/// assigns the result group exactly result(sys, T).
inline result_map_groups encode_result_map(encoded_problem& p, const reaction_system& sys,
                                           int state_first, const std::string& tag,
                                           detail::alloc_phase phase = detail::alloc_phase::outer) {
    const int n = static_cast<int>(sys.width());
    const int m = static_cast<int>(sys.reaction_count());
    result_map_groups out;
    out.enabled_first = detail::allocate_group(p, "e_" + tag, m, false, phase);
    out.result_first = detail::allocate_group(p, "r_" + tag, n, false, phase);

    for (int j = 0; j < m; ++j) {
        const reaction& a = sys.reaction_at(static_cast<std::size_t>(j));
        const int ev = out.enabled_first + j;
        std::vector<int> big{ev};
        a.reactants.for_each_member([&](std::uint32_t i) {
            p.clauses.push_back({-ev, state_first + static_cast<int>(i)});
            big.push_back(-(state_first + static_cast<int>(i)));
        });
        a.inhibitors.for_each_member([&](std::uint32_t i) {
            p.clauses.push_back({-ev, -(state_first + static_cast<int>(i))});
            big.push_back(state_first + static_cast<int>(i));
        });
        p.clauses.push_back(std::move(big));
    }
    for (int i = 0; i < n; ++i) {
        const int rv = out.result_first + i;
        std::vector<int> any{-rv};
        for (int j = 0; j < m; ++j) {
            if (sys.reaction_at(static_cast<std::size_t>(j)).products.test(static_cast<std::uint32_t>(i))) {
                p.clauses.push_back({-(out.enabled_first + j), rv});
                any.push_back(out.enabled_first + j);
            }
        }
        p.clauses.push_back(std::move(any));
    }
    return out;
}

namespace detail {

// result group must equal the state group (fixed-point constraint)
inline void bind_equal(encoded_problem& p, int a_first, int b_first, int count) {
    for (int k = 0; k < count; ++k) {
        p.clauses.push_back({-(a_first + k), b_first + k});
        p.clauses.push_back({a_first + k, -(b_first + k)});
    }
}

// one clause demanding the two groups differ somewhere, via xor bits
inline int require_difference(encoded_problem& p, int a_first, int b_first, int count,
                              const std::string& tag, alloc_phase phase) {
    const int d = allocate_group(p, "d_" + tag, count, false, phase);
    std::vector<int> some;
    for (int k = 0; k < count; ++k) {
        define_xor(p, d + k, a_first + k, b_first + k);
        some.push_back(d + k);
    }
    p.clauses.push_back(std::move(some));
    return d;
}

// aux bit that is true iff the two groups agree everywhere
inline int equality_bit(encoded_problem& p, int a_first, int b_first, int count,
                        const std::string& tag, alloc_phase phase) {
    const int eq = allocate_group(p, "eq_" + tag, count, false, phase);
    for (int k = 0; k < count; ++k) define_eq(p, eq + k, a_first + k, b_first + k);
    const int bit = allocate_group(p, "all_" + tag, 1, false, phase);
    define_and(p, bit, eq, count);
    return bit;
}

inline void fix_state_units(encoded_problem& p, int t_first, const state& t0) {
    for (std::uint32_t i = 0; i < t0.width(); ++i)
        p.clauses.push_back({t0.test(i) ? t_first + static_cast<int>(i)
                                        : -(t_first + static_cast<int>(i))});
}

} // namespace detail

/// Compiles one decision problem over one or two systems into CNF or a
/// two-level quantified problem. NP/coNP questions become plain CNF (coNP
/// ones encode the counterexample, so UNSAT means YES); the fixge and
/// shared-attractor questions become exists/forall problems.
inline encoded_problem encode_problem(encode_mode mode, const reaction_system& a,
                                      const reaction_system* b = nullptr,
                                      const std::optional<state>& given = std::nullopt,
                                      reach_style style = reach_style::direct_difference) {
    using detail::alloc_phase;
    const bool two_systems = mode == encode_mode::common_fixpoint || mode == encode_mode::common_attractor ||
                             mode == encode_mode::res_eq_counterexample ||
                             mode == encode_mode::shared_fixpoints_counterexample ||
                             mode == encode_mode::shared_attractors;
    if (two_systems && b == nullptr)
        throw usage_error(std::string(to_string(mode)) + " needs two systems");
    if (!two_systems && b != nullptr)
        throw usage_error(std::string(to_string(mode)) + " takes a single system");
    if (b && a.entities() != b->entities())
        throw usage_error("encode_problem requires a common background set");
    if (mode == encode_mode::given_state_attractor && !given)
        throw usage_error("given-state-attractor needs the distinguished state");

    encoded_problem p;
    p.mode = mode;
    p.background_width = a.width();
    const int n = static_cast<int>(a.width());
    const int t = detail::allocate_group(p, "t", n, true, alloc_phase::outer);

    switch (mode) {
        case encode_mode::exists_fixpoint: {
            const auto rm = encode_result_map(p, a, t, "a_t");
            detail::bind_equal(p, rm.result_first, t, n);
            break;
        }
        case encode_mode::given_state_attractor:
        case encode_mode::exists_attractor: {
            if (mode == encode_mode::given_state_attractor) detail::fix_state_units(p, t, *given);
            const int u = detail::allocate_group(p, "u", n, true, alloc_phase::outer);
            const auto rm_t = encode_result_map(p, a, t, "a_t");
            detail::bind_equal(p, rm_t.result_first, t, n);
            const auto rm_u = encode_result_map(p, a, u, "a_u");
            detail::bind_equal(p, rm_u.result_first, t, n);
            if (style == reach_style::direct_difference)
                detail::require_difference(p, u, t, n, "ut", alloc_phase::outer);
            else
                detail::require_difference(p, u, rm_t.result_first, n, "u_rt", alloc_phase::outer);
            break;
        }
        case encode_mode::common_fixpoint: {
            const auto rma = encode_result_map(p, a, t, "a_t");
            detail::bind_equal(p, rma.result_first, t, n);
            const auto rmb = encode_result_map(p, *b, t, "b_t");
            detail::bind_equal(p, rmb.result_first, t, n);
            break;
        }
        case encode_mode::common_attractor: {
            const int u = detail::allocate_group(p, "u", n, true, alloc_phase::outer);
            const int u2 = detail::allocate_group(p, "u2", n, true, alloc_phase::outer);
            const auto rma_t = encode_result_map(p, a, t, "a_t");
            detail::bind_equal(p, rma_t.result_first, t, n);
            const auto rmb_t = encode_result_map(p, *b, t, "b_t");
            detail::bind_equal(p, rmb_t.result_first, t, n);
            const auto rma_u = encode_result_map(p, a, u, "a_u");
            detail::bind_equal(p, rma_u.result_first, t, n);
            const auto rmb_u2 = encode_result_map(p, *b, u2, "b_u2");
            detail::bind_equal(p, rmb_u2.result_first, t, n);
            if (style == reach_style::direct_difference) {
                detail::require_difference(p, u, t, n, "ut", alloc_phase::outer);
                detail::require_difference(p, u2, t, n, "u2t", alloc_phase::outer);
            } else {
                detail::require_difference(p, u, rma_t.result_first, n, "u_rat", alloc_phase::outer);
                detail::require_difference(p, u2, rmb_t.result_first, n, "u2_rbt", alloc_phase::outer);
            }
            break;
        }
        case encode_mode::res_eq_counterexample: {
            const auto rma = encode_result_map(p, a, t, "a_t");
            const auto rmb = encode_result_map(p, *b, t, "b_t");
            detail::require_difference(p, rma.result_first, rmb.result_first, n, "ab", alloc_phase::outer);
            p.counterexample_polarity = true;
            break;
        }
        case encode_mode::shared_fixpoints_counterexample: {
            const auto rma = encode_result_map(p, a, t, "a_t");
            const auto rmb = encode_result_map(p, *b, t, "b_t");
            const int fix_a = detail::equality_bit(p, rma.result_first, t, n, "fix_a", alloc_phase::outer);
            const int fix_b = detail::equality_bit(p, rmb.result_first, t, n, "fix_b", alloc_phase::outer);
            p.clauses.push_back({fix_a, fix_b});
            p.clauses.push_back({-fix_a, -fix_b});
            p.counterexample_polarity = true;
            break;
        }
        case encode_mode::exists_fixge: {
            p.kind = encoded_problem::kind_t::qbf_exists_forall;
            const auto rm_t = encode_result_map(p, a, t, "a_t");
            detail::bind_equal(p, rm_t.result_first, t, n);
            p.outer_clauses_end = p.clauses.size();

            const int uq = detail::allocate_group(p, "uq", n, false, alloc_phase::forall_block);
            const auto rm_uq = encode_result_map(p, a, uq, "a_uq", alloc_phase::inner);
            const int reaches =
                detail::equality_bit(p, rm_uq.result_first, t, n, "uq_res", alloc_phase::inner);
            const int same = style == reach_style::direct_difference
                                 ? detail::equality_bit(p, uq, t, n, "uq_t", alloc_phase::inner)
                                 : detail::equality_bit(p, uq, rm_t.result_first, n, "uq_rt",
                                                        alloc_phase::inner);
            p.defs_clauses_end = p.clauses.size();
            // every universal state that maps onto t must be t itself
            p.clauses.push_back({-reaches, same});
            break;
        }
        case encode_mode::shared_attractors: {
            p.kind = encoded_problem::kind_t::qbf_exists_forall;
            p.counterexample_polarity = true;
            const int u = detail::allocate_group(p, "u", n, true, alloc_phase::outer);
            const int sel = detail::allocate_group(p, "sel", 1, true, alloc_phase::outer);
            const auto rma_t = encode_result_map(p, a, t, "a_t");
            const auto rmb_t = encode_result_map(p, *b, t, "b_t");
            const int fix_a = detail::equality_bit(p, rma_t.result_first, t, n, "fix_a", alloc_phase::outer);
            const int fix_b = detail::equality_bit(p, rmb_t.result_first, t, n, "fix_b", alloc_phase::outer);
            const auto rma_u = encode_result_map(p, a, u, "a_u");
            const auto rmb_u = encode_result_map(p, *b, u, "b_u");
            // sel picks the side claimed to own the attractor: that side is
            // fixed and u witnesses its preimage.
            p.clauses.push_back({-sel, fix_a});
            p.clauses.push_back({sel, fix_b});
            for (int k = 0; k < n; ++k) {
                p.clauses.push_back({-sel, -(rma_u.result_first + k), t + k});
                p.clauses.push_back({-sel, rma_u.result_first + k, -(t + k)});
                p.clauses.push_back({sel, -(rmb_u.result_first + k), t + k});
                p.clauses.push_back({sel, rmb_u.result_first + k, -(t + k)});
            }
            if (style == reach_style::direct_difference) {
                detail::require_difference(p, u, t, n, "ut", alloc_phase::outer);
            } else {
                const int da = detail::allocate_group(p, "d_u_rat", n, false, alloc_phase::outer);
                const int db = detail::allocate_group(p, "d_u_rbt", n, false, alloc_phase::outer);
                std::vector<int> some_a{-sel}, some_b{sel};
                for (int k = 0; k < n; ++k) {
                    detail::define_xor(p, da + k, u + k, rma_t.result_first + k);
                    detail::define_xor(p, db + k, u + k, rmb_t.result_first + k);
                    some_a.push_back(da + k);
                    some_b.push_back(db + k);
                }
                p.clauses.push_back(std::move(some_a));
                p.clauses.push_back(std::move(some_b));
            }
            p.outer_clauses_end = p.clauses.size();

            const int uq = detail::allocate_group(p, "uq", n, false, alloc_phase::forall_block);
            const auto rma_uq = encode_result_map(p, a, uq, "a_uq", alloc_phase::inner);
            const auto rmb_uq = encode_result_map(p, *b, uq, "b_uq", alloc_phase::inner);
            const int reaches_a =
                detail::equality_bit(p, rma_uq.result_first, t, n, "uq_res_a", alloc_phase::inner);
            const int reaches_b =
                detail::equality_bit(p, rmb_uq.result_first, t, n, "uq_res_b", alloc_phase::inner);
            const int same_a = style == reach_style::direct_difference
                                   ? detail::equality_bit(p, uq, t, n, "uq_t_a", alloc_phase::inner)
                                   : detail::equality_bit(p, uq, rma_t.result_first, n, "uq_rat",
                                                          alloc_phase::inner);
            const int same_b = style == reach_style::direct_difference
                                   ? same_a
                                   : detail::equality_bit(p, uq, rmb_t.result_first, n, "uq_rbt",
                                                          alloc_phase::inner);
            p.defs_clauses_end = p.clauses.size();
            // the unselected side must not be an attractor at t
            p.clauses.push_back({-sel, -fix_b, -reaches_b, same_b});
            p.clauses.push_back({sel, -fix_a, -reaches_a, same_a});
            break;
        }
    }
    if (p.kind == encoded_problem::kind_t::cnf) {
        p.outer_clauses_end = p.clauses.size();
        p.defs_clauses_end = p.clauses.size();
    }
    return p;
}

/// Extracts the states named by the model: always the t-group, plus the
/// u-group when the mode carries preimage evidence.
struct decoded_witness {
    state t;
    std::optional<state> u;
};

inline decoded_witness decode_witness(const encoded_problem& p, const std::vector<bool>& model) {
    auto read_group = [&](const var_group& g) {
        state s(p.background_width);
        for (int k = 0; k < g.count; ++k)
            if (g.first + k <= static_cast<int>(model.size()) && model[static_cast<std::size_t>(g.first + k - 1)])
                s.set(static_cast<std::uint32_t>(k));
        return s;
    };
    decoded_witness w{read_group(p.group("t")), std::nullopt};
    if (const var_group* u = p.find_group("u")) w.u = read_group(*u);
    return w;
}

/// DIMACS CNF text, byte-stable.
inline std::string to_dimacs(const encoded_problem& p) {
    if (p.kind != encoded_problem::kind_t::cnf)
        throw usage_error("to_dimacs requires a propositional problem; use to_qdimacs");
    std::ostringstream out;
    out << "p cnf " << p.num_vars << ' ' << p.clauses.size() << '\n';
    for (const auto& c : p.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

/// QDIMACS text with the two-level prefix (plus the trailing definitional
/// existential block).
inline std::string to_qdimacs(const encoded_problem& p) {
    if (p.kind == encoded_problem::kind_t::cnf)
        throw usage_error("to_qdimacs requires a quantified problem; use to_dimacs");
    std::ostringstream out;
    out << "p cnf " << p.num_vars << ' ' << p.clauses.size() << '\n';
    auto block = [&](char q, const std::vector<int>& vars) {
        if (vars.empty()) return;
        out << q;
        for (int v : vars) out << ' ' << v;
        out << " 0\n";
    };
    if (p.kind == encoded_problem::kind_t::qbf_exists_forall) {
        block('e', p.exists_vars);
        block('a', p.forall_vars);
        block('e', p.inner_aux_vars);
    } else {
        block('a', p.forall_vars);
        std::vector<int> rest = p.exists_vars;
        rest.insert(rest.end(), p.inner_aux_vars.begin(), p.inner_aux_vars.end());
        block('e', rest);
    }
    for (const auto& c : p.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace rsys
