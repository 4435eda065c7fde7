#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsys/core.hpp"
#include "rsys/formula.hpp"

namespace rsys {

/// Maps a gadget state back to the truth assignment it encodes: variable i
/// is true exactly when the entity at assign_entity[i-1] is present.
struct witness_decoder {
    std::vector<std::uint32_t> assign_entity;

    std::vector<bool> decode(const state& s) const {
        std::vector<bool> a(assign_entity.size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = s.test(assign_entity[i]);
        return a;
    }
};

/// What a reduction emits: one or two systems over a shared background,
/// an optional distinguished state for given-state problems, the decision
/// problem the gadget targets, and the assignment decoder.
struct reduction_output {
    reaction_system system_a;
    std::optional<reaction_system> system_b;
    std::optional<state> distinguished_state;
    std::string target_problem;
    witness_decoder decoder;
};

enum class fixpoint_variant { exists, exists_attractor };
enum class qbf_reactantless_variant { fixge, shared_attractors };
enum class common_fixpoint_variant { fixpoint, attractor };

namespace detail {

inline void require_cnf_input(const formula& f, const char* op) {
    if (f.kind != formula_kind::cnf) throw usage_error(std::string(op) + ": input must be CNF");
    if (f.has_prefix()) throw usage_error(std::string(op) + ": input must be quantifier-free");
    if (f.clauses.empty()) throw usage_error(std::string(op) + ": empty clause set");
}

inline void require_dnf_input(const formula& f, const char* op) {
    if (f.kind != formula_kind::dnf) throw usage_error(std::string(op) + ": input must be DNF");
    if (f.has_prefix()) throw usage_error(std::string(op) + ": input must be quantifier-free");
    if (f.clauses.empty()) throw usage_error(std::string(op) + ": empty clause set");
}

inline void require_forall_exists_input(const formula& f, const char* op) {
    if (f.kind != formula_kind::cnf) throw usage_error(std::string(op) + ": input must be CNF");
    if (!f.has_prefix()) throw usage_error(std::string(op) + ": input must carry a forall/exists prefix");
    if (f.clauses.empty()) throw usage_error(std::string(op) + ": empty clause set");
}

/// Accumulates the background set and reaction list of one gadget.
/// Entity declaration order follows the construction's background layout;
/// reactions are appended in group order.
class gadget_builder {
public:
    std::uint32_t add_entity(const std::string& name) {
        names_.push_back(name);
        return static_cast<std::uint32_t>(names_.size() - 1);
    }

    std::uint32_t width() const { return static_cast<std::uint32_t>(names_.size()); }

    state make(const std::vector<std::uint32_t>& members) const {
        state s(width());
        for (auto i : members) s.set(i);
        return s;
    }

    void add(const std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& i,
             const std::vector<std::uint32_t>& p) {
        reactions_.push_back(reaction{make(r), make(i), make(p)});
    }

    reaction_system finish(std::string name) const {
        return reaction_system(std::move(name), entity_table(names_), reactions_);
    }

    void clear_reactions() { reactions_.clear(); }

    std::vector<std::uint32_t> range(std::uint32_t first, std::uint32_t count) const {
        std::vector<std::uint32_t> out(count);
        for (std::uint32_t k = 0; k < count; ++k) out[k] = first + k;
        return out;
    }

private:
    std::vector<std::string> names_;
    std::vector<reaction> reactions_;
};

inline std::vector<std::uint32_t> cat(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace detail

/// Gadget for "is the given state a fixed point attractor" over systems
/// without inhibitors. Background: x/nx entities per variable, one entity
/// per clause, and a poison marker that any ill-formed preimage produces.
/// The distinguished state (all clause entities) is a fixed point, and an
/// attractor exactly when the formula is satisfiable. Every reaction uses
/// at most two reactants.
inline reduction_output reduce_sat_to_inhibitorless_given_attractor(const formula& f) {
    detail::require_cnf_input(f, "sat-to-inhibitorless-given-attractor");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    for (int j = 1; j <= m; ++j) g.add_entity("c" + std::to_string(j));
    const std::uint32_t spade = g.add_entity("spade");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    auto cj = [&](int j) { return static_cast<std::uint32_t>(2 * n + j - 1); };

    for (int j = 0; j < m; ++j)
        for (int x : f.pos(j)) g.add({xi(x)}, {}, {cj(j + 1)});
    for (int j = 0; j < m; ++j)
        for (int x : f.neg(j)) g.add({nxi(x)}, {}, {cj(j + 1)});
    for (int i = 1; i <= n; ++i) g.add({xi(i), nxi(i)}, {}, {spade});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) g.add({xi(i), cj(j)}, {}, {spade});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) g.add({nxi(i), cj(j)}, {}, {spade});
    for (int j = 1; j <= m; ++j) g.add({cj(j)}, {}, {cj(j)});
    g.add({spade}, {}, {spade});

    reduction_output out{g.finish("sat_inhibitorless_given_attractor"), std::nullopt, std::nullopt,
                         "given-state-attractor", {}};
    out.distinguished_state = g.make(g.range(cj(1), m));
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Reactantless counterpart of the given-state-attractor gadget. The
/// suit entities club/diamond/spade implement a three-entity switch whose
/// only route back into the distinguished state passes through diamond.
inline reduction_output reduce_sat_to_reactantless_given_attractor(const formula& f) {
    detail::require_cnf_input(f, "sat-to-reactantless-given-attractor");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    for (int j = 1; j <= m; ++j) g.add_entity("c" + std::to_string(j));
    const std::uint32_t club = g.add_entity("club");
    const std::uint32_t diamond = g.add_entity("diamond");
    const std::uint32_t spade = g.add_entity("spade");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    auto cj = [&](int j) { return static_cast<std::uint32_t>(2 * n + j - 1); };
    const auto all_c = g.range(cj(1), m);

    for (int j = 0; j < m; ++j)
        for (int x : f.pos(j)) g.add({}, {nxi(x), club, spade}, {cj(j + 1)});
    for (int j = 0; j < m; ++j)
        for (int x : f.neg(j)) g.add({}, {xi(x), club, spade}, {cj(j + 1)});
    for (int i = 1; i <= n; ++i) g.add({}, {xi(i), nxi(i), club, spade}, {spade});
    for (int j = 1; j <= m; ++j) g.add({}, {cj(j)}, {spade});
    // Restores the clause entities whenever the state stays inside the
    // distinguished region.
    std::vector<std::uint32_t> outside = detail::cat(g.range(0, static_cast<std::uint32_t>(2 * n)),
                                                     {diamond, spade});
    g.add({}, outside, all_c);
    g.add({}, {diamond, spade}, {club});
    g.add({}, {club, spade}, {club});
    g.add({}, {club, diamond}, {club, diamond, spade});

    reduction_output out{g.finish("sat_reactantless_given_attractor"), std::nullopt, std::nullopt,
                         "given-state-attractor", {}};
    state t = g.make(all_c);
    t.set(club);
    out.distinguished_state = std::move(t);
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Fixed-point existence gadget for reactantless systems: the flip
/// reactions force any fixed point to pick exactly one of x/nx per
/// variable, clause reactions poison assignments that falsify a clause,
/// and the club/spade pair turns the poison into a two-cycle. The exists
/// variant has a fixed point iff the formula is satisfiable; the
/// exists_attractor variant makes those fixed points reachable.
inline reduction_output reduce_sat_to_reactantless_fixpoint(const formula& f, fixpoint_variant variant) {
    detail::require_cnf_input(f, "sat-to-reactantless-fixpoint");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    const std::uint32_t spade = g.add_entity("spade");
    const std::uint32_t club = g.add_entity("club");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };

    for (int j = 0; j < m; ++j) {
        std::vector<std::uint32_t> inh;
        for (int x : f.neg(j)) inh.push_back(nxi(x));
        for (int x : f.pos(j)) inh.push_back(xi(x));
        g.add({}, inh, {spade});
    }
    for (int i = 1; i <= n; ++i) g.add({}, {xi(i)}, {nxi(i)});
    for (int i = 1; i <= n; ++i) g.add({}, {nxi(i)}, {xi(i)});
    if (variant == fixpoint_variant::exists)
        g.add({}, {club}, {club, spade});
    else
        g.add({}, {club}, {club});
    g.add({}, {spade}, {club});

    reduction_output out{g.finish("sat_reactantless_fixpoint"), std::nullopt, std::nullopt,
                         variant == fixpoint_variant::exists ? "exists-fixpoint" : "exists-attractor",
                         {}};
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Two-level gadget for reactantless systems built from a forall/exists
/// CNF. The fixed points of system A encode exactly the universal-block
/// assignments, and such a fixed point is an attractor iff its universal
/// assignment extends to a satisfying one. The fixge variant asks for a
/// fixed point that is not an attractor (YES iff the quantified formula
/// is invalid); the shared_attractors variant adds a companion system B
/// whose fixed points are the same states, all of them attractors, so the
/// pair shares all fixed-point attractors iff the formula is valid.
inline reduction_output reduce_qbf_to_reactantless(const formula& f, qbf_reactantless_variant variant) {
    detail::require_forall_exists_input(f, "qbf-to-reactantless");
    const int n = f.num_vars, m = f.num_clauses();
    const std::vector<int> v1 = f.universal_vars();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    for (int j = 1; j <= m; ++j) g.add_entity("c" + std::to_string(j));
    for (int i = 1; i <= n; ++i) g.add_entity("h" + std::to_string(i));
    const std::uint32_t club = g.add_entity("club");
    const std::uint32_t diamond = g.add_entity("diamond");
    const std::uint32_t spade = g.add_entity("spade");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    auto cj = [&](int j) { return static_cast<std::uint32_t>(2 * n + j - 1); };
    auto hi = [&](int i) { return static_cast<std::uint32_t>(2 * n + m + i - 1); };
    const auto c_and_h = detail::cat(g.range(cj(1), m), g.range(hi(1), n));

    // Entities of the existential block (and their false twins) that a
    // restoring reaction must not see.
    std::vector<std::uint32_t> v2_twins;
    for (int i = 1; i <= n; ++i)
        if (!f.is_universal(i)) {
            v2_twins.push_back(xi(i));
            v2_twins.push_back(nxi(i));
        }

    auto emit_a = [&]() {
        for (int j = 0; j < m; ++j)
            for (int x : f.pos(j)) g.add({}, {nxi(x), club, spade}, {cj(j + 1)});
        for (int j = 0; j < m; ++j)
            for (int x : f.neg(j)) g.add({}, {xi(x), club, spade}, {cj(j + 1)});
        for (int j = 0; j < m; ++j) {
            std::vector<std::uint32_t> inh;
            for (int x : f.neg(j)) inh.push_back(nxi(x));
            for (int x : f.pos(j)) inh.push_back(xi(x));
            inh.push_back(club);
            inh.push_back(spade);
            g.add({}, inh, {spade});
        }
        for (int i = 1; i <= n; ++i) g.add({}, {xi(i), club, spade}, {hi(i)});
        for (int i = 1; i <= n; ++i) g.add({}, {nxi(i), club, spade}, {hi(i)});
        for (int i = 1; i <= n; ++i) g.add({}, {xi(i), nxi(i), club, spade}, {spade});
    };
    auto emit_shared_tail = [&](bool with_diamond_route) {
        for (int j = 1; j <= m; ++j) g.add({}, {cj(j)}, {spade});
        for (int i = 1; i <= n; ++i) g.add({}, {hi(i)}, {spade});
        for (int x : v1) g.add({}, {nxi(x)}, {xi(x)});
        for (int x : v1) g.add({}, {xi(x)}, {nxi(x)});
        g.add({}, detail::cat(v2_twins, {diamond, spade}), c_and_h);
        // Companion restorer that tolerates diamond instead of club; it
        // gives every encoded fixed point a distinct predecessor.
        if (with_diamond_route) g.add({}, detail::cat(v2_twins, {club, spade}), c_and_h);
        g.add({}, {diamond, spade}, {club});
        g.add({}, {club, spade}, {club});
        g.add({}, {club, diamond}, {club, diamond, spade});
    };

    emit_a();
    emit_shared_tail(false);
    reaction_system sys_a = g.finish("qbf_reactantless_a");

    reduction_output out{std::move(sys_a), std::nullopt, std::nullopt,
                         variant == qbf_reactantless_variant::fixge ? "exists-fixge" : "shared-attractors",
                         {}};
    if (variant == qbf_reactantless_variant::shared_attractors) {
        g.clear_reactions();
        emit_shared_tail(true);
        out.system_b = g.finish("qbf_reactantless_b");
    }
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Validity gadget for reactantless systems: fixed points of A are the
/// assignment states satisfying the DNF plus a heart marker, while B
/// fixes every assignment state. None of these fixed points is an
/// attractor, so the pair also decides sharing of fixed points that are
/// not attractors.
inline reduction_output reduce_validity_to_reactantless_shared_fixpoints(const formula& f) {
    detail::require_dnf_input(f, "validity-to-reactantless-shared-fixpoints");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    const std::uint32_t heart = g.add_entity("heart");
    const std::uint32_t club = g.add_entity("club");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };

    for (int j = 0; j < m; ++j) {
        std::vector<std::uint32_t> inh;
        for (int x : f.neg(j)) inh.push_back(xi(x));
        for (int x : f.pos(j)) inh.push_back(nxi(x));
        inh.push_back(club);
        g.add({}, inh, {heart});
    }
    for (int i = 1; i <= n; ++i) g.add({}, {xi(i)}, {nxi(i)});
    for (int i = 1; i <= n; ++i) g.add({}, {nxi(i)}, {xi(i)});
    g.add({}, {heart}, {heart, club});
    reaction_system sys_a = g.finish("validity_reactantless_a");

    g.clear_reactions();
    for (int i = 1; i <= n; ++i) g.add({}, {xi(i)}, {nxi(i)});
    for (int i = 1; i <= n; ++i) g.add({}, {nxi(i)}, {xi(i)});
    g.add({}, {club}, {heart});
    g.add({}, {heart}, {heart, club});

    reduction_output out{std::move(sys_a), g.finish("validity_reactantless_b"), std::nullopt,
                         "shared-fixpoints", {}};
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Common-fixed-point gadget for inhibitorless systems: every reaction of
/// A demands the full heart block, so states below it collapse to ∅. B
/// fixes every assignment state over the heart block; a common fixed
/// point therefore encodes a satisfying assignment. The attractor variant
/// drops A's spade self-loop so the shared fixed points become reachable.
inline reduction_output reduce_sat_to_inhibitorless_common_fixpoint(const formula& f,
                                                                    common_fixpoint_variant variant) {
    detail::require_cnf_input(f, "sat-to-inhibitorless-common-fixpoint");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("h" + std::to_string(i));
    const std::uint32_t spade = g.add_entity("spade");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    auto hi = [&](int i) { return static_cast<std::uint32_t>(2 * n + i - 1); };
    const auto hearts = g.range(hi(1), n);

    for (int j = 0; j < m; ++j) {
        std::vector<std::uint32_t> re;
        for (int x : f.neg(j)) re.push_back(xi(x));
        for (int x : f.pos(j)) re.push_back(nxi(x));
        g.add(detail::cat(re, hearts), {}, {spade});
    }
    for (int i = 1; i <= n; ++i) g.add(detail::cat({xi(i)}, hearts), {}, {hi(i), xi(i)});
    for (int i = 1; i <= n; ++i) g.add(detail::cat({nxi(i)}, hearts), {}, {hi(i), nxi(i)});
    for (int i = 1; i <= n; ++i) g.add(detail::cat({xi(i), nxi(i)}, hearts), {}, {spade});
    if (variant == common_fixpoint_variant::fixpoint) g.add(detail::cat({spade}, hearts), {}, {spade});
    reaction_system sys_a = g.finish("sat_inhibitorless_common_a");

    g.clear_reactions();
    g.add({}, {}, hearts);
    for (int i = 1; i <= n; ++i) g.add({xi(i)}, {}, {xi(i)});
    for (int i = 1; i <= n; ++i) g.add({nxi(i)}, {}, {nxi(i)});

    reduction_output out{std::move(sys_a), g.finish("sat_inhibitorless_common_b"), std::nullopt,
                         variant == common_fixpoint_variant::fixpoint ? "common-fixpoint"
                                                                      : "common-attractor",
                         {}};
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Validity gadget for inhibitorless systems deciding whether two systems
/// share all fixed points (and, since the distinguishing fixed points are
/// never attractors, also whether they share all fixed points that are
/// not attractors).
inline reduction_output reduce_validity_to_inhibitorless_shared_fixpoints(const formula& f) {
    detail::require_dnf_input(f, "validity-to-inhibitorless-shared-fixpoints");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("h" + std::to_string(i));
    const std::uint32_t heart = g.add_entity("heart");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    auto hi = [&](int i) { return static_cast<std::uint32_t>(2 * n + i - 1); };
    const auto hearts = g.range(hi(1), n);

    auto emit_flippers = [&]() {
        for (int i = 1; i <= n; ++i) g.add(detail::cat({xi(i)}, hearts), {}, {hi(i), xi(i)});
        for (int i = 1; i <= n; ++i) g.add(detail::cat({nxi(i)}, hearts), {}, {hi(i), nxi(i)});
        for (int i = 1; i <= n; ++i) g.add(detail::cat({xi(i), nxi(i)}, hearts), {}, {heart});
    };

    for (int j = 0; j < m; ++j) {
        std::vector<std::uint32_t> re;
        for (int x : f.neg(j)) re.push_back(nxi(x));
        for (int x : f.pos(j)) re.push_back(xi(x));
        re = detail::cat(re, hearts);
        re.push_back(heart);
        g.add(re, {}, {heart});
    }
    emit_flippers();
    reaction_system sys_a = g.finish("validity_inhibitorless_a");

    g.clear_reactions();
    g.add(detail::cat({heart}, hearts), {}, {heart});
    emit_flippers();

    reduction_output out{std::move(sys_a), g.finish("validity_inhibitorless_b"), std::nullopt,
                         "shared-fixpoints", {}};
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Two-level gadget for inhibitorless systems built from a forall/exists
/// CNF. Fixed points of A are ∅, {club} and the states made of the clause
/// and heart blocks plus a primed copy of a universal assignment (with or
/// without club); the club-free ones are attractors exactly when the
/// universal assignment extends to a satisfying one. B fixes the same
/// states and makes all of them attractors, so the pair shares all
/// fixed-point attractors iff the formula is valid. System A alone also
/// decides fixed-point-not-attractor existence (YES iff invalid).
inline reduction_output reduce_qbf_to_inhibitorless_shared_attractors(const formula& f) {
    detail::require_forall_exists_input(f, "qbf-to-inhibitorless-shared-attractors");
    const int n = f.num_vars, m = f.num_clauses();
    const std::vector<int> v1 = f.universal_vars();
    const int n1 = static_cast<int>(v1.size());
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_entity("nx" + std::to_string(i));
    for (int x : v1) g.add_entity("xp" + std::to_string(x));
    for (int j = 1; j <= m; ++j) g.add_entity("c" + std::to_string(j));
    for (int i = 1; i <= n; ++i) g.add_entity("h" + std::to_string(i));
    const std::uint32_t club = g.add_entity("club");
    const std::uint32_t spade = g.add_entity("spade");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };
    auto nxi = [&](int i) { return static_cast<std::uint32_t>(n + i - 1); };
    auto xp = [&](int x) {
        const auto it = std::lower_bound(v1.begin(), v1.end(), x);
        return static_cast<std::uint32_t>(2 * n + (it - v1.begin()));
    };
    auto cj = [&](int j) { return static_cast<std::uint32_t>(2 * n + n1 + j - 1); };
    auto hi = [&](int i) { return static_cast<std::uint32_t>(2 * n + n1 + m + i - 1); };
    const auto c_and_h = detail::cat(g.range(cj(1), m), g.range(hi(1), n));

    for (int j = 0; j < m; ++j)
        for (int x : f.pos(j)) g.add({xi(x)}, {}, {cj(j + 1)});
    for (int j = 0; j < m; ++j)
        for (int x : f.neg(j)) g.add({nxi(x)}, {}, {cj(j + 1)});
    for (int j = 0; j < m; ++j) {
        std::vector<std::uint32_t> re;
        for (int x : f.neg(j)) re.push_back(xi(x));
        for (int x : f.pos(j)) re.push_back(nxi(x));
        g.add(re, {}, {spade});
    }
    for (int i = 1; i <= n; ++i) g.add({xi(i)}, {}, {hi(i)});
    for (int i = 1; i <= n; ++i) g.add({nxi(i)}, {}, {hi(i)});
    for (int i = 1; i <= n; ++i) g.add({xi(i), nxi(i)}, {}, {club});
    for (int x : v1) g.add({xi(x)}, {}, {xp(x)});
    g.add(c_and_h, {}, c_and_h);
    for (int x : v1) g.add(detail::cat(c_and_h, {xp(x)}), {}, {xp(x)});
    for (int i = 1; i <= n; ++i) g.add(detail::cat(c_and_h, {xi(i)}), {}, {club});
    for (int i = 1; i <= n; ++i) g.add(detail::cat(c_and_h, {nxi(i)}), {}, {club});
    g.add({club}, {}, {club});
    g.add({spade}, {}, {club});
    reaction_system sys_a = g.finish("qbf_inhibitorless_a");

    g.clear_reactions();
    g.add(c_and_h, {}, c_and_h);
    for (int x : v1) g.add(detail::cat(c_and_h, {xp(x)}), {}, {xp(x)});
    g.add({club}, {}, {club});

    reduction_output out{std::move(sys_a), g.finish("qbf_inhibitorless_b"), std::nullopt,
                         "shared-attractors", {}};
    // The universal assignment of a counterexample lives in the primed
    // block; existential variables decode from their plain entities.
    for (int i = 1; i <= n; ++i)
        out.decoder.assign_entity.push_back(f.is_universal(i) ? xp(i) : xi(i));
    return out;
}

/// Result-function equality gadget: A produces a heart exactly on states
/// whose assignment satisfies the DNF, B produces it always, so the two
/// result functions agree iff the formula is a tautology. This is the one
/// construction that uses both reactants and inhibitors.
inline reduction_output reduce_validity_to_res_eq(const formula& f) {
    detail::require_dnf_input(f, "validity-to-res-eq");
    const int n = f.num_vars, m = f.num_clauses();
    detail::gadget_builder g;
    for (int i = 1; i <= n; ++i) g.add_entity("x" + std::to_string(i));
    const std::uint32_t heart = g.add_entity("heart");
    auto xi = [&](int i) { return static_cast<std::uint32_t>(i - 1); };

    for (int j = 0; j < m; ++j) {
        std::vector<std::uint32_t> re, inh;
        for (int x : f.pos(j)) re.push_back(xi(x));
        for (int x : f.neg(j)) inh.push_back(xi(x));
        g.add(re, inh, {heart});
    }
    reaction_system sys_a = g.finish("validity_res_eq_a");

    g.clear_reactions();
    g.add({}, {}, {heart});

    reduction_output out{std::move(sys_a), g.finish("validity_res_eq_b"), std::nullopt, "res-eq", {}};
    for (int i = 1; i <= n; ++i) out.decoder.assign_entity.push_back(xi(i));
    return out;
}

/// Construction names accepted by the command-line `reduce` dispatcher.
inline std::vector<std::string> reduction_names() {
    return {
        "sat-to-inhibitorless-given-attractor",
        "sat-to-reactantless-given-attractor",
        "sat-to-reactantless-fixpoint",
        "qbf-to-reactantless",
        "validity-to-reactantless-shared-fixpoints",
        "sat-to-inhibitorless-common-fixpoint",
        "validity-to-inhibitorless-shared-fixpoints",
        "qbf-to-inhibitorless-shared-attractors",
        "validity-to-res-eq",
    };
}

/// Runs a construction by name. `variant` selects among a construction's
/// documented variants and may be empty for the default.
inline reduction_output run_reduction(const std::string& name, const formula& f,
                                      const std::string& variant = "") {
    auto bad_variant = [&]() -> reduction_output {
        throw usage_error("construction '" + name + "' has no variant '" + variant + "'");
    };
    if (name == "sat-to-inhibitorless-given-attractor")
        return variant.empty() ? reduce_sat_to_inhibitorless_given_attractor(f) : bad_variant();
    if (name == "sat-to-reactantless-given-attractor")
        return variant.empty() ? reduce_sat_to_reactantless_given_attractor(f) : bad_variant();
    if (name == "sat-to-reactantless-fixpoint") {
        if (variant.empty() || variant == "exists")
            return reduce_sat_to_reactantless_fixpoint(f, fixpoint_variant::exists);
        if (variant == "exists-attractor")
            return reduce_sat_to_reactantless_fixpoint(f, fixpoint_variant::exists_attractor);
        return bad_variant();
    }
    if (name == "qbf-to-reactantless") {
        if (variant.empty() || variant == "fixge")
            return reduce_qbf_to_reactantless(f, qbf_reactantless_variant::fixge);
        if (variant == "shared-attractors")
            return reduce_qbf_to_reactantless(f, qbf_reactantless_variant::shared_attractors);
        return bad_variant();
    }
    if (name == "validity-to-reactantless-shared-fixpoints")
        return variant.empty() ? reduce_validity_to_reactantless_shared_fixpoints(f) : bad_variant();
    if (name == "sat-to-inhibitorless-common-fixpoint") {
        if (variant.empty() || variant == "fixpoint")
            return reduce_sat_to_inhibitorless_common_fixpoint(f, common_fixpoint_variant::fixpoint);
        if (variant == "attractor")
            return reduce_sat_to_inhibitorless_common_fixpoint(f, common_fixpoint_variant::attractor);
        return bad_variant();
    }
    if (name == "validity-to-inhibitorless-shared-fixpoints")
        return variant.empty() ? reduce_validity_to_inhibitorless_shared_fixpoints(f) : bad_variant();
    if (name == "qbf-to-inhibitorless-shared-attractors")
        return variant.empty() ? reduce_qbf_to_inhibitorless_shared_attractors(f) : bad_variant();
    if (name == "validity-to-res-eq")
        return variant.empty() ? reduce_validity_to_res_eq(f) : bad_variant();
    throw usage_error("unknown construction '" + name + "'");
}

} // namespace rsys
