#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsys/core.hpp"

namespace rsys {

namespace detail {

inline void require_inhibitorless(const reaction_system& sys, const char* op) {
    if (!classify(sys).inhibitorless)
        throw usage_error(std::string(op) + " requires an inhibitorless system");
}

inline void require_reactantless(const reaction_system& sys, const char* op) {
    if (!classify(sys).reactantless)
        throw usage_error(std::string(op) + " requires a reactantless system");
}

inline void require_same_background(const reaction_system& a, const reaction_system& b, const char* op) {
    if (a.entities() != b.entities())
        throw usage_error(std::string(op) + " requires a common background set");
}

} // namespace detail

/// Least fixed point of a monotone (inhibitorless) result function:
/// iterate from ∅; the chain is ⊆-increasing and converges within
/// |S|+1 steps.
inline state lfp_monotone(const reaction_system& sys) {
    detail::require_inhibitorless(sys, "lfp_monotone");
    state cur(sys.width());
    for (std::uint32_t k = 0; k <= sys.width() + 1; ++k) {
        state next = result(sys, cur);
        if (!next.contains(cur))
            throw internal_error("lfp iteration is not increasing");
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw internal_error("lfp iteration did not converge within |S|+1 steps");
}

/// Greatest fixed point: the dual iteration from the full set.
inline state gfp_monotone(const reaction_system& sys) {
    detail::require_inhibitorless(sys, "gfp_monotone");
    state cur = state::full(sys.width());
    for (std::uint32_t k = 0; k <= sys.width() + 1; ++k) {
        state next = result(sys, cur);
        if (!cur.contains(next))
            throw internal_error("gfp iteration is not decreasing");
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw internal_error("gfp iteration did not converge within |S|+1 steps");
}

/// For monotone systems, res_A(T) ⊆ res_B(T) holds for every state as
/// soon as it holds on the reactant sets of A; only those critical states
/// are evaluated.
inline bool pointwise_leq_monotone(const reaction_system& a, const reaction_system& b) {
    detail::require_inhibitorless(a, "pointwise_leq_monotone");
    detail::require_inhibitorless(b, "pointwise_leq_monotone");
    detail::require_same_background(a, b, "pointwise_leq_monotone");
    for (const reaction& r : a.reactions())
        if (!result(b, r.reactants).contains(result(a, r.reactants))) return false;
    return true;
}

inline bool res_eq_inhibitorless(const reaction_system& a, const reaction_system& b) {
    return pointwise_leq_monotone(a, b) && pointwise_leq_monotone(b, a);
}

/// Antitone counterpart: the critical states are the complements of the
/// inhibitor sets of A.
inline bool pointwise_leq_antitone(const reaction_system& a, const reaction_system& b) {
    detail::require_reactantless(a, "pointwise_leq_antitone");
    detail::require_reactantless(b, "pointwise_leq_antitone");
    detail::require_same_background(a, b, "pointwise_leq_antitone");
    for (const reaction& r : a.reactions()) {
        const state critical = r.inhibitors.complement();
        if (!result(b, critical).contains(result(a, critical))) return false;
    }
    return true;
}

inline bool res_eq_reactantless(const reaction_system& a, const reaction_system& b) {
    return pointwise_leq_antitone(a, b) && pointwise_leq_antitone(b, a);
}

/// True iff the result function is constantly ∅, i.e. every reaction has
/// overlapping reactants and inhibitors and so is never enabled.
inline bool is_empty_function(const reaction_system& sys) {
    for (const reaction& a : sys.reactions())
        if (!a.reactants.intersects(a.inhibitors)) return false;
    return true;
}

/// Outcome of the three-condition injectivity test for monotone systems.
/// failed_condition is 0 on success, otherwise the 1-based number of the
/// first condition that broke.
struct bijectivity_report {
    bool bijective = false;
    int failed_condition = 0;
    std::string detail;
};

/// Decides bijectivity of an inhibitorless result function by checking:
///  1. res(∅) = ∅ and |res({x})| = 1 for every x;
///  2. x ↦ res({x}) is injective;
///  3. res(R) = ⋃_{x∈R} res({x}) for every reactant set R.
/// On the finite lattice injectivity and bijectivity coincide.
inline bijectivity_report bijective_inhibitorless(const reaction_system& sys) {
    detail::require_inhibitorless(sys, "bijective_inhibitorless");
    bijectivity_report rep;
    const std::uint32_t n = sys.width();

    if (!result(sys, state(n)).none()) {
        rep.failed_condition = 1;
        rep.detail = "result of the empty state is nonempty";
        return rep;
    }
    std::vector<state> singleton_image;
    singleton_image.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        state s(n);
        s.set(x);
        state img = result(sys, s);
        if (img.count() != 1) {
            rep.failed_condition = 1;
            rep.detail = "singleton image of " + sys.entities().name(x) + " has size " +
                         std::to_string(img.count());
            return rep;
        }
        singleton_image.push_back(std::move(img));
    }
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y)
            if (singleton_image[x] == singleton_image[y]) {
                rep.failed_condition = 2;
                rep.detail = "entities " + sys.entities().name(x) + " and " + sys.entities().name(y) +
                             " map to the same singleton";
                return rep;
            }
    for (std::size_t j = 0; j < sys.reaction_count(); ++j) {
        const state& r = sys.reaction_at(j).reactants;
        state expected(n);
        r.for_each_member([&](std::uint32_t x) { expected |= singleton_image[x]; });
        if (result(sys, r) != expected) {
            rep.failed_condition = 3;
            rep.detail = "reaction " + std::to_string(j) + " is not determined by singleton images";
            return rep;
        }
    }
    rep.bijective = true;
    return rep;
}

/// Decides bijectivity of an antitone result function. Composing with
/// the (bijective) complement map gives the monotone function computed by
/// complement_conjugate, so the three-condition test applies to that.
inline bool bijective_reactantless(const reaction_system& sys) {
    detail::require_reactantless(sys, "bijective_reactantless");
    return bijective_inhibitorless(complement_conjugate(sys)).bijective;
}

/// A bijective monotone result function is additive, so reactions with
/// two or more reactants are redundant: drop them and verify equality of
/// the result functions before returning.
inline reaction_system additive_reduction(const reaction_system& sys) {
    const auto rep = bijective_inhibitorless(sys);
    if (!rep.bijective)
        throw usage_error("additive_reduction requires a bijective inhibitorless system (condition " +
                          std::to_string(rep.failed_condition) + " failed: " + rep.detail + ")");
    std::vector<reaction> kept;
    for (const reaction& a : sys.reactions())
        if (a.reactants.count() <= 1) kept.push_back(a);
    reaction_system reduced(sys.name(), sys.entities(), std::move(kept));
    if (!res_eq_inhibitorless(sys, reduced))
        throw internal_error("additive_reduction changed the result function");
    return reduced;
}

} // namespace rsys
