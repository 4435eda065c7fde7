#pragma once

#include <atomic>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rsys/errors.hpp"
#include "rsys/state.hpp"

namespace rsys {

/// The background set: an ordered list of distinct entity names.
/// Declaration order is the identity used for bit positions and for
/// every textual emission.
class entity_table {
public:
    entity_table() = default;

    explicit entity_table(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::uint32_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw usage_error("entity name at position " + std::to_string(i) + " is empty");
            auto [it, fresh] = index_.emplace(names_[i], i);
            (void)it;
            if (!fresh)
                throw usage_error("duplicate entity name '" + names_[i] + "'");
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }

    const std::string& name(std::uint32_t i) const { return names_.at(i); }

    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::uint32_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::uint32_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw usage_error("unknown entity name '" + name + "'");
        return *i;
    }

    bool operator==(const entity_table& o) const { return names_ == o.names_; }
    bool operator!=(const entity_table& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// One reaction: reactants R, inhibitors I, nonempty products P.
/// R and I may overlap; such a reaction is never enabled.
struct reaction {
    state reactants;
    state inhibitors;
    state products;
};

/// An immutable reaction system: background set plus an ordered reaction
/// list. Reaction order is stable and part of the public contract.
class reaction_system {
public:
    reaction_system(std::string name, entity_table entities, std::vector<reaction> reactions)
        : name_(std::move(name)), entities_(std::move(entities)), reactions_(std::move(reactions)) {
        const std::uint32_t w = entities_.size();
        for (std::size_t j = 0; j < reactions_.size(); ++j) {
            const reaction& a = reactions_[j];
            if (a.reactants.width() != w || a.inhibitors.width() != w || a.products.width() != w)
                throw usage_error("reaction " + std::to_string(j) + ": state width does not match the background set");
            if (a.products.none())
                throw usage_error("reaction " + std::to_string(j) + ": empty product set");
        }
    }

    const std::string& name() const { return name_; }
    const entity_table& entities() const { return entities_; }
    std::uint32_t width() const { return entities_.size(); }
    const std::vector<reaction>& reactions() const { return reactions_; }
    std::size_t reaction_count() const { return reactions_.size(); }
    const reaction& reaction_at(std::size_t j) const {
        if (j >= reactions_.size())
            throw usage_error("reaction index " + std::to_string(j) + " out of range");
        return reactions_[j];
    }

private:
    std::string name_;
    entity_table entities_;
    std::vector<reaction> reactions_;
};

/// Resource usage of a system: the true maxima of |R| and |I| over all
/// reactions, plus the derived class flags.
struct resource_class {
    std::uint32_t max_reactants = 0;
    std::uint32_t max_inhibitors = 0;
    bool reactantless = true;
    bool inhibitorless = true;
};

namespace detail {

inline std::atomic<std::uint64_t>& eval_counter() {
    static std::atomic<std::uint64_t> n{0};
    return n;
}

} // namespace detail

/// Number of result-function evaluations performed so far (process-wide).
inline std::uint64_t result_eval_count() { return detail::eval_counter().load(); }

inline void reset_result_eval_count() { detail::eval_counter().store(0); }

inline void check_state_width(const reaction_system& sys, const state& t) {
    if (t.width() != sys.width())
        throw usage_error("state width " + std::to_string(t.width()) +
                          " does not match background size " + std::to_string(sys.width()));
}

/// True iff reaction j is enabled in T: R_j ⊆ T and I_j ∩ T = ∅.
inline bool enabled(const reaction_system& sys, std::size_t j, const state& t) {
    const reaction& a = sys.reaction_at(j);
    check_state_width(sys, t);
    return t.contains(a.reactants) && !t.intersects(a.inhibitors);
}

/// Result of the single reaction j: P_j if enabled, ∅ otherwise.
inline state result_single(const reaction_system& sys, std::size_t j, const state& t) {
    return enabled(sys, j, t) ? sys.reaction_at(j).products : state(sys.width());
}

/// The next-state map: union of the products of all enabled reactions.
inline state result(const reaction_system& sys, const state& t) {
    check_state_width(sys, t);
    detail::eval_counter().fetch_add(1, std::memory_order_relaxed);
    state out(sys.width());
    for (const reaction& a : sys.reactions())
        if (t.contains(a.reactants) && !t.intersects(a.inhibitors))
            out |= a.products;
    return out;
}

/// Replaces every reaction (R, I, {p1..pm}) by m single-product copies.
/// The result function is unchanged; output reaction count is Σ|P_a|.
inline reaction_system normalize_singleton_products(const reaction_system& sys) {
    std::vector<reaction> out;
    for (const reaction& a : sys.reactions()) {
        a.products.for_each_member([&](std::uint32_t p) {
            state prod(sys.width());
            prod.set(p);
            out.push_back(reaction{a.reactants, a.inhibitors, std::move(prod)});
        });
    }
    return reaction_system(sys.name(), sys.entities(), std::move(out));
}

inline resource_class classify(const reaction_system& sys) {
    resource_class rc;
    for (const reaction& a : sys.reactions()) {
        rc.max_reactants = std::max(rc.max_reactants, a.reactants.count());
        rc.max_inhibitors = std::max(rc.max_inhibitors, a.inhibitors.count());
    }
    rc.reactantless = rc.max_reactants == 0;
    rc.inhibitorless = rc.max_inhibitors == 0;
    return rc;
}

/// For a reactantless system, the system with each (∅, I, P) turned into
/// (I, ∅, P). Its result function satisfies res'(T) = res(S∖T), which is
/// what the inhibitorless bijectivity criterion needs.
inline reaction_system complement_conjugate(const reaction_system& sys) {
    if (!classify(sys).reactantless)
        throw usage_error("complement_conjugate requires a reactantless system");
    std::vector<reaction> out;
    out.reserve(sys.reaction_count());
    for (const reaction& a : sys.reactions())
        out.push_back(reaction{a.inhibitors, state(sys.width()), a.products});
    return reaction_system(sys.name() + "_conj", sys.entities(), std::move(out));
}

/// Convenience builder used by tests and the reduction compilers:
/// reactions are given as triples of entity-name lists.
struct reaction_names {
    std::vector<std::string> reactants;
    std::vector<std::string> inhibitors;
    std::vector<std::string> products;
};

inline state state_of_names(const entity_table& table, const std::vector<std::string>& names) {
    state s(table.size());
    for (const auto& n : names) s.set(table.index_of(n));
    return s;
}

inline reaction_system build_system(std::string name, std::vector<std::string> entity_names,
                                    const std::vector<reaction_names>& reactions) {
    entity_table table(std::move(entity_names));
    std::vector<reaction> rs;
    rs.reserve(reactions.size());
    for (const auto& r : reactions)
        rs.push_back(reaction{state_of_names(table, r.reactants), state_of_names(table, r.inhibitors),
                              state_of_names(table, r.products)});
    return reaction_system(std::move(name), std::move(table), std::move(rs));
}

} // namespace rsys
