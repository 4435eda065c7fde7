#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "rsys/errors.hpp"

namespace rsys {

enum class formula_kind { cnf, dnf };

/// A clause list over variables 1..num_vars with signed literals, plus an
/// optional two-block ∀∃ prefix (universal block first, existential block
/// its complement). Clauses are kept exactly as written: tautological
/// clauses and duplicate clauses are preserved, and variables that occur
/// in no clause are still part of the variable range.
struct formula {
    formula_kind kind = formula_kind::cnf;
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::optional<std::vector<bool>> universal; // size num_vars; var i at index i-1

    formula() = default;

    formula(formula_kind k, int n, std::vector<std::vector<int>> cs,
            std::optional<std::vector<bool>> forall_block = std::nullopt)
        : kind(k), num_vars(n), clauses(std::move(cs)), universal(std::move(forall_block)) {
        if (num_vars < 0) throw usage_error("negative variable count");
        for (std::size_t j = 0; j < clauses.size(); ++j) {
            if (clauses[j].empty())
                throw usage_error("clause " + std::to_string(j + 1) + " is empty");
            for (int lit : clauses[j]) {
                const int v = std::abs(lit);
                if (lit == 0 || v > num_vars)
                    throw usage_error("clause " + std::to_string(j + 1) + ": literal " +
                                      std::to_string(lit) + " out of range");
            }
        }
        if (universal && static_cast<int>(universal->size()) != num_vars)
            throw usage_error("quantifier prefix does not cover the variable range");
    }

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    bool has_prefix() const { return universal.has_value(); }

    bool is_universal(int var) const {
        return universal && (*universal)[static_cast<std::size_t>(var - 1)];
    }

    /// Variables occurring non-negated in clause j (0-based), ascending,
    /// without duplicates.
    std::vector<int> pos(int j) const { return occurring(j, +1); }

    /// Variables occurring negated in clause j, ascending, without
    /// duplicates.
    std::vector<int> neg(int j) const { return occurring(j, -1); }

    /// The universal block as an ascending variable list (empty without a
    /// prefix).
    std::vector<int> universal_vars() const {
        std::vector<int> out;
        if (!universal) return out;
        for (int v = 1; v <= num_vars; ++v)
            if ((*universal)[static_cast<std::size_t>(v - 1)]) out.push_back(v);
        return out;
    }

private:
    std::vector<int> occurring(int j, int sign) const {
        std::vector<int> vars;
        for (int lit : clauses.at(static_cast<std::size_t>(j)))
            if ((sign > 0) == (lit > 0)) vars.push_back(std::abs(lit));
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }
};

} // namespace rsys
