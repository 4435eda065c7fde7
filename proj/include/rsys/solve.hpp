#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

#include "rsys/encode.hpp"

namespace rsys {

struct solve_options {
    int cnf_var_cap = 40;   // DPLL search refuses larger propositional problems
    int qbf_enum_cap = 24;  // bound on the enumerated decision block of quantified problems
};

struct solve_result {
    bool satisfiable = false; // for quantified problems: the truth value
    bool has_model = false;
    std::vector<bool> model; // model[v-1] is the value of DIMACS variable v
};

namespace detail {

/// Plain DPLL with counter-based unit propagation. Branches on the lowest
/// unassigned variable, false first, so found models are reproducible.
class dpll {
public:
    explicit dpll(int nvars) : n_(nvars) {}

    void add(std::vector<int> clause) { cls_.push_back(std::move(clause)); }

    void add_unit(int lit) { cls_.push_back({lit}); }

    std::optional<std::vector<bool>> solve() {
        val_.assign(static_cast<std::size_t>(n_) + 1, 0);
        occ_.assign(static_cast<std::size_t>(n_) + 1, {});
        n_open_.assign(cls_.size(), 0);
        n_sat_.assign(cls_.size(), 0);
        trail_.clear();
        std::vector<std::pair<int, bool>> queue;
        for (std::size_t ci = 0; ci < cls_.size(); ++ci) {
            if (cls_[ci].empty()) return std::nullopt;
            n_open_[ci] = static_cast<int>(cls_[ci].size());
            for (int lit : cls_[ci]) occ_[static_cast<std::size_t>(std::abs(lit))].push_back(
                {static_cast<int>(ci), lit > 0});
            if (cls_[ci].size() == 1) queue.push_back({std::abs(cls_[ci][0]), cls_[ci][0] > 0});
        }
        if (!propagate(queue)) return std::nullopt;
        if (!search()) return std::nullopt;
        std::vector<bool> model(static_cast<std::size_t>(n_));
        for (int v = 1; v <= n_; ++v) model[static_cast<std::size_t>(v - 1)] = val_[static_cast<std::size_t>(v)] > 0;
        return model;
    }

private:
    bool apply(int var, bool value) {
        val_[static_cast<std::size_t>(var)] = value ? 1 : -1;
        trail_.push_back(var);
        for (auto [ci, positive] : occ_[static_cast<std::size_t>(var)]) {
            --n_open_[static_cast<std::size_t>(ci)];
            if (positive == value) ++n_sat_[static_cast<std::size_t>(ci)];
        }
        return true;
    }

    bool propagate(std::vector<std::pair<int, bool>>& queue) {
        while (!queue.empty()) {
            auto [var, value] = queue.back();
            queue.pop_back();
            const int cur = val_[static_cast<std::size_t>(var)];
            if (cur != 0) {
                if ((cur > 0) == value) continue;
                return false;
            }
            apply(var, value);
            for (auto [ci, positive] : occ_[static_cast<std::size_t>(var)]) {
                if (positive == value) continue; // literal satisfied, clause fine
                const auto c = static_cast<std::size_t>(ci);
                if (n_sat_[c] > 0) continue;
                if (n_open_[c] == 0) return false;
                if (n_open_[c] == 1) {
                    for (int lit : cls_[c]) {
                        if (val_[static_cast<std::size_t>(std::abs(lit))] == 0) {
                            queue.push_back({std::abs(lit), lit > 0});
                            break;
                        }
                    }
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const int var = trail_.back();
            trail_.pop_back();
            const bool value = val_[static_cast<std::size_t>(var)] > 0;
            for (auto [ci, positive] : occ_[static_cast<std::size_t>(var)]) {
                ++n_open_[static_cast<std::size_t>(ci)];
                if (positive == value) --n_sat_[static_cast<std::size_t>(ci)];
            }
            val_[static_cast<std::size_t>(var)] = 0;
        }
    }

    bool search() {
        // Branch only on variables that occur in some clause; anything else
        // cannot affect satisfaction and stays at its default value.
        int var = 0;
        for (int v = 1; v <= n_; ++v)
            if (val_[static_cast<std::size_t>(v)] == 0 && !occ_[static_cast<std::size_t>(v)].empty()) {
                var = v;
                break;
            }
        if (var == 0) return true;
        for (bool value : {false, true}) {
            const std::size_t mark = trail_.size();
            std::vector<std::pair<int, bool>> queue{{var, value}};
            if (propagate(queue) && search()) return true;
            undo_to(mark);
        }
        return false;
    }

    int n_;
    std::vector<std::vector<int>> cls_;
    std::vector<std::vector<std::pair<int, bool>>> occ_;
    std::vector<signed char> val_;
    std::vector<int> n_open_, n_sat_;
    std::vector<int> trail_;
};

} // namespace detail

/// Exact reference solver. Propositional problems go through DPLL search;
/// exists/forall problems enumerate models of the existential part and
/// refute each universal counterexample candidate by a nested DPLL call;
/// forall/exists problems enumerate the universal block.
inline solve_result solve_brute(const encoded_problem& p, const solve_options& opts = {}) {
    solve_result res;
    if (p.kind == encoded_problem::kind_t::cnf) {
        if (p.num_vars > opts.cnf_var_cap)
            throw capability_error("propositional problem has " + std::to_string(p.num_vars) +
                                   " variables, above the solver cap of " + std::to_string(opts.cnf_var_cap) +
                                   "; raise it with --solver-cap or use an external solver");
        detail::dpll solver(p.num_vars);
        for (const auto& c : p.clauses) solver.add(c);
        auto model = solver.solve();
        res.satisfiable = model.has_value();
        if (model) {
            res.has_model = true;
            res.model = std::move(*model);
        }
        return res;
    }

    if (p.kind == encoded_problem::kind_t::qbf_exists_forall) {
        // Existential variables the universal part can see. The verdict of
        // the universal check depends only on their values, so candidate
        // models are enumerated (and blocked) by this projection.
        std::vector<bool> is_exists(static_cast<std::size_t>(p.num_vars) + 1, false);
        for (int v : p.exists_vars) is_exists[static_cast<std::size_t>(v)] = true;
        std::vector<int> link;
        {
            std::vector<bool> seen(static_cast<std::size_t>(p.num_vars) + 1, false);
            for (std::size_t ci = p.outer_clauses_end; ci < p.clauses.size(); ++ci)
                for (int lit : p.clauses[ci]) {
                    const auto v = static_cast<std::size_t>(std::abs(lit));
                    if (is_exists[v] && !seen[v]) {
                        seen[v] = true;
                        link.push_back(std::abs(lit));
                    }
                }
        }
        if (static_cast<int>(link.size()) > opts.qbf_enum_cap)
            throw capability_error("quantified problem enumerates " + std::to_string(link.size()) +
                                   " linked variables, above the cap of " +
                                   std::to_string(opts.qbf_enum_cap) +
                                   "; raise it with --qbf-cap or use an external solver");

        std::vector<std::vector<int>> blocked;
        for (;;) {
            detail::dpll outer(p.num_vars);
            for (std::size_t ci = 0; ci < p.outer_clauses_end; ++ci) outer.add(p.clauses[ci]);
            for (const auto& c : blocked) outer.add(c);
            auto model = outer.solve();
            if (!model) {
                res.satisfiable = false;
                return res;
            }
            bool refuted = false;
            for (std::size_t gi = p.defs_clauses_end; gi < p.clauses.size() && !refuted; ++gi) {
                detail::dpll inner(p.num_vars);
                for (std::size_t ci = p.outer_clauses_end; ci < p.defs_clauses_end; ++ci)
                    inner.add(p.clauses[ci]);
                for (int v : link) inner.add_unit((*model)[static_cast<std::size_t>(v - 1)] ? v : -v);
                for (int lit : p.clauses[gi]) inner.add_unit(-lit);
                if (inner.solve()) refuted = true;
            }
            if (!refuted) {
                res.satisfiable = true;
                res.has_model = true;
                res.model = std::move(*model);
                return res;
            }
            std::vector<int> block;
            block.reserve(link.size());
            for (int v : link) block.push_back((*model)[static_cast<std::size_t>(v - 1)] ? -v : v);
            blocked.push_back(std::move(block));
        }
    }

    // forall/exists: true iff every universal assignment extends to a model.
    if (static_cast<int>(p.forall_vars.size()) > opts.qbf_enum_cap)
        throw capability_error("quantified problem enumerates " + std::to_string(p.forall_vars.size()) +
                               " universal variables, above the cap of " + std::to_string(opts.qbf_enum_cap));
    const std::uint64_t total = std::uint64_t{1} << p.forall_vars.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        detail::dpll solver(p.num_vars);
        for (const auto& c : p.clauses) solver.add(c);
        for (std::size_t k = 0; k < p.forall_vars.size(); ++k)
            solver.add_unit((mask >> k) & 1u ? p.forall_vars[k] : -p.forall_vars[k]);
        if (!solver.solve()) {
            res.satisfiable = false;
            res.has_model = true;
            res.model.assign(static_cast<std::size_t>(p.num_vars), false);
            for (std::size_t k = 0; k < p.forall_vars.size(); ++k)
                res.model[static_cast<std::size_t>(p.forall_vars[k] - 1)] = (mask >> k) & 1u;
            return res;
        }
    }
    res.satisfiable = true;
    return res;
}

namespace detail {

struct external_run {
    int exit_code = 0;
    std::string output;
};

inline external_run run_command(const std::string& command) {
    external_run r;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) throw parse_error("failed to launch solver command: " + command);
    char buf[4096];
    std::size_t got;
    while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    r.exit_code = ::pclose(pipe);
    return r;
}

inline std::string temp_problem_path(const char* extension) {
    static std::atomic<unsigned> counter{0};
    const auto dir = std::filesystem::temp_directory_path();
    return (dir / ("rsys_problem_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter.fetch_add(1)) + extension))
        .string();
}

} // namespace detail

/// Runs an external DIMACS/QDIMACS solver. The command template may name
/// the input file with the placeholder {input}; without a placeholder the
/// path is appended as the last argument. The solver's verdict line
/// ("s SATISFIABLE", "s cnf 1 ..." or bare SAT/UNSAT) and optional v-lines
/// are parsed; anything else is an error carrying the captured output.
inline solve_result solve_external(const encoded_problem& p, const std::string& command_template,
                                   bool keep_input = false) {
    const bool quantified = p.kind != encoded_problem::kind_t::cnf;
    const std::string path = detail::temp_problem_path(quantified ? ".qdimacs" : ".cnf");
    {
        std::string text = quantified ? to_qdimacs(p) : to_dimacs(p);
        FILE* f = std::fopen(path.c_str(), "w");
        if (!f) throw parse_error("cannot write solver input file " + path);
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    std::string command = command_template;
    const std::string placeholder = "{input}";
    if (auto at = command.find(placeholder); at != std::string::npos)
        command.replace(at, placeholder.size(), path);
    else
        command += " " + path;

    const auto run = detail::run_command(command);
    if (!keep_input) std::filesystem::remove(path);

    solve_result res;
    bool verdict_seen = false;
    std::vector<int> literals;
    std::istringstream lines(run.output);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "s") {
            std::string word;
            if (!(ls >> word)) continue;
            if (word == "SATISFIABLE" || word == "SAT") {
                res.satisfiable = true;
                verdict_seen = true;
            } else if (word == "UNSATISFIABLE" || word == "UNSAT") {
                res.satisfiable = false;
                verdict_seen = true;
            } else if (word == "cnf") {
                int truth = 0;
                if (ls >> truth) {
                    res.satisfiable = truth == 1;
                    verdict_seen = true;
                }
            }
        } else if (head == "v" || head == "V") {
            int lit;
            while (ls >> lit)
                if (lit != 0) literals.push_back(lit);
        } else if (head == "SAT" || head == "SATISFIABLE") {
            res.satisfiable = true;
            verdict_seen = true;
        } else if (head == "UNSAT" || head == "UNSATISFIABLE") {
            res.satisfiable = false;
            verdict_seen = true;
        }
    }
    if (!verdict_seen)
        throw parse_error("solver output has no recognizable verdict (command: " + command +
                          ", exit status " + std::to_string(run.exit_code) + "):\n" + run.output);
    if (res.satisfiable && !literals.empty()) {
        res.has_model = true;
        res.model.assign(static_cast<std::size_t>(p.num_vars), false);
        for (int lit : literals) {
            const int v = std::abs(lit);
            if (v >= 1 && v <= p.num_vars) res.model[static_cast<std::size_t>(v - 1)] = lit > 0;
        }
    }
    return res;
}

} // namespace rsys
