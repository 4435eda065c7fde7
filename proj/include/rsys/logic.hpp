#pragma once

#include <optional>
#include <string>

#include "rsys/dynamics.hpp"
#include "rsys/encode.hpp"
#include "rsys/solve.hpp"

// Encode-solve-decode pipeline. Every witness a solver reports is
// re-validated by direct result evaluation before it is surfaced; a failed
// re-check raises internal_error rather than returning a wrong answer.

namespace rsys {

struct logic_answer {
    bool yes = false;
    std::optional<state> witness;          // reported for existential YES answers
    std::optional<state> witness_preimage; // preimage evidence where the mode has one
    std::optional<state> counterexample;   // reported for universal NO answers
};

namespace detail {

inline state read_group(const encoded_problem& p, const std::vector<bool>& model,
                        const std::string& name) {
    const var_group& g = p.group(name);
    state s(p.background_width);
    for (int k = 0; k < g.count; ++k)
        if (model[static_cast<std::size_t>(g.first + k - 1)]) s.set(static_cast<std::uint32_t>(k));
    return s;
}

inline void recheck_failed(const std::string& what) {
    throw internal_error("witness re-check failed: " + what);
}

/// Validates the decoded witness against direct evaluation. Parts that
/// would need a full state-space scan are checked only within the cap.
inline void recheck_witness(const encoded_problem& p, const reaction_system& a,
                            const reaction_system* b, const std::vector<bool>& model,
                            const std::optional<state>& given, const brute_options& opt) {
    const state t = read_group(p, model, "t");
    const bool deep = a.width() <= opt.cap_bits;
    switch (p.mode) {
        case encode_mode::exists_fixpoint:
            if (result(a, t) != t) recheck_failed("decoded state is not a fixed point");
            break;
        case encode_mode::given_state_attractor:
        case encode_mode::exists_attractor: {
            const state u = read_group(p, model, "u");
            if (p.mode == encode_mode::given_state_attractor && given && t != *given)
                recheck_failed("decoded state differs from the given state");
            if (result(a, t) != t) recheck_failed("decoded state is not a fixed point");
            if (u == t || result(a, u) != t) recheck_failed("decoded preimage does not reach the state");
            break;
        }
        case encode_mode::common_fixpoint:
            if (result(a, t) != t || result(*b, t) != t)
                recheck_failed("decoded state is not a common fixed point");
            break;
        case encode_mode::common_attractor: {
            const state u = read_group(p, model, "u");
            const state u2 = read_group(p, model, "u2");
            if (result(a, t) != t || result(*b, t) != t)
                recheck_failed("decoded state is not a common fixed point");
            if (u == t || result(a, u) != t) recheck_failed("first preimage does not reach the state");
            if (u2 == t || result(*b, u2) != t) recheck_failed("second preimage does not reach the state");
            break;
        }
        case encode_mode::res_eq_counterexample:
            if (result(a, t) == result(*b, t)) recheck_failed("results agree on the decoded state");
            break;
        case encode_mode::shared_fixpoints_counterexample:
            if ((result(a, t) == t) == (result(*b, t) == t))
                recheck_failed("decoded state does not separate the fixed-point sets");
            break;
        case encode_mode::exists_fixge:
            if (result(a, t) != t) recheck_failed("decoded state is not a fixed point");
            if (deep && is_attractor(a, t, opt)) recheck_failed("decoded fixed point is an attractor");
            break;
        case encode_mode::shared_attractors: {
            const state u = read_group(p, model, "u");
            const bool side_a = model[static_cast<std::size_t>(p.group("sel").first - 1)];
            const reaction_system& own = side_a ? a : *b;
            const reaction_system& other = side_a ? *b : a;
            if (result(own, t) != t) recheck_failed("claimed side does not fix the decoded state");
            if (u == t || result(own, u) != t)
                recheck_failed("claimed side has no preimage evidence for the decoded state");
            if (deep && is_attractor(other, t, opt))
                recheck_failed("decoded state is an attractor on both sides");
            break;
        }
    }
}

} // namespace detail

/// Turns a raw solver outcome into the answer of the encoded question,
/// re-checking any reported model first.
inline logic_answer interpret_solution(const encoded_problem& p, const reaction_system& a,
                                       const reaction_system* b, const solve_result& r,
                                       const std::optional<state>& given = std::nullopt,
                                       const brute_options& recheck = {}) {
    logic_answer ans;
    if (!r.satisfiable) {
        ans.yes = p.counterexample_polarity;
        return ans;
    }
    ans.yes = !p.counterexample_polarity;
    if (!r.has_model) return ans;
    detail::recheck_witness(p, a, b, r.model, given, recheck);
    const decoded_witness w = decode_witness(p, r.model);
    if (p.counterexample_polarity) {
        ans.counterexample = w.t;
    } else {
        ans.witness = w.t;
        ans.witness_preimage = w.u;
    }
    return ans;
}

/// One-call encode + solve + re-check. An empty solver command selects the
/// built-in reference solver.
inline logic_answer logic_decide(encode_mode mode, const reaction_system& a,
                                 const reaction_system* b = nullptr,
                                 const std::optional<state>& given = std::nullopt,
                                 const solve_options& sopts = {},
                                 const std::string& solver_command = "",
                                 reach_style style = reach_style::direct_difference,
                                 const brute_options& recheck = {}) {
    const encoded_problem p = encode_problem(mode, a, b, given, style);
    const solve_result r =
        solver_command.empty() ? solve_brute(p, sopts) : solve_external(p, solver_command);
    return interpret_solution(p, a, b, r, given, recheck);
}

} // namespace rsys
