#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsys/core.hpp"

namespace rsys {

/// Knobs for the exhaustive analyses. The cap bounds the exponent of the
/// state-space scan; partitions > 1 splits the scan into contiguous
/// ranges that may run concurrently and are merged in range order, so
/// the output never depends on the partition count.
struct brute_options {
    std::uint32_t cap_bits = 22;
    std::uint32_t partitions = 1;
};

namespace detail {

inline void check_cap(std::uint32_t bits, const brute_options& opt, const std::string& what) {
    // 62 is a hard ceiling: state indices must fit a 64-bit word
    if (bits > opt.cap_bits || bits > 62)
        throw capability_error(what + " needs a scan of 2^" + std::to_string(bits) +
                               " states, above the brute-force cap of " +
                               std::to_string(std::min<std::uint32_t>(opt.cap_bits, 62)) +
                               " bits; raise it with --cap or switch to the sat/qbf mode");
}

/// Runs body(lo, hi) over contiguous slices of [0, total) and returns the
/// per-slice results in slice order.
template <typename R, typename Body>
std::vector<R> run_partitioned(std::uint64_t total, std::uint32_t partitions, Body body) {
    if (partitions <= 1 || total < 2) return {body(std::uint64_t{0}, total)};
    const std::uint64_t n = std::min<std::uint64_t>(partitions, total);
    std::vector<std::future<R>> futures;
    futures.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t lo = total / n * k + std::min<std::uint64_t>(k, total % n);
        const std::uint64_t hi = total / n * (k + 1) + std::min<std::uint64_t>(k + 1, total % n);
        futures.push_back(std::async(std::launch::async, [=]() { return body(lo, hi); }));
    }
    std::vector<R> parts;
    parts.reserve(n);
    for (auto& f : futures) parts.push_back(f.get());
    return parts;
}

} // namespace detail

/// An orbit prefix: the states visited before the first repeat. When the
/// step budget runs out first, cycle_length is absent and the sequence is
/// the truncated prefix.
struct orbit_report {
    std::vector<state> sequence;
    std::uint32_t tail_length = 0;
    std::optional<std::uint32_t> cycle_length;
};

/// Iterates the result function from T until a state repeats or max_steps
/// applications have been made. With max_steps >= 2^|S| truncation is
/// impossible.
inline orbit_report orbit(const reaction_system& sys, const state& start, std::uint64_t max_steps) {
    if (max_steps < 1) throw usage_error("orbit requires max_steps >= 1");
    orbit_report rep;
    std::unordered_map<state, std::uint32_t, state_hash> seen;
    state cur = start;
    for (std::uint64_t step = 0;; ++step) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            rep.tail_length = it->second;
            rep.cycle_length = static_cast<std::uint32_t>(rep.sequence.size()) - it->second;
            return rep;
        }
        seen.emplace(cur, static_cast<std::uint32_t>(rep.sequence.size()));
        rep.sequence.push_back(cur);
        if (step == max_steps) {
            rep.tail_length = static_cast<std::uint32_t>(rep.sequence.size());
            return rep;
        }
        cur = result(sys, cur);
    }
}

inline bool is_fixed_point(const reaction_system& sys, const state& t) {
    return result(sys, t) == t;
}

/// All states U with result(U) = T, in ascending bit-pattern order.
inline std::vector<state> preimages(const reaction_system& sys, const state& t,
                                    const brute_options& opt = {}) {
    check_state_width(sys, t);
    detail::check_cap(sys.width(), opt, "preimages");
    const std::uint64_t total = std::uint64_t{1} << sys.width();
    auto parts = detail::run_partitioned<std::vector<state>>(
        total, opt.partitions, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<state> found;
            for (std::uint64_t v = lo; v < hi; ++v) {
                state u = state::from_index(sys.width(), v);
                if (result(sys, u) == t) found.push_back(std::move(u));
            }
            return found;
        });
    std::vector<state> out;
    for (auto& p : parts)
        for (auto& s : p) out.push_back(std::move(s));
    return out;
}

/// True iff T is a fixed point reachable from some state other than itself.
inline bool is_attractor(const reaction_system& sys, const state& t, const brute_options& opt = {}) {
    check_state_width(sys, t);
    detail::check_cap(sys.width(), opt, "is_attractor");
    if (!is_fixed_point(sys, t)) return false;
    const std::uint64_t total = std::uint64_t{1} << sys.width();
    const std::uint64_t self = t.to_index();
    for (std::uint64_t v = 0; v < total; ++v) {
        if (v == self) continue;
        if (result(sys, state::from_index(sys.width(), v)) == t) return true;
    }
    return false;
}

/// Complete classification of the fixed points of a system. For each
/// attractor the smallest witnessing preimage (other than the fixed point
/// itself) is retained.
struct fixed_point_report {
    std::vector<state> fixed_points;                   // ascending
    std::vector<bool> attractor;                       // parallel to fixed_points
    std::vector<std::optional<state>> attractor_witness;

    std::size_t count() const { return fixed_points.size(); }
    bool any_attractor() const {
        return std::find(attractor.begin(), attractor.end(), true) != attractor.end();
    }
    bool any_non_attractor() const {
        return std::find(attractor.begin(), attractor.end(), false) != attractor.end();
    }
};

inline fixed_point_report enumerate_fixed_points(const reaction_system& sys,
                                                 const brute_options& opt = {}) {
    detail::check_cap(sys.width(), opt, "enumerate_fixed_points");
    const std::uint64_t total = std::uint64_t{1} << sys.width();

    auto fp_parts = detail::run_partitioned<std::vector<std::uint64_t>>(
        total, opt.partitions, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::uint64_t> fps;
            for (std::uint64_t v = lo; v < hi; ++v) {
                state t = state::from_index(sys.width(), v);
                if (result(sys, t) == t) fps.push_back(v);
            }
            return fps;
        });
    std::vector<std::uint64_t> fps;
    for (auto& p : fp_parts) fps.insert(fps.end(), p.begin(), p.end());

    // Smallest non-trivial preimage per fixed point; ranges are scanned in
    // ascending order, so the first hit per range is already minimal there.
    using witness_map = std::vector<std::optional<std::uint64_t>>;
    auto wit_parts = detail::run_partitioned<witness_map>(
        total, opt.partitions, [&](std::uint64_t lo, std::uint64_t hi) {
            witness_map local(fps.size());
            for (std::uint64_t v = lo; v < hi; ++v) {
                const state u = state::from_index(sys.width(), v);
                const std::uint64_t r = result(sys, u).to_index();
                if (r == v) continue;
                auto it = std::lower_bound(fps.begin(), fps.end(), r);
                if (it != fps.end() && *it == r) {
                    auto& slot = local[static_cast<std::size_t>(it - fps.begin())];
                    if (!slot) slot = v;
                }
            }
            return local;
        });

    fixed_point_report rep;
    rep.fixed_points.reserve(fps.size());
    for (auto v : fps) rep.fixed_points.push_back(state::from_index(sys.width(), v));
    rep.attractor.assign(fps.size(), false);
    rep.attractor_witness.assign(fps.size(), std::nullopt);
    for (std::size_t i = 0; i < fps.size(); ++i) {
        for (const auto& part : wit_parts) {
            if (part[i]) {
                rep.attractor[i] = true;
                rep.attractor_witness[i] = state::from_index(sys.width(), *part[i]);
                break; // earlier ranges hold smaller indices
            }
        }
    }
    // Witnesses are re-checked here so a reported attractor is always backed
    // by a verified preimage.
    for (std::size_t i = 0; i < fps.size(); ++i) {
        if (!rep.attractor[i]) continue;
        const state& w = *rep.attractor_witness[i];
        if (w == rep.fixed_points[i] || result(sys, w) != rep.fixed_points[i])
            throw internal_error("attractor witness failed re-validation");
    }
    return rep;
}

enum class compare_mode {
    common_fixpoint,
    common_attractor,
    common_fixge,
    share_all_fixpoints,
    share_all_attractors,
    share_all_fixge,
    res_eq,
};

inline const char* to_string(compare_mode m) {
    switch (m) {
        case compare_mode::common_fixpoint: return "common-fixpoint";
        case compare_mode::common_attractor: return "common-attractor";
        case compare_mode::common_fixge: return "common-fixge";
        case compare_mode::share_all_fixpoints: return "shared-fixpoints";
        case compare_mode::share_all_attractors: return "shared-attractors";
        case compare_mode::share_all_fixge: return "shared-fixge";
        case compare_mode::res_eq: return "res-eq";
    }
    return "?";
}

inline std::optional<compare_mode> compare_mode_from_string(const std::string& s) {
    if (s == "common-fixpoint") return compare_mode::common_fixpoint;
    if (s == "common-attractor") return compare_mode::common_attractor;
    if (s == "common-fixge") return compare_mode::common_fixge;
    if (s == "shared-fixpoints" || s == "share-all-fixpoints") return compare_mode::share_all_fixpoints;
    if (s == "shared-attractors" || s == "share-all-attractors") return compare_mode::share_all_attractors;
    if (s == "shared-fixge" || s == "share-all-fixge") return compare_mode::share_all_fixge;
    if (s == "res-eq") return compare_mode::res_eq;
    return std::nullopt;
}

/// Verdict of a two-system analysis. Existential modes carry a witness on
/// YES; universal modes carry a counterexample on NO.
struct compare_verdict {
    bool yes = false;
    std::optional<state> witness;
    std::optional<state> counterexample;
};

namespace detail {

inline std::vector<state> filtered_fixed_points(const fixed_point_report& rep, bool want_attractor) {
    std::vector<state> out;
    for (std::size_t i = 0; i < rep.count(); ++i)
        if (rep.attractor[i] == want_attractor) out.push_back(rep.fixed_points[i]);
    return out;
}

inline compare_verdict compare_sets(const std::vector<state>& a, const std::vector<state>& b) {
    compare_verdict v;
    // Both lists are ascending; the smallest element of the symmetric
    // difference is the canonical counterexample.
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            ++i;
            ++j;
            continue;
        }
        v.yes = false;
        if (j >= b.size() || (i < a.size() && a[i] < b[j]))
            v.counterexample = a[i];
        else
            v.counterexample = b[j];
        return v;
    }
    v.yes = true;
    return v;
}

} // namespace detail

/// Exhaustive two-system analysis over a common background set.
inline compare_verdict shared_analysis(const reaction_system& a, const reaction_system& b,
                                       compare_mode mode, const brute_options& opt = {}) {
    if (a.entities() != b.entities())
        throw usage_error("shared_analysis requires a common background set");
    detail::check_cap(a.width(), opt, "shared_analysis");
    const std::uint64_t total = std::uint64_t{1} << a.width();
    compare_verdict v;

    switch (mode) {
        case compare_mode::res_eq: {
            auto parts = detail::run_partitioned<std::optional<std::uint64_t>>(
                total, opt.partitions, [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
                    for (std::uint64_t x = lo; x < hi; ++x) {
                        state t = state::from_index(a.width(), x);
                        if (result(a, t) != result(b, t)) return x;
                    }
                    return std::nullopt;
                });
            for (const auto& p : parts)
                if (p) {
                    v.yes = false;
                    v.counterexample = state::from_index(a.width(), *p);
                    return v;
                }
            v.yes = true;
            return v;
        }
        case compare_mode::common_fixpoint: {
            for (std::uint64_t x = 0; x < total; ++x) {
                state t = state::from_index(a.width(), x);
                if (result(a, t) == t && result(b, t) == t) {
                    v.yes = true;
                    v.witness = t;
                    return v;
                }
            }
            v.yes = false;
            return v;
        }
        case compare_mode::common_attractor:
        case compare_mode::common_fixge:
        case compare_mode::share_all_fixpoints:
        case compare_mode::share_all_attractors:
        case compare_mode::share_all_fixge: {
            const auto ra = enumerate_fixed_points(a, opt);
            const auto rb = enumerate_fixed_points(b, opt);
            const bool want_attr = mode == compare_mode::common_attractor ||
                                   mode == compare_mode::share_all_attractors;
            if (mode == compare_mode::share_all_fixpoints)
                return detail::compare_sets(ra.fixed_points, rb.fixed_points);
            if (mode == compare_mode::share_all_attractors || mode == compare_mode::share_all_fixge)
                return detail::compare_sets(detail::filtered_fixed_points(ra, want_attr),
                                            detail::filtered_fixed_points(rb, want_attr));
            // common-attractor / common-fixge: smallest state in both filtered sets
            const auto fa = detail::filtered_fixed_points(ra, want_attr);
            const auto fb = detail::filtered_fixed_points(rb, want_attr);
            std::size_t i = 0, j = 0;
            while (i < fa.size() && j < fb.size()) {
                if (fa[i] == fb[j]) {
                    v.yes = true;
                    v.witness = fa[i];
                    return v;
                }
                if (fa[i] < fb[j])
                    ++i;
                else
                    ++j;
            }
            v.yes = false;
            return v;
        }
    }
    return v;
}

/// One-bit-neighbour reachability test for a fixed point of a monotone
/// (inhibitorless) system: decides in O(|S|) result evaluations whether T
/// is reached from a strict subset or superset. Implies is_attractor but
/// is not equivalent to it.
inline bool local_attractor_check(const reaction_system& sys, const state& t) {
    if (!classify(sys).inhibitorless)
        throw usage_error("local_attractor_check requires an inhibitorless system");
    if (!is_fixed_point(sys, t))
        throw usage_error("local_attractor_check requires a fixed point");
    for (std::uint32_t x = 0; x < sys.width(); ++x) {
        state flipped = t;
        if (t.test(x))
            flipped.reset(x);
        else
            flipped.set(x);
        if (result(sys, flipped) == t) return true;
    }
    return false;
}

struct transition {
    state from;
    state to;
};

/// One outgoing edge per state: T -> result(T). With a restriction the
/// scan covers the subsets of `restrict` and projects results into it.
inline std::vector<transition> transition_graph(const reaction_system& sys,
                                                const std::optional<state>& restrict_to = std::nullopt,
                                                const brute_options& opt = {}) {
    std::vector<std::uint32_t> positions;
    if (restrict_to) {
        check_state_width(sys, *restrict_to);
        restrict_to->for_each_member([&](std::uint32_t i) { positions.push_back(i); });
    } else {
        positions.resize(sys.width());
        for (std::uint32_t i = 0; i < sys.width(); ++i) positions[i] = i;
    }
    detail::check_cap(static_cast<std::uint32_t>(positions.size()), opt, "transition_graph");

    std::vector<transition> edges;
    const std::uint64_t total = std::uint64_t{1} << positions.size();
    for (std::uint64_t v = 0; v < total; ++v) {
        state t(sys.width());
        for (std::size_t k = 0; k < positions.size(); ++k)
            if ((v >> k) & 1u) t.set(positions[k]);
        state r = result(sys, t);
        if (restrict_to) r &= *restrict_to;
        edges.push_back(transition{std::move(t), std::move(r)});
    }
    return edges;
}

} // namespace rsys
