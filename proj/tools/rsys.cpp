// Command-line front end: batch analyses, comparisons, gadget compilers,
// orbit and transition-graph dumps, and a DIMACS/QDIMACS solve utility.
//
// Exit codes: 0 run completed (verdict on stdout), 3 parse or usage error,
// 4 capability error (a cap would be exceeded), 5 internal re-check failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsys/rsys.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rsys::parse_error("cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rsys::parse_error("cannot write file " + path);
    out << text;
}

rsys::reaction_system load_system(const std::string& path) { return rsys::parse_system(read_file(path)); }

struct timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::string elapsed_ms() const {
        const auto dt = std::chrono::steady_clock::now() - start;
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        return std::to_string(ms);
    }
};

struct common_flags {
    std::uint32_t cap = 22;
    std::uint32_t partitions = 1;
    int solver_cap = 40;
    int qbf_cap = 24;
    std::string solver_cmd;
    std::string reach = "direct";

    void attach(CLI::App* cmd, bool with_solver) {
        cmd->add_option("--cap", cap, "brute-force cap on background bits (default 22)");
        cmd->add_option("--partitions", partitions, "parallel scan partitions (default 1)");
        if (with_solver) {
            cmd->add_option("--solver-cap", solver_cap, "variable cap of the built-in CNF solver");
            cmd->add_option("--qbf-cap", qbf_cap, "decision-block cap of the built-in QBF solver");
            cmd->add_option("--solver-cmd", solver_cmd,
                            "external solver command ({input} marks the file)");
            cmd->add_option("--reach", reach,
                            "encoding of 'reached from another state': direct | result-mismatch");
        }
    }

    rsys::brute_options brute() const { return rsys::brute_options{cap, partitions}; }
    rsys::solve_options solver() const { return rsys::solve_options{solver_cap, qbf_cap}; }
    rsys::reach_style reach_style() const {
        if (reach == "direct") return rsys::reach_style::direct_difference;
        if (reach == "result-mismatch") return rsys::reach_style::result_mismatch;
        throw rsys::usage_error("unknown reach encoding '" + reach + "'");
    }
};

rsys::logic_answer run_logic(rsys::encode_mode mode, const rsys::reaction_system& a,
                             const rsys::reaction_system* b, const std::optional<rsys::state>& given,
                             const common_flags& flags) {
    return rsys::logic_decide(mode, a, b, given, flags.solver(), flags.solver_cmd,
                              flags.reach_style(), flags.brute());
}

int cmd_analyze(const std::string& path, const std::string& problem, const std::string& state_text,
                const std::string& mode, const common_flags& flags) {
    const timer t;
    const auto sys = load_system(path);
    rsys::report rep;
    rep.metadata.push_back({"problem", problem});
    rep.metadata.push_back({"mode", mode});

    std::optional<rsys::state> given;
    if (problem == "given-attractor") {
        if (state_text.empty()) throw rsys::usage_error("given-attractor needs --state");
        given = rsys::parse_state(sys.entities(), state_text);
    }

    if (problem == "orbit") {
        if (state_text.empty()) throw rsys::usage_error("orbit needs --state");
        const auto start = rsys::parse_state(sys.entities(), state_text);
        const std::uint64_t steps =
            sys.width() >= 22 ? (std::uint64_t{1} << 22) + 1 : (std::uint64_t{1} << sys.width()) + 1;
        const auto ob = rsys::orbit(sys, start, steps);
        rep.yes = ob.cycle_length.has_value();
        rep.metadata.push_back({"tail", std::to_string(ob.tail_length)});
        if (ob.cycle_length) rep.metadata.push_back({"cycle", std::to_string(*ob.cycle_length)});
        rep.metadata.push_back({"elapsed_ms", t.elapsed_ms()});
        std::cout << rep.to_text();
        for (const auto& s : ob.sequence) std::cout << "  " << rsys::format_state(sys.entities(), s) << '\n';
        return 0;
    }

    std::vector<std::string> listing;
    if (mode == "brute") {
        rep.metadata.push_back({"cap", std::to_string(flags.cap)});
        if (problem == "given-attractor") {
            rep.yes = rsys::is_attractor(sys, *given, flags.brute());
        } else {
            const auto fp = rsys::enumerate_fixed_points(sys, flags.brute());
            if (problem == "fixpoints") {
                rep.yes = fp.count() > 0;
                for (std::size_t i = 0; i < fp.count(); ++i)
                    listing.push_back(rsys::format_state(sys.entities(), fp.fixed_points[i]) +
                                      (fp.attractor[i] ? " attractor" : " not-attractor"));
            } else if (problem == "attractors" || problem == "fixge") {
                const bool want = problem == "attractors";
                rep.yes = want ? fp.any_attractor() : fp.any_non_attractor();
                for (std::size_t i = 0; i < fp.count(); ++i)
                    if (fp.attractor[i] == want) {
                        if (!rep.witness)
                            rep.witness = rsys::format_state(sys.entities(), fp.fixed_points[i]);
                        listing.push_back(rsys::format_state(sys.entities(), fp.fixed_points[i]));
                    }
            } else {
                throw rsys::usage_error("unknown analyze problem '" + problem + "'");
            }
        }
    } else if (mode == "sat" || mode == "qbf") {
        rsys::encode_mode em;
        if (problem == "fixpoints")
            em = rsys::encode_mode::exists_fixpoint;
        else if (problem == "attractors")
            em = rsys::encode_mode::exists_attractor;
        else if (problem == "given-attractor")
            em = rsys::encode_mode::given_state_attractor;
        else if (problem == "fixge")
            em = rsys::encode_mode::exists_fixge;
        else
            throw rsys::usage_error("unknown analyze problem '" + problem + "'");
        const bool needs_qbf = em == rsys::encode_mode::exists_fixge;
        if (needs_qbf != (mode == "qbf"))
            throw rsys::usage_error(std::string("problem '") + problem + "' requires --mode " +
                                    (needs_qbf ? "qbf" : "sat"));
        const auto ans = run_logic(em, sys, nullptr, given, flags);
        rep.yes = ans.yes;
        if (ans.witness) rep.witness = rsys::format_state(sys.entities(), *ans.witness);
        if (ans.witness_preimage)
            rep.metadata.push_back(
                {"reached-from", rsys::format_state(sys.entities(), *ans.witness_preimage)});
    } else {
        throw rsys::usage_error("unknown mode '" + mode + "'");
    }
    rep.metadata.push_back({"elapsed_ms", t.elapsed_ms()});
    std::cout << rep.to_text();
    for (const auto& line : listing) std::cout << "  " << line << '\n';
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const std::string& problem,
                const std::string& mode, const common_flags& flags) {
    const timer t;
    const auto a = load_system(path_a);
    const auto b = load_system(path_b);
    const auto cm = rsys::compare_mode_from_string(problem);
    if (!cm) throw rsys::usage_error("unknown compare problem '" + problem + "'");

    rsys::report rep;
    rep.metadata.push_back({"problem", problem});

    if (mode == "brute") {
        // The result-function comparison has a polynomial route on the
        // constrained classes; take it when both systems qualify.
        if (*cm == rsys::compare_mode::res_eq) {
            const auto ca = rsys::classify(a);
            const auto cb = rsys::classify(b);
            if (ca.inhibitorless && cb.inhibitorless) {
                rep.yes = rsys::res_eq_inhibitorless(a, b);
                rep.metadata.push_back({"path", "polynomial-monotone"});
            } else if (ca.reactantless && cb.reactantless) {
                rep.yes = rsys::res_eq_reactantless(a, b);
                rep.metadata.push_back({"path", "polynomial-antitone"});
            } else {
                const auto v = rsys::shared_analysis(a, b, *cm, flags.brute());
                rep.yes = v.yes;
                if (v.counterexample)
                    rep.counterexample = rsys::format_state(a.entities(), *v.counterexample);
                rep.metadata.push_back({"path", "exhaustive"});
            }
            if (!rep.yes && !rep.counterexample) {
                // Polynomial route found an inequality; one of the critical
                // states disagrees, find it for the report.
                for (const auto& sys : {a, b}) {
                    for (const auto& r : sys.reactions()) {
                        const rsys::state critical = rsys::classify(a).inhibitorless
                                                         ? r.reactants
                                                         : r.inhibitors.complement();
                        if (rsys::result(a, critical) != rsys::result(b, critical)) {
                            rep.counterexample = rsys::format_state(a.entities(), critical);
                            break;
                        }
                    }
                    if (rep.counterexample) break;
                }
            }
        } else {
            rep.metadata.push_back({"mode", "brute"});
            rep.metadata.push_back({"cap", std::to_string(flags.cap)});
            const auto v = rsys::shared_analysis(a, b, *cm, flags.brute());
            rep.yes = v.yes;
            if (v.witness) rep.witness = rsys::format_state(a.entities(), *v.witness);
            if (v.counterexample)
                rep.counterexample = rsys::format_state(a.entities(), *v.counterexample);
        }
    } else if (mode == "sat" || mode == "qbf") {
        rep.metadata.push_back({"mode", mode});
        rsys::encode_mode em;
        switch (*cm) {
            case rsys::compare_mode::common_fixpoint: em = rsys::encode_mode::common_fixpoint; break;
            case rsys::compare_mode::common_attractor: em = rsys::encode_mode::common_attractor; break;
            case rsys::compare_mode::res_eq: em = rsys::encode_mode::res_eq_counterexample; break;
            case rsys::compare_mode::share_all_fixpoints:
                em = rsys::encode_mode::shared_fixpoints_counterexample;
                break;
            case rsys::compare_mode::share_all_attractors:
                em = rsys::encode_mode::shared_attractors;
                break;
            default:
                throw rsys::usage_error("problem '" + problem + "' is only available with --mode brute");
        }
        const bool needs_qbf = em == rsys::encode_mode::shared_attractors;
        if (needs_qbf != (mode == "qbf"))
            throw rsys::usage_error(std::string("problem '") + problem + "' requires --mode " +
                                    (needs_qbf ? "qbf" : "sat"));
        const auto ans = run_logic(em, a, &b, std::nullopt, flags);
        rep.yes = ans.yes;
        if (ans.witness) rep.witness = rsys::format_state(a.entities(), *ans.witness);
        if (ans.counterexample)
            rep.counterexample = rsys::format_state(a.entities(), *ans.counterexample);
    } else {
        throw rsys::usage_error("unknown mode '" + mode + "'");
    }
    rep.metadata.push_back({"elapsed_ms", t.elapsed_ms()});
    std::cout << rep.to_text();
    return 0;
}

int cmd_bijective(const std::string& path) {
    const timer t;
    const auto sys = load_system(path);
    const auto rc = rsys::classify(sys);
    rsys::report rep;
    if (rc.inhibitorless) {
        const auto b = rsys::bijective_inhibitorless(sys);
        rep.yes = b.bijective;
        rep.metadata.push_back({"class", "inhibitorless"});
        if (!b.bijective) {
            rep.metadata.push_back({"failed_condition", std::to_string(b.failed_condition)});
            rep.metadata.push_back({"reason", b.detail});
        }
    } else if (rc.reactantless) {
        rep.yes = rsys::bijective_reactantless(sys);
        rep.metadata.push_back({"class", "reactantless"});
        if (!rep.yes) {
            const auto b = rsys::bijective_inhibitorless(rsys::complement_conjugate(sys));
            rep.metadata.push_back({"failed_condition", std::to_string(b.failed_condition)});
            rep.metadata.push_back({"reason", b.detail});
        }
    } else {
        throw rsys::usage_error(
            "bijective requires a reactantless or inhibitorless system; this one is neither");
    }
    rep.metadata.push_back({"elapsed_ms", t.elapsed_ms()});
    std::cout << rep.to_text();
    return 0;
}

int cmd_lfp(const std::string& path, bool greatest) {
    const timer t;
    const auto sys = load_system(path);
    const rsys::state fp = greatest ? rsys::gfp_monotone(sys) : rsys::lfp_monotone(sys);
    rsys::report rep;
    rep.yes = true;
    rep.witness = rsys::format_state(sys.entities(), fp);
    rep.metadata.push_back({"kind", greatest ? "greatest-fixed-point" : "least-fixed-point"});
    rep.metadata.push_back({"elapsed_ms", t.elapsed_ms()});
    std::cout << rep.to_text();
    return 0;
}

int cmd_reduce(const std::string& construction, const std::string& formula_path,
               const std::string& out_path, const std::string& variant) {
    const auto f = rsys::parse_formula(read_file(formula_path));
    const auto red = rsys::run_reduction(construction, f, variant);

    std::string out_b = out_path;
    if (auto dot = out_b.rfind('.'); dot != std::string::npos)
        out_b.insert(dot, ".b");
    else
        out_b += ".b";

    write_file(out_path, rsys::emit_system(red.system_a));
    json manifest;
    manifest["construction"] = construction;
    if (!variant.empty()) manifest["variant"] = variant;
    manifest["target_problem"] = red.target_problem;
    manifest["systems"] = json::array({out_path});
    if (red.system_b) {
        write_file(out_b, rsys::emit_system(*red.system_b));
        manifest["systems"].push_back(out_b);
    }
    if (red.distinguished_state) {
        json names = json::array();
        red.distinguished_state->for_each_member(
            [&](std::uint32_t i) { names.push_back(red.system_a.entities().name(i)); });
        manifest["distinguished_state"] = names;
    } else {
        manifest["distinguished_state"] = nullptr;
    }
    json decoder = json::object();
    for (std::size_t i = 0; i < red.decoder.assign_entity.size(); ++i)
        decoder[std::to_string(i + 1)] = red.system_a.entities().name(red.decoder.assign_entity[i]);
    manifest["decoder"] = decoder;
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");

    std::cout << "wrote: " << out_path << '\n';
    if (red.system_b) std::cout << "wrote: " << out_b << '\n';
    std::cout << "wrote: " << out_path << ".manifest.json" << '\n';
    std::cout << "target_problem: " << red.target_problem << '\n';
    return 0;
}

int cmd_orbit(const std::string& path, const std::string& init_text, std::uint64_t max_steps) {
    const auto sys = load_system(path);
    const auto start = rsys::parse_state(sys.entities(), init_text);
    const auto rep = rsys::orbit(sys, start, max_steps);
    for (const auto& s : rep.sequence) std::cout << rsys::format_state(sys.entities(), s) << '\n';
    std::cout << "tail: " << rep.tail_length << '\n';
    if (rep.cycle_length)
        std::cout << "cycle: " << *rep.cycle_length << '\n';
    else
        std::cout << "cycle: unknown (step budget exhausted)\n";
    return 0;
}

int cmd_graph(const std::string& path, const std::string& out_path, const std::string& restrict_text,
              bool force, const common_flags& flags) {
    const auto sys = load_system(path);
    std::optional<rsys::state> restrict_to;
    rsys::brute_options opt = flags.brute();
    if (!restrict_text.empty()) {
        restrict_to = rsys::parse_state(sys.entities(), restrict_text);
        if (!force) opt.cap_bits = std::min<std::uint32_t>(opt.cap_bits, 8);
    }
    const auto edges = rsys::transition_graph(sys, restrict_to, opt);
    const std::string dot = rsys::to_dot(sys, edges);
    if (out_path.empty() || out_path == "-")
        std::cout << dot;
    else
        write_file(out_path, dot);
    return 0;
}

// Generic DIMACS/QDIMACS input for the solve utility: clause list plus up
// to three quantifier blocks (exists, forall, exists).
int cmd_solve(const std::string& path, const common_flags& flags) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    int num_vars = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<std::vector<int>> blocks;
    std::vector<char> quants;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        if (head == "p") {
            std::string kind;
            int nc = 0;
            if (!(ls >> kind >> num_vars >> nc) || kind != "cnf")
                throw rsys::parse_error("line " + std::to_string(line_no) + ": bad header");
            continue;
        }
        if (head == "a" || head == "e") {
            if (!quants.empty() && quants.back() == head[0])
                throw rsys::parse_error("line " + std::to_string(line_no) + ": repeated block kind");
            quants.push_back(head[0]);
            blocks.emplace_back();
            int v;
            while (ls >> v && v != 0) blocks.back().push_back(v);
            continue;
        }
        std::vector<int> clause;
        int lit = std::stoi(head);
        while (lit != 0) {
            clause.push_back(lit);
            if (!(ls >> lit)) throw rsys::parse_error("line " + std::to_string(line_no) + ": clause not terminated");
        }
        clauses.push_back(std::move(clause));
    }
    if (num_vars < 0) throw rsys::parse_error("missing p header");
    if (quants.size() > 3 || (quants.size() == 3 && !(quants[0] == 'e' && quants[1] == 'a')))
        throw rsys::usage_error("only two quantifier alternations are supported");

    rsys::encoded_problem p;
    p.num_vars = num_vars;
    p.clauses = clauses;
    p.outer_clauses_end = p.defs_clauses_end = clauses.size();
    bool satisfiable;
    std::vector<bool> model;
    bool has_model = false;
    if (quants.empty() || (quants.size() == 1 && quants[0] == 'e')) {
        if (num_vars > flags.solver_cap)
            throw rsys::capability_error("problem has " + std::to_string(num_vars) +
                                         " variables, above the solver cap; raise --solver-cap");
        rsys::detail::dpll solver(num_vars);
        for (const auto& c : clauses) solver.add(c);
        auto m = solver.solve();
        satisfiable = m.has_value();
        if (m) {
            model = std::move(*m);
            has_model = true;
        }
    } else {
        // Enumerate the leading blocks, final existential block via search.
        std::vector<std::vector<int>> qb = blocks;
        std::vector<char> qk = quants;
        // drop a trailing existential block into the base solver
        if (qk.back() == 'e') {
            qb.pop_back();
            qk.pop_back();
        }
        for (const auto& blk : qb)
            if (static_cast<int>(blk.size()) > flags.qbf_cap)
                throw rsys::capability_error("quantifier block of " + std::to_string(blk.size()) +
                                             " variables is above the enumeration cap; raise --qbf-cap");
        std::function<bool(std::size_t, std::vector<int>&)> decide =
            [&](std::size_t level, std::vector<int>& units) -> bool {
            if (level == qk.size()) {
                rsys::detail::dpll solver(num_vars);
                for (const auto& c : clauses) solver.add(c);
                for (int u : units) solver.add_unit(u);
                return solver.solve().has_value();
            }
            const auto& blk = qb[level];
            const std::uint64_t total = std::uint64_t{1} << blk.size();
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                for (std::size_t k = 0; k < blk.size(); ++k)
                    units.push_back((mask >> k) & 1u ? blk[k] : -blk[k]);
                const bool sub = decide(level + 1, units);
                units.resize(units.size() - blk.size());
                if (qk[level] == 'e' && sub) return true;
                if (qk[level] == 'a' && !sub) return false;
            }
            return qk[level] == 'a';
        };
        std::vector<int> units;
        satisfiable = decide(0, units);
    }
    std::cout << (satisfiable ? "s SATISFIABLE" : "s UNSATISFIABLE") << '\n';
    if (has_model) {
        std::cout << "v";
        for (int v = 1; v <= num_vars; ++v)
            std::cout << ' ' << (model[static_cast<std::size_t>(v - 1)] ? v : -v);
        std::cout << " 0\n";
    }
    std::cout << "verdict: " << (satisfiable ? "YES" : "NO") << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reaction system analysis toolkit"};
    app.require_subcommand(1);

    std::string sys_path, sys_path_b, problem, state_text, mode = "brute", out_path, variant,
                restrict_text, init_text, construction, formula_path;
    bool greatest = false, force = false;
    std::uint64_t max_steps = 1u << 22;
    common_flags flags;

    auto* analyze = app.add_subcommand("analyze", "fixed points and attractors of one system");
    analyze->add_option("system", sys_path, "system file")->required();
    analyze->add_option("--problem", problem, "fixpoints | attractors | fixge | given-attractor | orbit")
        ->required();
    analyze->add_option("--state", state_text, "state argument for given-attractor and orbit");
    analyze->add_option("--mode", mode, "brute | sat | qbf (default brute)");
    flags.attach(analyze, true);

    auto* compare = app.add_subcommand("compare", "two-system analyses over a common background");
    compare->add_option("system_a", sys_path, "first system file")->required();
    compare->add_option("system_b", sys_path_b, "second system file")->required();
    compare
        ->add_option("--problem", problem,
                     "res-eq | common-fixpoint | common-attractor | common-fixge | "
                     "shared-fixpoints | shared-attractors | shared-fixge")
        ->required();
    compare->add_option("--mode", mode, "brute | sat | qbf (default brute)");
    flags.attach(compare, true);

    auto* bij = app.add_subcommand("bijective", "decide bijectivity of the result function");
    bij->add_option("system", sys_path, "system file")->required();

    auto* lfp = app.add_subcommand("lfp", "least fixed point of an inhibitorless system");
    lfp->add_option("system", sys_path, "system file")->required();
    lfp->add_flag("--greatest", greatest, "report the greatest fixed point instead");

    auto* reduce = app.add_subcommand("reduce", "compile a formula into a hardness gadget");
    reduce->add_option("construction", construction, "construction name")->required();
    reduce->add_option("formula", formula_path, "DIMACS-style formula file")->required();
    reduce->add_option("-o,--output", out_path, "output system file")->required();
    reduce->add_option("--variant", variant, "construction variant");

    auto* orbit_cmd = app.add_subcommand("orbit", "iterate the result function from a state");
    orbit_cmd->add_option("system", sys_path, "system file")->required();
    orbit_cmd->add_option("--init", init_text, "initial state (comma separated names, - for empty)")
        ->required();
    orbit_cmd->add_option("--max-steps", max_steps, "step budget (default 2^22)");

    auto* graph = app.add_subcommand("graph", "emit the transition graph as DOT");
    graph->add_option("system", sys_path, "system file")->required();
    graph->add_option("-o,--output", out_path, "output DOT file (- for stdout)");
    graph->add_option("--restrict", restrict_text, "restrict to subsets of this state");
    graph->add_flag("--force", force, "lift the 2^8 node cap on restricted graphs");
    flags.attach(graph, false);

    auto* solve = app.add_subcommand("solve", "solve a DIMACS/QDIMACS file with the built-in solver");
    solve->add_option("file", formula_path, "input file")->required();
    solve->add_option("--solver-cap", flags.solver_cap, "variable cap of the CNF search");
    solve->add_option("--qbf-cap", flags.qbf_cap, "enumeration cap per quantifier block");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(sys_path, problem, state_text, mode, flags);
        if (app.got_subcommand(compare))
            return cmd_compare(sys_path, sys_path_b, problem, mode, flags);
        if (app.got_subcommand(bij)) return cmd_bijective(sys_path);
        if (app.got_subcommand(lfp)) return cmd_lfp(sys_path, greatest);
        if (app.got_subcommand(reduce)) return cmd_reduce(construction, formula_path, out_path, variant);
        if (app.got_subcommand(orbit_cmd)) return cmd_orbit(sys_path, init_text, max_steps);
        if (app.got_subcommand(graph))
            return cmd_graph(sys_path, out_path, restrict_text, force, flags);
        if (app.got_subcommand(solve)) return cmd_solve(formula_path, flags);
    } catch (const rsys::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const rsys::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const rsys::capability_error& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 4;
    } catch (const rsys::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 5;
    }
    return 3;
}
