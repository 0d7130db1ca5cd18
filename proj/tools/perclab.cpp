// perclab: simulation and verification toolkit for K_{2,t}-bootstrap
// percolation. One executable, one subcommand per task; graphs travel as
// edge-list text, results as JSON or CSV on stdout.
//
// Exit codes: 0 success, 1 domain failure (unverified witness, fact
// violations), 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "perclab/perclab.hpp"

using nlohmann::json;
using namespace perclab;

namespace {

constexpr const char* kSchema = "perclab/1";

Graph load_graph(const std::string& path) {
    if (path == "-")
        return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

json rational_json(const Rational& r) { return r.str(); }

json trace_json(const ClosureTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step;
        step["edge"] = {s.u, s.v};
        step["partner"] = s.partner;
        step["tset"] = s.tset;
        steps.push_back(std::move(step));
    }
    json out;
    out["schema"] = kSchema;
    out["steps"] = std::move(steps);
    if (trace.has_rounds) {
        json rounds = json::array();
        for (const auto& r : trace.rounds)
            rounds.push_back(r);
        out["rounds"] = std::move(rounds);
    }
    return out;
}

json threshold_json(const ThresholdEstimate& e) {
    json out;
    out["schema"] = kSchema;
    out["n"] = e.n;
    out["t"] = e.t;
    out["p_lo"] = e.p_lo;
    out["p_hi"] = e.p_hi;
    out["p_hat"] = e.p_hat;
    out["target_prob"] = e.target_prob;
    out["trials_per_step"] = e.trials_per_step;
    out["seed"] = e.seed;
    out["frac_lo"] = e.frac_lo;
    out["frac_hi"] = e.frac_hi;
    out["steps"] = e.steps;
    return out;
}

std::vector<std::string> gadget_comments(const std::string& kind, const LabeledGadget& gadget) {
    std::vector<std::string> comments{"perclab gadget kind=" + kind};
    for (std::size_t v = 0; v < gadget.roles.size(); ++v)
        comments.push_back("role " + std::to_string(v) + " " + gadget.roles[v].name());
    return comments;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int run_gadget(const std::string& kind, const std::vector<int>& params) {
    std::ostringstream err;
    if (kind == "fan") {
        if (params.size() != 2)
            throw CLI::ValidationError("--params", "fan expects r s");
        auto gadget = build_fan(params[0], params[1]);
        write_edge_list(std::cout, gadget.graph, gadget_comments(kind, gadget));
    } else if (kind == "ht") {
        if (params.size() != 1)
            throw CLI::ValidationError("--params", "ht expects t");
        auto gadget = build_ht(params[0]);
        write_edge_list(std::cout, gadget.graph, gadget_comments(kind, gadget));
    } else if (kind == "remark") {
        if (params.size() != 1)
            throw CLI::ValidationError("--params", "remark expects t");
        auto gadget = build_remark_gadget(params[0]);
        write_edge_list(std::cout, gadget.graph, gadget_comments(kind, gadget));
    } else if (kind == "kst") {
        if (params.size() != 2)
            throw CLI::ValidationError("--params", "kst expects a b");
        write_edge_list(std::cout, build_complete_bipartite(params[0], params[1]),
                        {"perclab gadget kind=kst"});
    } else if (kind == "split") {
        if (params.size() != 2)
            throw CLI::ValidationError("--params", "split expects i c");
        write_edge_list(std::cout, build_complete_split(params[0], params[1]),
                        {"perclab gadget kind=split"});
    } else {
        throw CLI::ValidationError("--kind", "unknown gadget kind '" + kind + "'");
    }
    return 0;
}

json witness_json_t4(const Graph& g, const FProcedureResult& proc, const Graph& gprime,
                     bool verified) {
    json comps = json::array();
    for (const auto& f : proc.components) {
        json c;
        c["vertices"] = f.vertices;
        json pairs = json::array();
        for (const auto& p : f.apairs)
            pairs.push_back({p[0], p[1]});
        c["apairs"] = std::move(pairs);
        c["bset"] = f.bset;
        c["l"] = f.ell;
        c["l_prime"] = f.ell_prime;
        c["loose_only_steps"] = f.loose_only_steps;
        comps.push_back(std::move(c));
    }
    json viols = json::array();
    for (const auto& v : proc.violations) {
        json jv;
        jv["which"] = FactViolation::name(v.which);
        jv["component"] = v.component;
        if (v.other_component >= 0)
            jv["other_component"] = v.other_component;
        jv["detail"] = v.detail;
        jv["subgraph"] = v.subgraph;
        VertexSet s(g.vertex_count());
        for (int x : v.subgraph)
            s.insert(x);
        jv["subgraph_density"] = Rational(count_induced_edges(g, s), s.count()).str();
        viols.push_back(std::move(jv));
    }
    json out;
    out["schema"] = kSchema;
    out["mode"] = "t4";
    out["components"] = std::move(comps);
    out["violations"] = std::move(viols);
    out["gprime_edges_added"] = gprime.edge_count() - g.edge_count();
    out["verified"] = verified;
    return out;
}

json witness_json_general(const Graph& g, const FamilyWitness& fam, bool verified) {
    json families = json::array();
    for (const auto& f : fam.families) {
        json jf;
        jf["side2"] = {f.side2[0], f.side2[1]};
        jf["side_t"] = f.side_t;
        families.push_back(std::move(jf));
    }
    json out;
    out["schema"] = kSchema;
    out["mode"] = "general";
    out["families"] = std::move(families);
    out["violations"] = json::array();
    out["gprime_edges_added"] = fam.gprime.edge_count() - g.edge_count();
    out["verified"] = verified;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_{2,t}-bootstrap percolation toolkit"};
    app.require_subcommand(1);
    int workers = default_workers();
    app.add_option("--workers", workers, "worker pool size (default: PERCLAB_WORKERS or cores)");

    // gadget
    auto* cmd_gadget = app.add_subcommand("gadget", "emit a gadget graph as an edge list");
    std::string gadget_kind;
    std::vector<int> gadget_params;
    cmd_gadget->add_option("--kind", gadget_kind, "fan|ht|remark|kst|split")->required();
    cmd_gadget->add_option("--params", gadget_params, "gadget parameters")->required();

    // close
    auto* cmd_close = app.add_subcommand("close", "compute the K_{2,t}-bootstrap closure");
    int close_t = 4;
    std::string close_in = "-";
    std::string close_trace;
    bool close_rounds = false;
    cmd_close->add_option("--t", close_t, "t of the K_{2,t} rule")->required()->check(CLI::Range(2, 1000));
    cmd_close->add_option("--in", close_in, "input edge list ('-' for stdin)");
    cmd_close->add_option("--trace", close_trace, "write the certificate trace to this JSON file");
    cmd_close->add_flag("--rounds", close_rounds, "round scheduler with round bookkeeping");

    // density
    auto* cmd_density = app.add_subcommand("density", "exact maximum subgraph density");
    std::string density_in = "-";
    std::string density_method = "auto";
    cmd_density->add_option("--in", density_in, "input edge list ('-' for stdin)");
    cmd_density->add_option("--method", density_method, "brute|flow (default: auto by size)")
        ->check(CLI::IsMember({"brute", "flow", "auto"}));

    // eta
    auto* cmd_eta = app.add_subcommand("eta", "closed-form maximum gadget density");
    int eta_t = 4;
    cmd_eta->add_option("--t", eta_t, "t >= 4")->required()->check(CLI::Range(4, 1000000));

    // seven
    auto* cmd_seven = app.add_subcommand("seven", "the seven candidate densities of the t-gadget");
    int seven_t = 4;
    std::string seven_format = "csv";
    cmd_seven->add_option("--t", seven_t, "t >= 4")->required()->check(CLI::Range(4, 1000));
    cmd_seven->add_option("--format", seven_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // witness
    auto* cmd_witness = app.add_subcommand("witness", "non-percolation witness construction");
    int witness_t = 4;
    std::string witness_in = "-";
    std::string witness_mode = "auto";
    cmd_witness->add_option("--t", witness_t, "t >= 4")->required()->check(CLI::Range(4, 1000));
    cmd_witness->add_option("--in", witness_in, "input edge list ('-' for stdin)");
    cmd_witness->add_option("--mode", witness_mode, "general|t4 (default: t4 when t=4)")
        ->check(CLI::IsMember({"general", "t4", "auto"}));

    // pc
    auto* cmd_pc = app.add_subcommand("pc", "bisection estimate of the percolation threshold");
    int pc_n = 0, pc_t = 4, pc_trials = 200;
    double pc_tol = 0.05, pc_target = 0.5;
    std::uint64_t pc_seed = 1;
    cmd_pc->add_option("--n", pc_n, "vertex count")->required()->check(CLI::PositiveNumber);
    cmd_pc->add_option("--t", pc_t, "t >= 4")->required()->check(CLI::Range(4, 1000));
    cmd_pc->add_option("--trials", pc_trials, "trials per bisection step")->check(CLI::PositiveNumber);
    cmd_pc->add_option("--tol", pc_tol, "relative bracket tolerance")->check(CLI::PositiveNumber);
    cmd_pc->add_option("--seed", pc_seed, "master seed");
    cmd_pc->add_option("--target", pc_target, "target percolation probability");

    // curve
    auto* cmd_curve = app.add_subcommand("curve", "percolation fraction across a probability grid");
    int curve_n = 0, curve_t = 4, curve_trials = 200;
    std::string curve_grid;
    std::string curve_format = "csv";
    std::uint64_t curve_seed = 1;
    cmd_curve->add_option("--n", curve_n, "vertex count")->required()->check(CLI::PositiveNumber);
    cmd_curve->add_option("--t", curve_t, "t >= 2")->required()->check(CLI::Range(2, 1000));
    cmd_curve->add_option("--pgrid", curve_grid, "lo:hi:steps (linear grid, inclusive)")->required();
    cmd_curve->add_option("--trials", curve_trials, "trials per grid point")->check(CLI::PositiveNumber);
    cmd_curve->add_option("--seed", curve_seed, "master seed");
    cmd_curve->add_option("--format", curve_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // exponent
    auto* cmd_exp = app.add_subcommand("exponent", "fit the threshold exponent across sizes");
    int exp_t = 4, exp_trials = 200;
    double exp_tol = 0.05;
    std::vector<int> exp_ns;
    std::uint64_t exp_seed = 1;
    cmd_exp->add_option("--t", exp_t, "t >= 4")->required()->check(CLI::Range(4, 1000));
    cmd_exp->add_option("--ns", exp_ns, "vertex counts (need >= 3)")->required()->delimiter(',');
    cmd_exp->add_option("--trials", exp_trials, "trials per bisection step")->check(CLI::PositiveNumber);
    cmd_exp->add_option("--tol", exp_tol, "relative bracket tolerance")->check(CLI::PositiveNumber);
    cmd_exp->add_option("--seed", exp_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gadget->parsed())
            return run_gadget(gadget_kind, gadget_params);

        if (cmd_close->parsed()) {
            Graph g = load_graph(close_in);
            auto result =
                close_k2t(g, close_t, close_rounds ? Scheduler::rounds : Scheduler::sequential);
            if (!close_trace.empty()) {
                std::ofstream out(close_trace);
                if (!out)
                    throw EdgeListError("cannot write '" + close_trace + "'");
                emit(out, trace_json(result.trace));
            }
            write_edge_list(std::cout, result.closure,
                            {"perclab closure t=" + std::to_string(close_t) +
                             " added=" + std::to_string(result.trace.steps.size())});
            return 0;
        }

        if (cmd_density->parsed()) {
            Graph g = load_graph(density_in);
            bool brute = density_method == "brute" ||
                         (density_method == "auto" && g.vertex_count() <= 26);
            DensityReport report = brute ? max_density_bruteforce(g) : max_density_flow(g);
            json out;
            out["schema"] = kSchema;
            out["value"] = rational_json(report.value);
            out["witness"] = report.witness.to_vector();
            out["method"] = report.method == DensityMethod::bruteforce ? "brute" : "flow";
            emit(std::cout, out);
            return 0;
        }

        if (cmd_eta->parsed()) {
            std::cout << eta(eta_t).str() << "\n";
            return 0;
        }

        if (cmd_seven->parsed()) {
            auto candidates = seven_candidate_densities(seven_t);
            if (seven_format == "json") {
                json rows = json::array();
                for (const auto& c : candidates) {
                    json row;
                    row["label"] = c.label;
                    row["size"] = c.set.count();
                    row["edges"] = c.edges;
                    row["density"] = c.value.str();
                    rows.push_back(std::move(row));
                }
                json out;
                out["schema"] = kSchema;
                out["t"] = seven_t;
                out["eta"] = eta(seven_t).str();
                out["candidates"] = std::move(rows);
                emit(std::cout, out);
            } else {
                std::cout << "label,size,edges,density\n";
                for (const auto& c : candidates)
                    std::cout << c.label << "," << c.set.count() << "," << c.edges << ","
                              << c.value.str() << "\n";
            }
            return 0;
        }

        if (cmd_witness->parsed()) {
            Graph g = load_graph(witness_in);
            if (witness_mode == "auto")
                witness_mode = witness_t == 4 ? "t4" : "general";
            if (witness_mode == "t4" && witness_t != 4)
                throw CLI::ValidationError("--mode", "t4 mode requires --t 4");
            json out;
            bool ok = false;
            if (witness_mode == "t4") {
                auto proc = f_procedure_t4(g);
                Graph gprime = gprime_t4(g, proc.components);
                bool verified = proc.clean() && verify_witness(g, 4, gprime);
                out = witness_json_t4(g, proc, gprime, verified);
                ok = verified;
            } else {
                auto fam = lower_witness(g, witness_t);
                bool verified = verify_witness(g, witness_t, fam.gprime);
                out = witness_json_general(g, fam, verified);
                ok = verified;
            }
            emit(std::cout, out);
            return ok ? 0 : 1;
        }

        if (cmd_pc->parsed()) {
            auto est = estimate_pc(pc_n, pc_t, pc_trials, pc_tol, pc_seed, workers, pc_target);
            emit(std::cout, threshold_json(est));
            return 0;
        }

        if (cmd_curve->parsed()) {
            double lo, hi;
            int steps;
            {
                std::istringstream gs(curve_grid);
                char c1, c2;
                if (!(gs >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' ||
                    steps < 1 || lo < 0 || hi > 1 || lo > hi)
                    throw CLI::ValidationError("--pgrid", "expected lo:hi:steps within [0,1]");
            }
            json rows = json::array();
            if (curve_format == "csv")
                std::cout << "p,fraction,ci_lo,ci_hi\n";
            for (int i = 0; i < steps; ++i) {
                double p = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
                TrialConfig cfg{curve_n, curve_t, p, curve_trials, curve_seed};
                auto f = percolation_probability(cfg, workers);
                if (curve_format == "csv") {
                    std::cout << p << "," << f.fraction << "," << f.ci_lo << "," << f.ci_hi
                              << "\n";
                } else {
                    json row;
                    row["p"] = p;
                    row["fraction"] = f.fraction;
                    row["ci_lo"] = f.ci_lo;
                    row["ci_hi"] = f.ci_hi;
                    rows.push_back(std::move(row));
                }
            }
            if (curve_format == "json") {
                json out;
                out["schema"] = kSchema;
                out["n"] = curve_n;
                out["t"] = curve_t;
                out["trials"] = curve_trials;
                out["seed"] = curve_seed;
                out["points"] = std::move(rows);
                emit(std::cout, out);
            }
            return 0;
        }

        if (cmd_exp->parsed()) {
            std::vector<ThresholdEstimate> estimates;
            for (std::size_t i = 0; i < exp_ns.size(); ++i)
                estimates.push_back(estimate_pc(exp_ns[i], exp_t, exp_trials, exp_tol,
                                                rng::at(exp_seed, i), workers));
            auto fit = fit_exponent(estimates);
            json pts = json::array();
            for (auto [n, p] : fit.points)
                pts.push_back({{"n", n}, {"p_hat", p}});
            json out;
            out["schema"] = kSchema;
            out["t"] = exp_t;
            out["points"] = std::move(pts);
            out["slope"] = fit.slope;
            out["intercept"] = fit.intercept;
            out["residual"] = fit.residual;
            out["bracket_upper_exponent"] = fit.bracket_upper_exponent.str();
            out["bracket_lower_exponent"] = fit.bracket_lower_exponent.str();
            emit(std::cout, out);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EdgeListError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
