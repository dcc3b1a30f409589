// rainbow-kit: command-line front end for the rainbowkit library.

#include "rainbow/constructions.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/minimality.hpp"
#include "rainbow/probe.hpp"
#include "rainbow/proof_finder.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/report_json.hpp"
#include "rainbow/separation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace rainbow;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Global {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool json = false;
    std::string invocation;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<Vertex> read_vertex_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::vector<Vertex> out;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            out.push_back(static_cast<Vertex>(v));
        } catch (const std::exception &) {
            throw UsageError(path + ": '" + token + "' is not a vertex id");
        }
    }
    return out;
}

void emit_graph(const EdgeColoredGraph &g, const std::string &out) {
    if (out.empty()) {
        std::cout << serialize_ecg(g);
    } else {
        write_ecg_file(out, g);
    }
}

json envelope(const Global &global, json body) {
    body["schema_version"] = report_schema_version;
    body["invocation"] = global.invocation;
    return body;
}

void write_json(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

// --- gen ---------------------------------------------------------------------

void add_gen(CLI::App &app, Global &global, int &status) {
    auto *gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);

    auto *bip = gen->add_subcommand("bipartite", "Rainbow complete bipartite graph");
    static std::size_t a = 1, b = 1;
    static std::string bip_out;
    bip->add_option("--a", a, "Size of the first part")->required()->check(CLI::PositiveNumber);
    bip->add_option("--b", b, "Size of the second part")->required()->check(CLI::PositiveNumber);
    bip->add_option("-o,--output", bip_out, "Output .ecg file (default: stdout)");
    bip->callback([&] {
        emit_graph(rainbow_complete_bipartite(a, b), bip_out);
        status = exit_ok;
    });

    auto *rnd = gen->add_subcommand("random", "Random colored graph G(n, p)");
    static std::size_t n = 0, palette = 1, boost = 0;
    static double p = 0.5;
    static bool distinct = false;
    static std::string rnd_out;
    rnd->add_option("--n", n, "Vertex count")->required();
    rnd->add_option("--p", p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    rnd->add_option("--palette", palette, "Number of colors")->required()->check(CLI::PositiveNumber);
    rnd->add_option("--boost", boost, "Add fresh-colored edges until every color degree reaches this value");
    rnd->add_flag("--distinct", distinct, "Give every edge its own color");
    rnd->add_option("-o,--output", rnd_out, "Output .ecg file (default: stdout)");
    rnd->callback([&] {
        auto g = random_colored_graph(n, p, palette, global.seed, {distinct});
        if (boost > 0) {
            g = boost_min_color_degree(g, boost, global.seed + 1);
        }
        emit_graph(g, rnd_out);
        status = exit_ok;
    });
}

// --- reduce / stats ------------------------------------------------------------

void add_reduce(CLI::App &app, Global &, int &status) {
    auto *cmd = app.add_subcommand("reduce", "Edge-minimal spanning subgraph with the same minimum color degree");
    static std::string in, out;
    cmd->add_option("input", in, "Input .ecg file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", out, "Output .ecg file (default: stdout)");
    cmd->callback([&] {
        const auto g = read_ecg_file(in);
        const auto h = edge_minimal_reduce(g);
        std::cerr << "removed " << g.edge_count() - h.edge_count() << " of " << g.edge_count() << " edges\n";
        emit_graph(h, out);
        status = exit_ok;
    });
}

void add_stats(CLI::App &app, Global &global, int &status) {
    auto *cmd = app.add_subcommand("stats", "Color statistics, or separation numbers around an anchor");
    static std::string in, set_file, y_file, report;
    static std::optional<Vertex> anchor;
    cmd->add_option("input", in, "Input .ecg file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--anchor", anchor, "Anchor vertex v");
    cmd->add_option("--set-file", set_file, "File with the vertex set X (subset of N(v))");
    cmd->add_option("--y-file", y_file, "File with the vertex set Y (default: all vertices but v)");
    cmd->add_option("--report", report, "Write a JSON report to this file");
    cmd->callback([&] {
        const auto g = read_ecg_file(in);
        if (anchor) {
            if (set_file.empty()) {
                throw UsageError("--anchor needs --set-file");
            }
            if (!check_no_mono_3path(g)) {
                throw UsageError("graph is not edge-minimal (it has a monochromatic 3-edge path); run "
                                 "'rainbow-kit reduce' first");
            }
            const auto x = read_vertex_file(set_file);
            std::vector<Vertex> y;
            if (y_file.empty()) {
                for (Vertex w = 0; w < g.vertex_count(); ++w) {
                    if (w != *anchor) {
                        y.push_back(w);
                    }
                }
            } else {
                y = read_vertex_file(y_file);
            }
            const auto rep = check_averaging_bound(g, *anchor, x, y, global.threads);
            const auto j = envelope(global, to_json(rep));
            if (!report.empty()) {
                write_json(report, j);
            }
            if (global.json) {
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto &r : rep.records) {
                    std::cout << "y " << r.y << ": sigma " << r.sigma() << ", rho " << r.rho() << '\n';
                }
                std::cout << "average sigma " << to_string(rep.sigma_average) << ", average rho "
                          << to_string(rep.rho_average) << ", bound " << to_string(rep.bound) << '\n'
                          << (rep.holds ? "averaging bound holds\n" : "averaging bound VIOLATED\n");
            }
            status = rep.holds ? exit_ok : exit_violation;
            return;
        }
        json j{{"n", g.vertex_count()},
               {"m", g.edge_count()},
               {"palette", g.palette_size()},
               {"max_degree", g.max_degree()},
               {"min_color_degree", g.vertex_count() ? min_color_degree(g) : 0},
               {"replication", replication_number(g)},
               {"no_mono_3path", check_no_mono_3path(g)},
               {"edge_minimal", is_edge_minimal(g)}};
        j = envelope(global, std::move(j));
        if (!report.empty()) {
            write_json(report, j);
        }
        if (global.json) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "n " << j["n"] << ", m " << j["m"] << ", colors " << j["palette"] << '\n'
                      << "max degree " << j["max_degree"] << ", min color degree " << j["min_color_degree"]
                      << ", replication " << j["replication"] << '\n'
                      << "edge-minimal " << (j["edge_minimal"].get<bool>() ? "yes" : "no") << '\n';
        }
        status = exit_ok;
    });
}

// --- find / prove ----------------------------------------------------------------

void add_find(CLI::App &app, Global &global, int &status) {
    auto *cmd = app.add_subcommand("find", "Find a rainbow cycle of a given length");
    static std::string in;
    static std::size_t ell = 3;
    static bool exact = false, count = false;
    cmd->add_option("input", in, "Input .ecg file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--ell", ell, "Cycle length")->required()->check(CLI::Range(3, 1 << 20));
    cmd->add_flag("--exact", exact, "Use the exhaustive search instead of the constructive finder");
    cmd->add_flag("--count", count, "Count all rainbow cycles (exhaustive)");
    cmd->callback([&] {
        const auto g = read_ecg_file(in);
        if (count) {
            const auto total = count_rainbow_cycles(g, ell, {global.threads});
            if (global.json) {
                std::cout << envelope(global, {{"ell", ell}, {"count", total}}).dump(2) << '\n';
            } else {
                std::cout << total << '\n';
            }
            status = exit_ok;
            return;
        }
        std::optional<RainbowWitness> w;
        if (exact) {
            w = find_rainbow_cycle_exact(g, ell, {global.threads});
        } else {
            w = find_rainbow_cycle(g, ell).first;
        }
        if (global.json) {
            std::cout << envelope(global, {{"ell", ell}, {"witness", w ? to_json(*w) : json(nullptr)}}).dump(2)
                      << '\n';
        } else {
            std::cout << (w ? to_string(*w) : "no rainbow " + std::to_string(ell) + "-cycle found") << '\n';
        }
        status = w ? exit_ok : exit_violation;
    });
}

void add_prove(CLI::App &app, Global &global, int &status) {
    auto *cmd = app.add_subcommand("prove", "Build a rainbow cycle by following the case analysis");
    static std::string in, trace_out;
    static std::size_t ell = 3;
    static bool no_fallback = false, record_sets = false;
    static std::size_t exact_cap = FinderOptions{}.exact_cap;
    cmd->add_option("input", in, "Input .ecg file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--ell", ell, "Cycle length")->required()->check(CLI::Range(3, 1 << 20));
    cmd->add_option("--trace", trace_out, "Write the trace as JSON to this file");
    cmd->add_flag("--no-fallback", no_fallback, "Never fall back to the exhaustive search");
    cmd->add_flag("--record-sets", record_sets, "Keep the full vertex sets in the trace");
    cmd->add_option("--exact-cap", exact_cap, "Largest n for the exhaustive fallback")->capture_default_str();
    cmd->callback([&] {
        const auto g = read_ecg_file(in);
        FinderOptions options;
        options.fallback = !no_fallback;
        options.record_sets = record_sets;
        options.exact_cap = exact_cap;
        const auto [w, trace] = find_rainbow_cycle(g, ell, options);
        const auto j = envelope(global, to_json(trace));
        if (!trace_out.empty()) {
            write_json(trace_out, j);
        }
        if (global.json) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "case " << to_string(trace.proof_case) << ", outcome " << to_string(trace.outcome) << '\n';
            if (w) {
                std::cout << to_string(*w) << '\n';
            }
        }
        status = w ? exit_ok : exit_violation;
    });
}

// --- probe ---------------------------------------------------------------------

void add_probe(CLI::App &app, Global &global, int &status) {
    auto *cmd = app.add_subcommand("probe", "Anneal colorings looking for large color degree without rainbow cycles");
    static std::size_t ell = 3, n = 0;
    static std::string init = "bipartite", report, best_out;
    static ProbeOptions options;
    cmd->add_option("--ell", ell, "Cycle length")->required()->check(CLI::Range(3, 1 << 20));
    cmd->add_option("--n", n, "Vertex count")->required();
    cmd->add_option("--budget", options.budget, "Steps per chain")->capture_default_str();
    cmd->add_option("--chains", options.chains, "Independent chains")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--init", init, "Start: bipartite (rainbow K_{n/2,n/2} host) or random (K_n host)")->capture_default_str()
        ->check(CLI::IsMember({"bipartite", "random"}));
    cmd->add_option("--palette-bound", options.palette_bound, "Colors for ordinary moves (0 = n)")->capture_default_str();
    cmd->add_option("--fresh", options.fresh_probability, "Probability of a never-used color")->capture_default_str();
    cmd->add_option("--t0", options.initial_temperature, "Initial temperature")->capture_default_str();
    cmd->add_option("--t1", options.final_temperature, "Final temperature (geometric cooling)")->capture_default_str();
    cmd->add_option("--restart-after", options.restart_after, "Steps without improvement before restart")->capture_default_str();
    cmd->add_option("--report", report, "Write a JSON report to this file");
    cmd->add_option("-o,--output", best_out, "Write the best coloring as .ecg");
    cmd->callback([&] {
        options.seed = global.seed;
        options.threads = global.threads;
        options.init = *parse_probe_init(init);
        const auto result = probe_counterexample(ell, n, options);
        const auto j = envelope(global, to_json(result));
        if (!report.empty()) {
            write_json(report, j);
        }
        if (!best_out.empty()) {
            write_ecg_file(best_out, result.best().best_graph());
        }
        if (global.json) {
            std::cout << j.dump(2) << '\n';
        } else {
            const auto &best = result.best();
            std::cout << "best " << (best.best_feasible ? "feasible" : "infeasible") << " coloring: min color degree "
                      << best.best.min_color_degree << ", rainbow " << ell << "-cycles " << best.best.rainbow_cycles
                      << '\n';
        }
        status = exit_ok;
    });
}

// --- verify --------------------------------------------------------------------

void finish_verify(const Global &global, const json &body, const std::string &report, bool passed,
                   const std::string &summary, int &status) {
    const auto j = envelope(global, body);
    if (!report.empty()) {
        write_json(report, j);
    }
    if (global.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << summary << (passed ? "PASS\n" : "FAIL\n");
    }
    status = passed ? exit_ok : exit_violation;
}

void add_verify(CLI::App &app, Global &global, int &status) {
    auto *verify = app.add_subcommand("verify", "Run verification suites");
    verify->require_subcommand(1);
    static std::string report;
    verify->add_option("--report", report, "Write a JSON report to this file");

    auto *thm = verify->add_subcommand("theorem", "Exact search on random graphs above the (n+1)/2 threshold");
    static std::size_t t_ell = 3, t_min = 3, t_max = 12, t_samples = 100;
    thm->add_option("--ell", t_ell, "Cycle length")->capture_default_str()->check(CLI::Range(3, 1 << 20));
    thm->add_option("--n-min", t_min, "Smallest n")->capture_default_str();
    thm->add_option("--n-max", t_max, "Largest n")->capture_default_str();
    thm->add_option("--samples", t_samples, "Instances per n")->capture_default_str();
    thm->callback([&] {
        const auto r = verify_theorem_small(t_ell, t_min, t_max, t_samples, global.seed, global.threads);
        std::ostringstream s;
        for (const auto &row : r.rows) {
            s << "n " << row.n << ": " << row.found << "/" << row.samples << " contain a rainbow " << r.ell
              << "-cycle\n";
        }
        if (!r.claim_applies) {
            s << "(no guarantee at these sizes; report only) ";
        }
        finish_verify(global, to_json(r), report, r.passed(), s.str(), status);
    });

    auto *delta = verify->add_subcommand("deltabound", "Graphs with 2 delta^c > n + 6 ell contain a rainbow cycle");
    static std::size_t d_ell = 3, d_max = 16, d_samples = 100, d_cap = 16;
    delta->add_option("--ell", d_ell, "Cycle length")->capture_default_str()->check(CLI::Range(3, 1 << 20));
    delta->add_option("--n-max", d_max, "Largest n")->capture_default_str();
    delta->add_option("--samples", d_samples, "Instances per n")->capture_default_str();
    delta->add_option("--exact-cap", d_cap, "Largest n allowed for the exhaustive search")->capture_default_str();
    delta->callback([&] {
        const auto r = verify_cor_deltabound(d_ell, d_max, d_samples, global.seed, global.threads, d_cap);
        std::size_t checked = 0, vacuous = 0;
        for (const auto &row : r.rows) {
            checked += row.checked;
            vacuous += row.vacuous;
        }
        std::ostringstream s;
        s << checked << " checked, " << vacuous << " vacuous, " << r.failures.size() << " violations: ";
        finish_verify(global, to_json(r), report, r.passed(), s.str(), status);
    });

    auto *props = verify->add_subcommand("properties", "Inequality checks over a seeded corpus");
    static PropertySuiteOptions p_options;
    props->add_option("--instances", p_options.instances, "Corpus size")->capture_default_str();
    props->add_option("--n-min", p_options.n_min, "Smallest n")->capture_default_str();
    props->add_option("--n-max", p_options.n_max, "Largest n")->capture_default_str();
    props->callback([&] {
        p_options.threads = global.threads;
        const auto r = run_property_suite(global.seed, p_options);
        std::ostringstream s;
        for (const auto &[name, t] : r.tallies) {
            s << name << ": " << t.pass << " pass, " << t.fail << " fail, " << t.vacuous << " vacuous\n";
        }
        finish_verify(global, to_json(r), report, r.passed(), s.str(), status);
    });

    auto *again = verify->add_subcommand("rerun", "Re-run a reproducer taken from a report");
    static std::string repro_file;
    again->add_option("reproducer", repro_file, "JSON file holding one reproducer")->required()->check(
        CLI::ExistingFile);
    again->callback([&] {
        std::ifstream in(repro_file);
        const auto r = rerun(reproducer_from_json(json::parse(in)));
        const json body{{"verdict", to_string(r.verdict)}, {"detail", r.detail}};
        finish_verify(global, body, report, r.verdict != Verdict::violated,
                      to_string(r.verdict) + " (" + r.detail + "): ", status);
    });
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rainbow cycles in edge-colored graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rainbow-kit 1.0");
    Global global;
    for (int i = 0; i < argc; ++i) {
        global.invocation += (i ? " " : "") + std::string(argv[i]);
    }
    app.add_option("--seed", global.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_flag("--json", global.json, "Print JSON instead of text");
    // Global flags are accepted after the subcommand as well.
    app.fallthrough();

    int status = exit_ok;
    add_gen(app, global, status);
    add_reduce(app, global, status);
    add_stats(app, global, status);
    add_find(app, global, status);
    add_prove(app, global, status);
    add_probe(app, global, status);
    add_verify(app, global, status);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const EcgParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const GraphError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_violation;
    }
    return status;
}
