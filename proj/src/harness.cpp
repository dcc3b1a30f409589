#include "rainbow/harness.hpp"

#include "rainbow/constructions.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/minimality.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/proof_finder.hpp"
#include "rainbow/rainbow_search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

namespace rainbow {

using nlohmann::json;

void Tally::add(Verdict v) {
    switch (v) {
    case Verdict::holds:
        ++pass;
        break;
    case Verdict::violated:
        ++fail;
        break;
    case Verdict::vacuous:
        ++vacuous;
        break;
    }
}

namespace {

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    return std::mt19937_64(seq);
}

std::size_t uniform(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

struct Draw {
    EdgeColoredGraph graph;
    json params;
    std::size_t rejections = 0;
};

/// A random graph with delta^c >= target; redraws while boosting is infeasible.
Draw boosted_draw(std::mt19937_64 &rng, std::size_t n, std::size_t target) {
    Draw d;
    for (;;) {
        const auto p = uniform_real(rng, 0.2, 0.95);
        const auto palette = uniform(rng, 1, std::max<std::size_t>(1, 2 * n));
        const auto graph_seed = rng();
        const auto boost_seed = rng();
        try {
            d.graph = boost_min_color_degree(random_colored_graph(n, p, palette, graph_seed), target, boost_seed);
            d.params = {{"n", n},           {"p", p},           {"palette", palette}, {"graph_seed", graph_seed},
                        {"target", target}, {"boost_seed", boost_seed}};
            return d;
        } catch (const InfeasibleTarget &) {
            if (++d.rejections > 100000) {
                throw std::runtime_error("boosted_draw: target " + std::to_string(target) + " unreachable at n = " +
                                         std::to_string(n));
            }
        }
    }
}

std::vector<Vertex> json_vertices(const json &j) { return j.get<std::vector<Vertex>>(); }

CheckResult vacuous(std::string why) { return {Verdict::vacuous, std::move(why)}; }

CheckResult from_bool(bool ok, std::string detail) {
    return {ok ? Verdict::holds : Verdict::violated, std::move(detail)};
}

std::size_t ell_of(const json &params) {
    const auto ell = params.at("ell").get<std::size_t>();
    if (ell < 3) {
        throw PreconditionError("ell must be at least 3");
    }
    return ell;
}

CheckResult check_reduction(const EdgeColoredGraph &g, const json &) {
    if (g.vertex_count() == 0) {
        return vacuous("empty graph");
    }
    const auto h = edge_minimal_reduce(g);
    if (min_color_degree(h) != min_color_degree(g)) {
        return from_bool(false, "delta^c changed");
    }
    for (const auto &e : h.edges()) {
        if (g.edge_color(e.u, e.v) != e.color) {
            return from_bool(false, "reduction invented an edge");
        }
    }
    if (!check_no_mono_3path(h)) {
        return from_bool(false, "monochromatic 3-edge path survived");
    }
    if (!is_edge_minimal(h)) {
        return from_bool(false, "some edge is still removable");
    }
    return from_bool(edge_minimal_reduce(h) == h, "reduce is idempotent");
}

CheckResult check_prop1(const EdgeColoredGraph &g, const json &params) {
    if (!check_no_mono_3path(g)) {
        return vacuous("not edge-minimal");
    }
    const auto x = json_vertices(params.at("x"));
    const auto y = json_vertices(params.at("y"));
    const auto rep = check_averaging_bound(g, params.at("v").get<Vertex>(), x, y);
    return from_bool(rep.holds, "sigma avg " + to_string(rep.sigma_average) + ", rho avg " +
                                    to_string(rep.rho_average) + ", bound " + to_string(rep.bound));
}

CheckResult check_d_bookkeeping(const EdgeColoredGraph &g, const json &params) {
    if (!check_no_mono_3path(g)) {
        return vacuous("not edge-minimal");
    }
    const auto x = json_vertices(params.at("x"));
    const auto y = json_vertices(params.at("y"));
    const auto rep = separation_report(g, params.at("v").get<Vertex>(), x, y);
    return from_bool(rep.d_tails_unique && rep.d_out_degree_ok,
                     "D arcs " + std::to_string(rep.d_arcs) + ", R " + std::to_string(rep.replication));
}

ReachMode reach_mode_for(const EdgeColoredGraph &g) {
    return g.vertex_count() <= ReachOptions{}.exact_cap ? ReachMode::exact : ReachMode::greedy;
}

CheckResult check_prop2(const EdgeColoredGraph &g, const json &params) {
    const auto cg = CertifiedGraph::certify(g, ell_of(params));
    if (!cg.edge_minimal() || !cg.rainbow_cycle_free()) {
        return vacuous("hypotheses fail");
    }
    const auto v = params.at("v").get<Vertex>();
    const auto x = json_vertices(params.at("x"));
    const auto c_rep = repeating_colors(g, v, x);
    const auto reach = layered_reach(g, v, c_rep, cg.ell() - 1, {}, reach_mode_for(g));
    std::vector<std::pair<Vertex, RainbowWitness>> paths(reach.layer(cg.ell() - 1).begin(),
                                                         reach.layer(cg.ell() - 1).end());
    if (paths.empty()) {
        return vacuous("no vertex at the last layer");
    }
    const auto records = check_sigma_cap(cg, v, x, c_rep, paths);
    std::size_t worst = 0;
    bool ok = true;
    for (const auto &r : records) {
        worst = std::max(worst, r.sigma);
        ok = ok && r.holds;
    }
    return from_bool(ok, "max sigma " + std::to_string(worst) + " over " + std::to_string(records.size()) +
                             " vertices, cap " + std::to_string(3 * cg.ell()));
}

CheckResult check_cor3(const EdgeColoredGraph &g, const json &params) {
    return check_replication_delta_bound(CertifiedGraph::certify(g, ell_of(params)), reach_mode_for(g));
}

CheckResult check_cor4(const EdgeColoredGraph &g, const json &params) {
    return check_delta_bound(CertifiedGraph::certify(g, ell_of(params)));
}

CheckResult check_cor5(const EdgeColoredGraph &g, const json &params) {
    const auto triangle = json_vertices(params.at("triangle"));
    const auto c_t = params.at("c_t").get<std::vector<Color>>();
    return check_triangle_reach_bound(CertifiedGraph::certify(g, ell_of(params)), triangle,
                                      params.at("v").get<Vertex>(), c_t, reach_mode_for(g));
}

CheckResult check_cor6(const EdgeColoredGraph &g, const json &params) {
    return check_maxdeg_bound(CertifiedGraph::certify(g, ell_of(params)));
}

FinderTrace finder_trace(const EdgeColoredGraph &g, std::size_t ell) {
    FinderOptions options;
    options.fallback = false;
    return find_rainbow_cycle(g, ell, options).second;
}

CheckResult check_claim(const EdgeColoredGraph &g, const json &params) {
    const auto cg = CertifiedGraph::certify(g, ell_of(params));
    if (!cg.edge_minimal() || !cg.rainbow_cycle_free()) {
        return vacuous("hypotheses fail");
    }
    if (2 * min_color_degree(g) < g.vertex_count() + 1) {
        return vacuous("delta^c below (n+1)/2");
    }
    const auto t = finder_trace(g, cg.ell());
    if (t.proof_case != ProofCase::case2a && t.proof_case != ProofCase::case2b) {
        return vacuous("Case 2 not entered");
    }
    const bool ok = t.y_h_size <= 11 * cg.ell() && 2 * t.y_d_size <= t.x_set.size() && t.max_d_degree_x <= 1;
    return from_bool(ok, "|Y_H| " + std::to_string(t.y_h_size) + ", |Y_D| " + std::to_string(t.y_d_size) +
                             ", |X| " + std::to_string(t.x_set.size()) + ", max deg_D(x) " +
                             std::to_string(t.max_d_degree_x));
}

CheckResult check_f_bound(const EdgeColoredGraph &g, const json &params) {
    const auto t = finder_trace(g, ell_of(params));
    if (t.proof_case != ProofCase::case1) {
        return vacuous("Case 1 not entered");
    }
    return from_bool(t.f_arcs >= t.f_lower_bound,
                     "|E_F| " + std::to_string(t.f_arcs) + " vs " + std::to_string(t.f_lower_bound));
}

CheckResult check_extension(const EdgeColoredGraph &g, const json &params) {
    const auto t = finder_trace(g, ell_of(params));
    std::size_t steps = 0;
    for (const auto &a : t.attempts) {
        for (const auto &s : a.steps) {
            ++steps;
            if (static_cast<std::int64_t>(s.feasible_colors) < s.lower_bound) {
                return from_bool(false, "step with " + std::to_string(s.feasible_colors) + " colors below " +
                                            std::to_string(s.lower_bound));
            }
        }
    }
    if (steps == 0) {
        return vacuous("no extension steps");
    }
    return from_bool(true, std::to_string(steps) + " steps");
}

CheckResult check_theorem(const EdgeColoredGraph &g, const json &params) {
    const auto ell = ell_of(params);
    const auto n = g.vertex_count();
    if (n < 3 || 2 * min_color_degree(g) < n + 1) {
        return vacuous("delta^c below (n+1)/2");
    }
    if (ell != 3 && n < 432 * ell + 1) {
        return vacuous("n below 432 ell + 1");
    }
    return from_bool(find_rainbow_cycle_exact(g, ell).has_value(), "exact search");
}

using CheckFn = std::function<CheckResult(const EdgeColoredGraph &, const json &)>;

const std::vector<std::pair<std::string, CheckFn>> &registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"reduction", check_reduction}, {"prop1", check_prop1}, {"d_bookkeeping", check_d_bookkeeping},
        {"prop2", check_prop2},         {"cor3", check_cor3},   {"cor4", check_cor4},
        {"cor5", check_cor5},           {"cor6", check_cor6},   {"claim", check_claim},
        {"f_bound", check_f_bound},     {"extension", check_extension}, {"theorem", check_theorem},
    };
    return checks;
}

std::vector<Vertex> random_subset(std::mt19937_64 &rng, std::span<const Vertex> from, double keep) {
    std::vector<Vertex> out;
    std::bernoulli_distribution coin(keep);
    for (auto v : from) {
        if (coin(rng)) {
            out.push_back(v);
        }
    }
    return out;
}

struct Outcome {
    std::string check;
    CheckResult result;
    std::optional<Reproducer> reproducer;
};

EdgeColoredGraph corpus_graph(std::mt19937_64 &rng, const PropertySuiteOptions &options) {
    const auto family = uniform(rng, 0, 19);
    const auto n = uniform(rng, options.n_min, options.n_max);
    if (family < 2 && n >= 4) {
        return rainbow_complete_bipartite(n / 2, n - n / 2);
    }
    if (family < 4 && options.n_max >= 5) {
        auto m = (uniform(rng, 5, std::max<std::size_t>(5, options.n_max)) - 1) / 2;
        m -= m % 2 == 0 ? 1 : 0;
        return matched_bipartite(std::max<std::size_t>(1, m));
    }
    const auto p = uniform_real(rng, 0.2, 0.95);
    const auto palette = uniform(rng, 2, 2 * n);
    auto g = random_colored_graph(n, p, palette, rng());
    if (family < 12) {
        const auto target = uniform(rng, 1, n - 1);
        const auto boost_seed = rng();
        try {
            g = boost_min_color_degree(g, target, boost_seed);
        } catch (const InfeasibleTarget &) {
        }
    }
    return g;
}

std::vector<Outcome> run_instance(std::uint64_t seed, std::size_t index, const PropertySuiteOptions &options) {
    auto rng = instance_rng(seed, index);
    const auto g = corpus_graph(rng, options);
    const auto h = edge_minimal_reduce(g);
    const auto n = h.vertex_count();
    std::vector<Outcome> out;

    auto run = [&](const std::string &name, const EdgeColoredGraph &graph, json params) {
        Outcome o{name, run_check(name, graph, params), std::nullopt};
        if (o.result.verdict == Verdict::violated) {
            o.reproducer = Reproducer{name, serialize_ecg(graph), std::move(params)};
        }
        out.push_back(std::move(o));
    };

    run("reduction", g, json::object());
    run("theorem", h, {{"ell", 3}});

    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    auto neighbors_of = [&](Vertex v) {
        std::vector<Vertex> nv;
        for (const auto &nb : h.neighbors(v)) {
            nv.push_back(nb.vertex);
        }
        return nv;
    };

    for (int rep = 0; rep < 2; ++rep) {
        const auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
        const auto x = random_subset(rng, neighbors_of(v), uniform_real(rng, 0.2, 1.0));
        std::vector<Vertex> others;
        for (auto w : all) {
            if (w != v) {
                others.push_back(w);
            }
        }
        auto y = random_subset(rng, others, uniform_real(rng, 0.2, 1.0));
        if (y.empty()) {
            y.push_back(others[uniform(rng, 0, others.size() - 1)]);
        }
        const json params{{"v", v}, {"x", x}, {"y", y}};
        run("prop1", h, params);
        run("d_bookkeeping", h, params);
    }

    std::vector<std::array<Vertex, 3>> triangles;
    for (const auto &e : h.edges()) {
        for (const auto &nb : h.neighbors(e.v)) {
            if (nb.vertex > e.v && h.adjacent(e.u, nb.vertex)) {
                triangles.push_back({e.u, e.v, nb.vertex});
            }
        }
    }

    for (std::size_t ell = 3; ell <= 5; ++ell) {
        const auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
        const auto x = random_subset(rng, neighbors_of(v), uniform_real(rng, 0.3, 1.0));
        run("prop2", h, {{"ell", ell}, {"v", v}, {"x", x}});
        const json base{{"ell", ell}};
        run("cor3", h, base);
        run("cor4", h, base);
        run("cor6", h, base);
        run("claim", h, base);
        run("f_bound", h, base);
        run("extension", h, base);
        if (!triangles.empty()) {
            const auto t = triangles[uniform(rng, 0, triangles.size() - 1)];
            const auto tv = t[uniform(rng, 0, 2)];
            std::vector<Color> tri_colors{*h.edge_color(t[0], t[1]), *h.edge_color(t[1], t[2]),
                                          *h.edge_color(t[0], t[2])};
            std::vector<Color> c_t;
            std::bernoulli_distribution coin(0.15);
            for (auto c : h.palette()) {
                if (std::find(tri_colors.begin(), tri_colors.end(), c) == tri_colors.end() && coin(rng)) {
                    c_t.push_back(c);
                }
            }
            run("cor5", h, {{"ell", ell}, {"triangle", t}, {"v", tv}, {"c_t", c_t}});
        }
    }
    return out;
}

} // namespace

const std::vector<std::string> &property_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

CheckResult run_check(const std::string &check, const EdgeColoredGraph &g, const json &params) {
    for (const auto &[name, fn] : registry()) {
        if (name == check) {
            return fn(g, params);
        }
    }
    throw PreconditionError("unknown check '" + check + "'");
}

CheckResult rerun(const Reproducer &r) { return run_check(r.check, parse_ecg(r.ecg), r.params); }

TheoremReport verify_theorem_small(std::size_t ell, std::size_t n_min, std::size_t n_max, std::size_t samples,
                                   std::uint64_t seed, unsigned threads) {
    if (ell < 3) {
        throw PreconditionError("verify_theorem_small: ell must be at least 3");
    }
    TheoremReport report;
    report.ell = ell;
    report.seed = seed;
    report.claim_applies = ell == 3;
    for (auto n = std::max<std::size_t>(n_min, 3); n <= n_max; ++n) {
        TheoremRow row;
        row.n = n;
        row.target = (n + 2) / 2;
        row.samples = samples;
        std::vector<Draw> draws(samples);
        std::vector<char> found(samples, 0);
        parallel_for(samples, threads, [&](std::size_t s) {
            auto rng = instance_rng(seed, n, s);
            draws[s] = boosted_draw(rng, n, row.target);
            found[s] = find_rainbow_cycle_exact(draws[s].graph, ell).has_value();
        });
        for (std::size_t s = 0; s < samples; ++s) {
            row.boost_rejections += draws[s].rejections;
            if (found[s]) {
                ++row.found;
            } else if (report.claim_applies) {
                auto params = draws[s].params;
                params["ell"] = ell;
                report.failures.push_back({"theorem", serialize_ecg(draws[s].graph), std::move(params)});
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

DeltaBoundReport verify_cor_deltabound(std::size_t ell, std::size_t n_max, std::size_t samples, std::uint64_t seed,
                                       unsigned threads, std::size_t exact_cap) {
    if (ell < 3) {
        throw PreconditionError("verify_cor_deltabound: ell must be at least 3");
    }
    if (n_max > exact_cap) {
        throw PreconditionError("verify_cor_deltabound: n_max " + std::to_string(n_max) +
                                " exceeds the exact-search cap " + std::to_string(exact_cap));
    }
    DeltaBoundReport report;
    report.ell = ell;
    report.seed = seed;
    for (auto n = std::max<std::size_t>(ell, 3); n <= n_max; ++n) {
        DeltaBoundRow row;
        row.n = n;
        std::vector<Verdict> verdicts(samples, Verdict::vacuous);
        std::vector<Draw> draws(samples);
        parallel_for(samples, threads, [&](std::size_t s) {
            auto rng = instance_rng(seed, n, s);
            const auto target = uniform(rng, (n + 2) / 2, n - 1);
            draws[s] = boosted_draw(rng, n, target);
            const auto delta = min_color_degree(draws[s].graph);
            if (2 * delta > n + 6 * ell) {
                verdicts[s] = find_rainbow_cycle_exact(draws[s].graph, ell) ? Verdict::holds : Verdict::violated;
            }
        });
        for (std::size_t s = 0; s < samples; ++s) {
            switch (verdicts[s]) {
            case Verdict::holds:
                ++row.checked;
                break;
            case Verdict::vacuous:
                ++row.vacuous;
                break;
            case Verdict::violated:
                ++row.checked;
                ++row.violations;
                auto params = draws[s].params;
                params["ell"] = ell;
                report.failures.push_back({"cor4", serialize_ecg(draws[s].graph), std::move(params)});
                break;
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

PropertyReport run_property_suite(std::uint64_t seed, PropertySuiteOptions options) {
    if (options.n_min < 3 || options.n_max < options.n_min) {
        throw PreconditionError("run_property_suite: need 3 <= n_min <= n_max");
    }
    PropertyReport report;
    report.seed = seed;
    report.instances = options.instances;
    for (const auto &name : property_check_names()) {
        report.tallies[name];
    }
    std::vector<std::vector<Outcome>> results(options.instances);
    parallel_for(options.instances, options.threads,
                 [&](std::size_t i) { results[i] = run_instance(seed, i, options); });
    for (auto &outcomes : results) {
        for (auto &o : outcomes) {
            report.tallies[o.check].add(o.result.verdict);
            if (o.reproducer) {
                report.failures.push_back(std::move(*o.reproducer));
            }
        }
    }
    return report;
}

} // namespace rainbow
