// One PASS/FAIL line per criterion; exit status 1 if any line fails.

#include "../oracles.hpp"

#include "rainbow/constructions.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/minimality.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/probe.hpp"
#include "rainbow/proof_finder.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/separation.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>

using namespace rainbow;

namespace {

constexpr unsigned kThreads = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::size_t draw(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double draw_real(std::mt19937_64 &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::mt19937_64 instance_rng(std::uint64_t salt, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(i),
                      static_cast<std::uint32_t>(i >> 32)};
    return std::mt19937_64(seq);
}

std::vector<Vertex> subset(std::mt19937_64 &rng, const std::vector<Vertex> &from, double keep) {
    std::bernoulli_distribution coin(keep);
    std::vector<Vertex> out;
    for (auto v : from) {
        if (coin(rng)) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> neighbors_of(const EdgeColoredGraph &g, Vertex v) {
    std::vector<Vertex> out;
    for (const auto &nb : g.neighbors(v)) {
        out.push_back(nb.vertex);
    }
    return out;
}

/// Random host for the property corpus: G(n, p) or a random bipartite graph,
/// colored from a palette of random size, then reduced.
EdgeColoredGraph corpus_graph(std::mt19937_64 &rng, std::size_t n_min, std::size_t n_max) {
    const auto n = draw(rng, n_min, n_max);
    const auto palette = draw(rng, 1, 2 * n);
    const auto p = draw_real(rng, 0.3, 1.0);
    EdgeColoredGraph g;
    if (rng() % 3 == 0) {
        std::vector<ColoredEdge> edges;
        const auto a = draw(rng, 1, n - 1);
        std::bernoulli_distribution coin(p);
        for (Vertex u = 0; u < a; ++u) {
            for (auto v = static_cast<Vertex>(a); v < n; ++v) {
                if (coin(rng)) {
                    edges.push_back({u, v, static_cast<Color>(draw(rng, 0, palette - 1))});
                }
            }
        }
        g = EdgeColoredGraph::build(n, std::move(edges));
    } else {
        g = oracle::random_graph(rng, n, p, palette);
    }
    return edge_minimal_reduce(g);
}

std::string seconds_since(std::chrono::steady_clock::time_point t0) {
    const auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << s << "s";
    return out.str();
}

// 1. Rainbow balanced complete bipartite graphs: delta^c = floor(n/2), no odd rainbow cycle.
Outcome sharpness() {
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (std::size_t ell : {3, 5, 7}) {
        for (std::size_t n = 6; n <= 40; ++n) {
            const auto g = rainbow_complete_bipartite(n / 2, n - n / 2);
            const auto delta = oracle::min_color_degree(oracle::Matrix(g));
            const auto w = find_rainbow_cycle_exact(g, ell, {kThreads});
            ++checked;
            if (delta != n / 2 || min_color_degree(g) != n / 2 || w) {
                bad.push_back("n=" + std::to_string(n) + " ell=" + std::to_string(ell));
            }
        }
    }
    return {bad.empty(), std::to_string(checked) + " (n, ell) pairs, " + std::to_string(bad.size()) + " failures" +
                             (bad.empty() ? "" : " first " + bad.front())};
}

// 2. Triangles above the threshold at n = 3..12.
Outcome theorem_small() {
    const auto report = verify_theorem_small(3, 3, 12, 1000, 20261016, kThreads);
    std::size_t samples = 0;
    std::size_t found = 0;
    std::size_t rejections = 0;
    for (const auto &row : report.rows) {
        samples += row.samples;
        found += row.found;
        rejections += row.boost_rejections;
    }
    return {report.passed() && found == samples && samples == 10000,
            std::to_string(found) + "/" + std::to_string(samples) + " found, " + std::to_string(rejections) +
                " infeasible boosts redrawn"};
}

// 3. Constructive finder at n above 432 ell + 1, no fallback.
Outcome theorem_scale() {
    struct Run {
        std::size_t ell;
        std::size_t n;
        std::size_t seeds;
    };
    std::size_t total = 0;
    std::atomic<std::size_t> ok{0};
    std::atomic<std::size_t> hypotheses{0};
    std::mutex mu;
    std::vector<std::string> bad;
    std::map<std::string, std::size_t> cases;
    for (const Run run : {Run{3, 1400, 50}, Run{5, 2200, 10}}) {
        const auto target = run.n / 2 + 1;
        parallel_for(run.seeds, kThreads, [&](std::size_t seed) {
            const auto base = random_colored_graph(run.n, 0.6, run.n, seed);
            const auto g = boost_min_color_degree(base, target, seed + 1);
            const auto [w, trace] = find_rainbow_cycle(g, run.ell, {.fallback = false});
            const bool good = min_color_degree(g) >= target && w && is_rainbow_cycle(g, *w, run.ell) &&
                              trace.outcome == FinderOutcome::found_by_proof;
            ok += good ? 1 : 0;
            hypotheses += trace.hypotheses_met ? 1 : 0;
            std::lock_guard lock(mu);
            ++cases["ell" + std::to_string(run.ell) + ":" + to_string(trace.proof_case)];
            if (!good) {
                bad.push_back("ell=" + std::to_string(run.ell) + " seed=" + std::to_string(seed));
            }
        });
        total += run.seeds;
    }
    std::string split;
    for (const auto &[k, v] : cases) {
        split += " " + k + "=" + std::to_string(v);
    }
    return {ok == total, std::to_string(ok.load()) + "/" + std::to_string(total) + " proved, hypotheses met on " +
                             std::to_string(hypotheses.load()) + ";" + split +
                             (bad.empty() ? "" : "; first failure " + bad.front())};
}

// 4. Averaging inequality on edge-minimal graphs, sums cross-checked by brute force.
Outcome averaging() {
    constexpr std::size_t instances = 10000;
    std::atomic<std::size_t> holds{0};
    std::atomic<std::size_t> sigma_ge_rho{0};
    std::atomic<std::size_t> oracle_agree{0};
    parallel_for(instances, kThreads, [&](std::size_t i) {
        auto rng = instance_rng(4, i);
        const auto h = corpus_graph(rng, 3, 14);
        const auto n = h.vertex_count();
        const auto v = static_cast<Vertex>(draw(rng, 0, n - 1));
        const auto x = subset(rng, neighbors_of(h, v), draw_real(rng, 0.2, 1.0));
        std::vector<Vertex> others;
        for (Vertex w = 0; w < n; ++w) {
            if (w != v) {
                others.push_back(w);
            }
        }
        auto y = subset(rng, others, draw_real(rng, 0.2, 1.0));
        if (y.empty()) {
            y.push_back(others[draw(rng, 0, others.size() - 1)]);
        }
        const auto rep = check_averaging_bound(h, v, x, y);
        holds += rep.rho_average >= rep.bound ? 1 : 0;
        sigma_ge_rho += rep.sigma_average >= rep.rho_average ? 1 : 0;
        const oracle::Matrix m(h);
        std::int64_t sigma = 0;
        std::int64_t rho = 0;
        for (auto yi : rep.y_set) {
            const auto [s, r] = oracle::sigma_rho(m, v, x, yi);
            sigma += static_cast<std::int64_t>(s);
            rho += static_cast<std::int64_t>(r);
        }
        oracle_agree += sigma == rep.sigma_sum && rho == rep.rho_sum ? 1 : 0;
    });
    return {holds == instances && sigma_ge_rho == instances && oracle_agree == instances,
            "bound " + std::to_string(holds.load()) + "/" + std::to_string(instances) + ", sigma>=rho " +
                std::to_string(sigma_ge_rho.load()) + ", brute-force sums agree " +
                std::to_string(oracle_agree.load())};
}

// 5. sigma <= 3 ell on certified rainbow-cycle-free instances.
Outcome sigma_cap() {
    constexpr std::size_t instances = 3000;
    std::atomic<std::size_t> certified{0};
    std::atomic<std::size_t> checked{0};
    std::atomic<std::size_t> violations{0};
    std::atomic<std::size_t> worst{0};
    parallel_for(instances, kThreads, [&](std::size_t i) {
        auto rng = instance_rng(5, i);
        const auto h = corpus_graph(rng, 4, 14);
        const auto n = h.vertex_count();
        for (std::size_t ell = 3; ell <= 5; ++ell) {
            const auto cg = CertifiedGraph::certify(h, ell);
            if (!cg.edge_minimal() || !cg.rainbow_cycle_free()) {
                continue;
            }
            ++certified;
            for (Vertex v = 0; v < n; ++v) {
                const auto nv = neighbors_of(h, v);
                std::vector<std::vector<Vertex>> xs{nv, subset(rng, nv, 0.5), subset(rng, nv, 0.8)};
                for (const auto &x : xs) {
                    const auto c_rep = repeating_colors(h, v, x);
                    const auto reach = layered_reach(h, v, c_rep, ell - 1, {}, ReachMode::exact);
                    const auto &layer = reach.layer(ell - 1);
                    std::vector<std::pair<Vertex, RainbowWitness>> paths(layer.begin(), layer.end());
                    for (const auto &r : check_sigma_cap(cg, v, x, c_rep, paths)) {
                        ++checked;
                        violations += r.holds ? 0 : 1;
                        auto seen = worst.load();
                        while (r.sigma > seen && !worst.compare_exchange_weak(seen, r.sigma)) {
                        }
                    }
                }
            }
        }
    });
    return {violations == 0 && certified > 0,
            std::to_string(certified.load()) + " certified (graph, ell), " + std::to_string(checked.load()) +
                " (v, X, y) triples, max sigma " + std::to_string(worst.load()) + ", " +
                std::to_string(violations.load()) + " violations"};
}

// 6. Reduction contract.
Outcome reduction() {
    constexpr std::size_t instances = 1000;
    std::atomic<std::size_t> ok{0};
    std::atomic<std::size_t> exhaustive{0};
    parallel_for(instances, kThreads, [&](std::size_t i) {
        auto rng = instance_rng(6, i);
        const auto n = draw(rng, 3, 30);
        const auto g = oracle::random_graph(rng, n, draw_real(rng, 0.1, 1.0), draw(rng, 1, 2 * n));
        const auto h = edge_minimal_reduce(g);
        const oracle::Matrix mh(h);
        bool good = oracle::min_color_degree(mh) == oracle::min_color_degree(oracle::Matrix(g));
        good = good && !oracle::has_mono_3path(mh) && check_no_mono_3path(h);
        for (const auto &e : h.edges()) {
            good = good && g.edge_color(e.u, e.v) == e.color;
        }
        if (h.edge_count() <= 200) {
            ++exhaustive;
            good = good && oracle::edge_minimal(h);
        } else {
            good = good && is_edge_minimal(h);
        }
        good = good && edge_minimal_reduce(h) == h;
        ok += good ? 1 : 0;
    });
    return {ok == instances, std::to_string(ok.load()) + "/" + std::to_string(instances) + " satisfy the contract, " +
                                 std::to_string(exhaustive.load()) + " checked by exhaustive deletion"};
}

// 7. Exact search against the all-permutations enumeration.
Outcome oracle_agreement() {
    constexpr std::size_t instances = 1000;
    std::atomic<std::size_t> ok{0};
    std::atomic<std::size_t> with_cycle{0};
    parallel_for(instances, kThreads, [&](std::size_t i) {
        auto rng = instance_rng(7, i);
        const auto n = draw(rng, 3, 9);
        const auto g = oracle::random_graph(rng, n, draw_real(rng, 0.3, 1.0), draw(rng, 2, 2 * n));
        const auto ell = draw(rng, 3, std::min<std::size_t>(n, 5));
        const auto expected = oracle::rainbow_cycle_count(oracle::Matrix(g), ell);
        const auto w = find_rainbow_cycle_exact(g, ell);
        const bool good = count_rainbow_cycles(g, ell) == expected && w.has_value() == (expected > 0) &&
                          (!w || is_rainbow_cycle(g, *w, ell));
        ok += good ? 1 : 0;
        with_cycle += expected > 0 ? 1 : 0;
    });
    return {ok == instances, std::to_string(ok.load()) + "/" + std::to_string(instances) + " agree (" +
                                 std::to_string(with_cycle.load()) + " with a cycle)"};
}

// 8. Annealing never beats the threshold for triangles.
Outcome probe() {
    bool pass = true;
    std::string detail;
    for (std::size_t n : {20, 30}) {
        std::size_t best[2] = {0, 0};
        for (auto init : {ProbeInit::bipartite, ProbeInit::random}) {
            ProbeOptions opt;
            opt.budget = 100000;
            opt.seed = 8;
            opt.init = init;
            opt.chains = 5;
            opt.threads = kThreads;
            const auto report = probe_counterexample(3, n, opt);
            auto &b = best[init == ProbeInit::bipartite ? 0 : 1];
            for (const auto &chain : report.chains) {
                if (chain.best_feasible) {
                    b = std::max(b, chain.best.min_color_degree);
                }
            }
        }
        const auto ceiling = (n + 2) / 2;
        pass = pass && best[0] == n / 2 && best[0] < ceiling && best[1] < ceiling;
        detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + " bipartite start " +
                  std::to_string(best[0]) + ", K_n start " + std::to_string(best[1]) + ", threshold " +
                  std::to_string(ceiling);
    }
    return {pass, detail};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"sharpness of the bipartite construction (exact)", sharpness},
        {"rainbow triangle above the threshold, n=3..12 (zero misses)", theorem_small},
        {"constructive finder at n=1400 and n=2200 (zero failures)", theorem_scale},
        {"averaging inequality, 10^4 instances (exact rationals)", averaging},
        {"separation cap sigma <= 3 ell (zero violations)", sigma_cap},
        {"reduction contract, 10^3 instances", reduction},
        {"exact search vs brute force, 10^3 instances (exact counts)", oracle_agreement},
        {"annealing probe stays below the threshold", probe},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += out.pass ? 0 : 1;
        std::printf("%s %zu %s: %s [%s]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    out.detail.c_str(), seconds_since(t0).c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
