#include "rainbow/probe.hpp"

#include "rainbow/parallel.hpp"
#include "rainbow/rainbow_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rainbow {

std::string to_string(ProbeInit init) { return init == ProbeInit::bipartite ? "bipartite" : "random"; }

std::optional<ProbeInit> parse_probe_init(const std::string &text) {
    if (text == "bipartite") {
        return ProbeInit::bipartite;
    }
    if (text == "random") {
        return ProbeInit::random;
    }
    return std::nullopt;
}

namespace {

constexpr std::size_t incremental_limit = 7;

struct Arc {
    Vertex to;
    std::uint32_t edge;
};

using Adjacency = std::vector<std::vector<Arc>>;

/// Counts rainbow paths of `edges_left` more edges ending at `target`; each
/// complete path is split by whether it avoids color a and color b.
class ThroughCounter {
public:
    ThroughCounter(const Adjacency &adj, const std::vector<Color> &coloring, std::size_t ell)
        : adj_(adj), coloring_(coloring), ell_(ell), on_path_(adj.size(), 0) {}

    std::pair<std::uint64_t, std::uint64_t> count(Vertex u, Vertex v, Color a, Color b) {
        a_ = a;
        b_ = b;
        target_ = u;
        avoid_a_ = 0;
        avoid_b_ = 0;
        on_path_[u] = 1;
        on_path_[v] = 1;
        colors_.clear();
        dfs(v, ell_ - 1);
        on_path_[u] = 0;
        on_path_[v] = 0;
        return {avoid_a_, avoid_b_};
    }

private:
    void dfs(Vertex at, std::size_t left) {
        for (const auto &arc : adj_[at]) {
            const auto c = coloring_[arc.edge];
            if (std::find(colors_.begin(), colors_.end(), c) != colors_.end()) {
                continue;
            }
            if (left == 1) {
                if (arc.to != target_) {
                    continue;
                }
                colors_.push_back(c);
                const bool has_a = std::find(colors_.begin(), colors_.end(), a_) != colors_.end();
                const bool has_b = std::find(colors_.begin(), colors_.end(), b_) != colors_.end();
                avoid_a_ += has_a ? 0 : 1;
                avoid_b_ += has_b ? 0 : 1;
                colors_.pop_back();
                continue;
            }
            if (on_path_[arc.to]) {
                continue;
            }
            on_path_[arc.to] = 1;
            colors_.push_back(c);
            dfs(arc.to, left - 1);
            colors_.pop_back();
            on_path_[arc.to] = 0;
        }
    }

    const Adjacency &adj_;
    const std::vector<Color> &coloring_;
    std::size_t ell_;
    std::vector<char> on_path_;
    std::vector<Color> colors_;
    Vertex target_ = 0;
    Color a_ = 0;
    Color b_ = 0;
    std::uint64_t avoid_a_ = 0;
    std::uint64_t avoid_b_ = 0;
};

EdgeColoredGraph to_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &host,
                          const std::vector<Color> &coloring) {
    std::vector<ColoredEdge> edges;
    edges.reserve(host.size());
    for (std::size_t i = 0; i < host.size(); ++i) {
        edges.push_back({host[i].first, host[i].second, coloring[i]});
    }
    return EdgeColoredGraph::build(n, std::move(edges));
}

class Chain {
public:
    Chain(std::size_t ell, std::size_t n, const ProbeOptions &options, std::size_t index)
        : options_(options), palette_bound_(options.palette_bound == 0 ? n : options.palette_bound) {
        state_.ell = ell;
        state_.n = n;
        state_.seed = options.seed + index;
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(index)};
        rng_.seed(seq);
        init_host();
        universe_ = std::max(state_.host.size(), palette_bound_) + 1;
        adj_.resize(n);
        for (std::uint32_t i = 0; i < state_.host.size(); ++i) {
            const auto [u, v] = state_.host[i];
            adj_[u].push_back({v, i});
            adj_[v].push_back({u, i});
        }
        rebuild();
        state_.best_coloring = state_.coloring;
        state_.best = state_.objective;
        state_.best_feasible = state_.best.feasible();
    }

    ProbeState run() {
        const auto budget = options_.budget;
        const double cooling =
            budget == 0 ? 1.0
                        : std::pow(options_.final_temperature / options_.initial_temperature, 1.0 / double(budget));
        state_.temperature = options_.initial_temperature;
        if (state_.host.empty()) {
            return state_;
        }
        std::uniform_int_distribution<std::size_t> pick_edge(0, state_.host.size() - 1);
        std::uniform_int_distribution<Color> pick_color(0, static_cast<Color>(palette_bound_ - 1));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        ThroughCounter through(adj_, state_.coloring, state_.ell);
        std::uint64_t last_improvement = 0;

        for (std::uint64_t step = 1; step <= budget; ++step) {
            state_.steps = step;
            const auto e = pick_edge(rng_);
            const auto old_color = state_.coloring[e];
            const auto new_color = unit(rng_) < options_.fresh_probability ? unused_color() : pick_color(rng_);
            if (new_color != old_color) {
                attempt(e, old_color, new_color, through, unit);
            }
            if (state_.objective.better_than(state_.best)) {
                state_.best = state_.objective;
                state_.best_coloring = state_.coloring;
                state_.best_feasible = state_.best.feasible();
                last_improvement = step;
            }
            if (options_.cross_check_every != 0 && step % options_.cross_check_every == 0) {
                cross_check();
            }
            if (options_.restart_after != 0 && step - last_improvement >= options_.restart_after) {
                state_.coloring = state_.best_coloring;
                rebuild();
                ++state_.restarts;
                last_improvement = step;
            }
            state_.temperature *= cooling;
        }
        return state_;
    }

private:
    void init_host() {
        const auto n = state_.n;
        std::vector<std::pair<Vertex, Vertex>> host;
        if (options_.init == ProbeInit::bipartite) {
            const auto a = n / 2;
            for (Vertex u = 0; u < a; ++u) {
                for (auto v = static_cast<Vertex>(a); v < n; ++v) {
                    host.emplace_back(u, v);
                }
            }
        } else {
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    host.emplace_back(u, v);
                }
            }
        }
        state_.host = std::move(host);
        state_.coloring.resize(state_.host.size());
        const bool rainbow_seed = options_.init == ProbeInit::bipartite && state_.ell % 2 == 1;
        std::uniform_int_distribution<Color> pick(0, static_cast<Color>(palette_bound_ - 1));
        for (std::size_t i = 0; i < state_.host.size(); ++i) {
            state_.coloring[i] = rainbow_seed ? static_cast<Color>(i) : pick(rng_);
        }
    }

    /// Recomputes every derived quantity from the coloring.
    void rebuild() {
        const auto n = state_.n;
        mult_.assign(n * universe_, 0);
        used_.assign(universe_, 0);
        cdeg_.assign(n, 0);
        for (std::size_t i = 0; i < state_.host.size(); ++i) {
            const auto [u, v] = state_.host[i];
            const auto c = state_.coloring[i];
            ++used_[c];
            cdeg_[u] += mult_[u * universe_ + c]++ == 0 ? 1 : 0;
            cdeg_[v] += mult_[v * universe_ + c]++ == 0 ? 1 : 0;
        }
        state_.objective = {full_count(), min_cdeg()};
    }

    std::uint64_t full_count() const {
        return count_rainbow_cycles(to_graph(state_.n, state_.host, state_.coloring), state_.ell);
    }

    std::size_t min_cdeg() const { return cdeg_.empty() ? 0 : *std::min_element(cdeg_.begin(), cdeg_.end()); }

    Color unused_color() const {
        for (Color c = 0; c < universe_; ++c) {
            if (used_[c] == 0) {
                return c;
            }
        }
        throw std::logic_error("probe: color universe exhausted");
    }

    void move_color(Vertex w, Color from, Color to) {
        cdeg_[w] -= --mult_[w * universe_ + from] == 0 ? 1 : 0;
        cdeg_[w] += mult_[w * universe_ + to]++ == 0 ? 1 : 0;
    }

    void recolor(std::size_t e, Color from, Color to) {
        const auto [u, v] = state_.host[e];
        move_color(u, from, to);
        move_color(v, from, to);
        --used_[from];
        ++used_[to];
        state_.coloring[e] = to;
    }

    double energy(const ProbeObjective &o) const {
        return double(o.rainbow_cycles) * double(state_.n + 1) + double(state_.n - o.min_color_degree);
    }

    template <typename Unit>
    void attempt(std::size_t e, Color old_color, Color new_color, ThroughCounter &through, Unit &unit) {
        const auto [u, v] = state_.host[e];
        std::uint64_t count = 0;
        if (state_.ell <= incremental_limit) {
            const auto [with_old, with_new] = through.count(u, v, old_color, new_color);
            count = state_.objective.rainbow_cycles - with_old + with_new;
            recolor(e, old_color, new_color);
        } else {
            recolor(e, old_color, new_color);
            count = full_count();
        }
        const ProbeObjective proposal{count, min_cdeg()};
        const double delta = energy(proposal) - energy(state_.objective);
        if (delta <= 0.0 || unit(rng_) < std::exp(-delta / state_.temperature)) {
            state_.objective = proposal;
            ++state_.accepted;
        } else {
            recolor(e, new_color, old_color);
        }
    }

    void cross_check() {
        ++state_.cross_checks;
        const auto g = to_graph(state_.n, state_.host, state_.coloring);
        const ProbeObjective fresh{count_rainbow_cycles(g, state_.ell), min_color_degree(g)};
        if (!(fresh == state_.objective)) {
            throw std::logic_error("probe: incremental objective (" + std::to_string(state_.objective.rainbow_cycles) +
                                   ", " + std::to_string(state_.objective.min_color_degree) +
                                   ") disagrees with recount (" + std::to_string(fresh.rainbow_cycles) + ", " +
                                   std::to_string(fresh.min_color_degree) + ") at step " +
                                   std::to_string(state_.steps));
        }
    }

    const ProbeOptions &options_;
    std::size_t palette_bound_;
    std::size_t universe_ = 0;
    std::mt19937_64 rng_;
    ProbeState state_;
    Adjacency adj_;
    std::vector<std::uint32_t> mult_;
    std::vector<std::uint32_t> used_;
    std::vector<std::size_t> cdeg_;
};

} // namespace

EdgeColoredGraph ProbeState::graph() const { return to_graph(n, host, coloring); }
EdgeColoredGraph ProbeState::best_graph() const { return to_graph(n, host, best_coloring); }

ProbeReport probe_counterexample(std::size_t ell, std::size_t n, ProbeOptions options) {
    if (ell < 3) {
        throw PreconditionError("probe: ell must be at least 3");
    }
    if (n < ell) {
        throw PreconditionError("probe: need n >= ell");
    }
    if (options.chains == 0) {
        throw PreconditionError("probe: need at least one chain");
    }
    if (options.final_temperature <= 0.0 || options.initial_temperature <= 0.0) {
        throw PreconditionError("probe: temperatures must be positive");
    }
    ProbeReport report;
    report.ell = ell;
    report.n = n;
    report.options = options;
    report.chains.resize(options.chains);
    parallel_for(options.chains, options.threads, [&](std::size_t i) {
        Chain chain(ell, n, options, i);
        report.chains[i] = chain.run();
    });
    for (std::size_t i = 1; i < report.chains.size(); ++i) {
        if (report.chains[i].best.better_than(report.chains[report.best_chain].best)) {
            report.best_chain = i;
        }
    }
    return report;
}

std::uint64_t rainbow_cycles_through(const EdgeColoredGraph &g, Vertex u, Vertex v, Color c, std::size_t ell) {
    if (ell < 3) {
        throw PreconditionError("rainbow_cycles_through: ell must be at least 3");
    }
    if (u >= g.vertex_count() || v >= g.vertex_count() || u == v) {
        throw PreconditionError("rainbow_cycles_through: need two distinct vertices");
    }
    Adjacency adj(g.vertex_count());
    std::vector<Color> coloring;
    for (const auto &e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(coloring.size());
        coloring.push_back(e.color);
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    ThroughCounter counter(adj, coloring, ell);
    return counter.count(u, v, c, c).first;
}

} // namespace rainbow
