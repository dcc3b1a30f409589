#pragma once

#include "rainbow/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

enum class ProbeInit { bipartite, random };

std::string to_string(ProbeInit init);
std::optional<ProbeInit> parse_probe_init(const std::string &text);

struct ProbeOptions {
    std::uint64_t budget = 100000;
    std::uint64_t seed = 0;
    ProbeInit init = ProbeInit::bipartite;
    std::size_t chains = 1;
    /// 0 means hardware concurrency.
    unsigned threads = 1;
    /// Ordinary recolor moves draw from {0, ..., palette_bound - 1}; 0 means n.
    std::size_t palette_bound = 0;
    /// Chance that a move uses a color absent from the whole graph.
    double fresh_probability = 0.02;
    double initial_temperature = 1.0;
    double final_temperature = 0.01;
    /// Jump back to the best state after this many steps without improvement; 0 disables.
    std::uint64_t restart_after = 10000;
    /// Full recount of the objective every this many steps.
    std::uint64_t cross_check_every = 1000;
};

/// (rainbow ell-cycle count, delta^c); a state is better when its count is
/// smaller, then when its delta^c is larger.
struct ProbeObjective {
    std::uint64_t rainbow_cycles = 0;
    std::size_t min_color_degree = 0;

    [[nodiscard]] bool feasible() const { return rainbow_cycles == 0; }
    [[nodiscard]] bool better_than(const ProbeObjective &o) const {
        if (rainbow_cycles != o.rainbow_cycles) {
            return rainbow_cycles < o.rainbow_cycles;
        }
        return min_color_degree > o.min_color_degree;
    }
    friend bool operator==(const ProbeObjective &, const ProbeObjective &) = default;
};

/// One annealing chain over a fixed host graph.
struct ProbeState {
    std::size_t ell = 3;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<Vertex, Vertex>> host;
    std::vector<Color> coloring;
    ProbeObjective objective;
    double temperature = 0.0;
    std::uint64_t steps = 0;
    std::uint64_t accepted = 0;
    std::uint64_t restarts = 0;
    std::uint64_t cross_checks = 0;

    /// Best state seen; `best_feasible` is false when no state was free of
    /// rainbow ell-cycles, in which case `best` is the least bad one.
    std::vector<Color> best_coloring;
    ProbeObjective best;
    bool best_feasible = false;

    [[nodiscard]] EdgeColoredGraph graph() const;
    [[nodiscard]] EdgeColoredGraph best_graph() const;
};

struct ProbeReport {
    std::size_t ell = 3;
    std::size_t n = 0;
    ProbeOptions options;
    std::vector<ProbeState> chains;
    std::size_t best_chain = 0;

    [[nodiscard]] const ProbeState &best() const { return chains.at(best_chain); }
};

/// Simulated annealing over recolorings of a host graph searching for a
/// coloring with large delta^c and no rainbow ell-cycle. The bipartite start
/// uses K_{floor(n/2), ceil(n/2)}, rainbow for odd ell; the random start uses
/// K_n with colors drawn from the palette bound. Chains are independent and
/// seeded from (seed, chain index), so results do not depend on threads.
ProbeReport probe_counterexample(std::size_t ell, std::size_t n, ProbeOptions options = {});

/// Rainbow ell-cycles through the host edge {u, v} if it had color c, i.e.
/// rainbow paths of ell - 1 edges from v back to u avoiding c. Exposed for tests.
std::uint64_t rainbow_cycles_through(const EdgeColoredGraph &g, Vertex u, Vertex v, Color c, std::size_t ell);

} // namespace rainbow
