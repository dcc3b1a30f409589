#include "rainbow/proof_finder.hpp"

#include "rainbow/minimality.hpp"
#include "rainbow/rainbow_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rainbow {

std::string to_string(ProofCase c) {
    switch (c) {
    case ProofCase::case1:
        return "case1";
    case ProofCase::case2a:
        return "case2a";
    case ProofCase::case2b:
        return "case2b";
    case ProofCase::degenerate:
        return "degenerate";
    }
    return "unknown";
}

std::string to_string(FinderOutcome o) {
    switch (o) {
    case FinderOutcome::found_by_proof:
        return "found_by_proof";
    case FinderOutcome::found_by_fallback:
        return "found_by_fallback";
    case FinderOutcome::exhausted:
        return "exhausted";
    case FinderOutcome::hypothesis_violation:
        return "hypothesis_violation";
    }
    return "unknown";
}

namespace {

/// First edge of G[X] (in sorted order) whose color is not zeta.
std::optional<std::pair<Vertex, Vertex>> find_e0(const EdgeColoredGraph &g, const std::vector<char> &in_x,
                                                 std::span<const Vertex> xs, Color zeta) {
    for (auto x : xs) {
        for (const auto &nb : g.neighbors(x)) {
            if (nb.vertex > x && in_x[nb.vertex] && nb.color != zeta) {
                return std::make_pair(x, nb.vertex);
            }
        }
    }
    return std::nullopt;
}

bool contains(const std::vector<std::uint32_t> &vs, std::uint32_t v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

std::optional<RainbowWitness> run_case1(const EdgeColoredGraph &h, FinderTrace &trace, const FinderOptions &options) {
    const auto z = trace.z;
    auto x_plus = trace.x_set;
    for (auto y : h.alpha_neighborhood(z, trace.zeta)) {
        x_plus.push_back(y);
    }
    std::sort(x_plus.begin(), x_plus.end());
    x_plus.erase(std::unique(x_plus.begin(), x_plus.end()), x_plus.end());
    trace.x_plus_size = x_plus.size();
    trace.c_rep = repeating_colors(h, z, x_plus);

    // |E_F| >= |X+| (delta^c - 1)
    for (auto x : x_plus) {
        const auto cz = *h.edge_color(x, z);
        for (const auto &nb : h.neighbors(x)) {
            trace.f_arcs += nb.color != cz ? 1 : 0;
        }
    }
    trace.f_lower_bound = x_plus.size() * (trace.min_color_degree - 1);

    const auto reach = layered_reach(h, z, trace.c_rep, trace.ell - 1, {}, ReachMode::greedy);
    for (std::size_t i = 1; i <= reach.max_layer; ++i) {
        trace.layer_sizes.push_back(reach.layer(i).size());
    }
    if (options.record_sets) {
        trace.x_plus = x_plus;
    }
    return close_cycle_from_reach(h, z, x_plus, reach, trace.c_rep, trace.ell);
}

/// Tries to grow `path` alternately into Y_0 and X until it closes.
bool grow(const EdgeColoredGraph &h, const Case2Partition &part, std::size_t ell, GreedyPath &path,
          Case2Attempt &attempt) {
    auto side = ExtendSide::into_y0;
    while (path.vertices.size() < ell) {
        auto step = greedy_extend(h, part, path, side);
        attempt.steps.push_back(step);
        if (!step.chosen) {
            return false;
        }
        side = side == ExtendSide::into_y0 ? ExtendSide::into_x : ExtendSide::into_y0;
    }
    return true;
}

RainbowWitness close_path(const EdgeColoredGraph &h, const GreedyPath &path) {
    return make_witness(h, WitnessKind::cycle, path.vertices);
}

std::optional<RainbowWitness> run_case2(const EdgeColoredGraph &h, FinderTrace &trace, const FinderOptions &options) {
    const auto part = case2_partition(h, trace.z, trace.zeta, trace.x_set, trace.ell);
    trace.y_size = part.y.size();
    trace.y_h_size = part.y_h.size();
    trace.y_d_size = part.y_d.size();
    trace.y0_size = part.y0.size();
    trace.d_edges = part.d_edges.size();
    trace.h0_edges = part.h0_edges;
    trace.max_d_degree_x = part.max_d_degree_x;
    trace.y_h = part.y_h;
    trace.y_d = part.y_d;
    if (options.record_sets) {
        trace.y0 = part.y0;
    }

    const auto z = trace.z;
    const auto ell = trace.ell;
    const auto limit = options.max_case2_starts;
    auto budget_left = [&] { return limit == 0 || trace.attempts.size() < limit; };

    if (ell % 2 == 1) {
        trace.proof_case = ProofCase::case2a;
        for (auto y0 : h.alpha_neighborhood(z, trace.zeta)) {
            for (const auto &nb : h.neighbors(y0)) {
                const auto x1 = nb.vertex;
                if (!part.in_x[x1] || nb.color == trace.zeta ||
                    static_cast<std::int64_t>(nb.color) == part.color_to_z[x1]) {
                    continue;
                }
                if (!budget_left()) {
                    return std::nullopt;
                }
                GreedyPath path{{z, y0, x1}, {trace.zeta, nb.color}};
                Case2Attempt attempt{path.vertices, {}, false};
                if (grow(h, part, ell, path, attempt)) {
                    attempt.closed = true;
                    trace.attempts.push_back(std::move(attempt));
                    return close_path(h, path);
                }
                trace.attempts.push_back(std::move(attempt));
            }
        }
        return std::nullopt;
    }

    trace.proof_case = ProofCase::case2b;
    for (auto x1 : part.x_set) {
        if (!budget_left()) {
            return std::nullopt;
        }
        GreedyPath path{{z, x1}, {static_cast<Color>(part.color_to_z[x1])}};
        Case2Attempt attempt{path.vertices, {}, false};
        if (grow(h, part, ell, path, attempt)) {
            attempt.closed = true;
            trace.attempts.push_back(std::move(attempt));
            return close_path(h, path);
        }
        trace.attempts.push_back(std::move(attempt));
    }
    return std::nullopt;
}

} // namespace

Case2Partition case2_partition(const EdgeColoredGraph &g, Vertex z, Color zeta, std::span<const Vertex> x_set,
                               std::size_t ell) {
    const auto n = g.vertex_count();
    if (z >= n) {
        throw std::out_of_range("case2_partition: z out of range");
    }
    Case2Partition part;
    part.z = z;
    part.zeta = zeta;
    part.x_set.assign(x_set.begin(), x_set.end());
    std::sort(part.x_set.begin(), part.x_set.end());
    part.in_x = vertex_mask(n, part.x_set);
    part.color_to_z.assign(n, -1);
    for (auto x : part.x_set) {
        auto c = g.edge_color(z, x);
        if (!c) {
            throw PreconditionError("case2_partition: vertex " + std::to_string(x) + " of X is not adjacent to z");
        }
        part.color_to_z[x] = *c;
    }
    if (auto e0 = find_e0(g, part.in_x, part.x_set, zeta)) {
        throw PreconditionError("case2_partition: edge {" + std::to_string(e0->first) + "," +
                                std::to_string(e0->second) + "} inside X is not colored zeta; Case 1 applies");
    }

    for (Vertex v = 0; v < n; ++v) {
        if (v != z && !part.in_x[v]) {
            part.y.push_back(v);
        }
    }
    std::vector<std::size_t> d_degree(n, 0);
    for (auto x : part.x_set) {
        for (const auto &nb : g.neighbors(x)) {
            if (nb.vertex != z && !part.in_x[nb.vertex] && static_cast<std::int64_t>(nb.color) == part.color_to_z[x]) {
                part.d_edges.emplace_back(x, nb.vertex);
                ++d_degree[x];
                ++d_degree[nb.vertex];
            }
        }
    }
    for (auto x : part.x_set) {
        part.max_d_degree_x = std::max(part.max_d_degree_x, d_degree[x]);
    }
    part.in_y0.assign(n, 0);
    for (auto y : part.y) {
        const auto into_x = color_degree_within(g, y, part.x_set);
        const bool low = 2 * into_x <= 5 * ell;
        const bool doubled = d_degree[y] >= 2;
        if (low) {
            part.y_h.push_back(y);
        }
        if (doubled) {
            part.y_d.push_back(y);
        }
        if (!low && !doubled) {
            part.y0.push_back(y);
            part.in_y0[y] = 1;
        }
    }

    part.h0_color_degree.assign(n, 0);
    std::vector<std::set<Color>> colors(n);
    for (auto x : part.x_set) {
        for (const auto &nb : g.neighbors(x)) {
            if (part.h0_edge(x, nb.vertex, nb.color)) {
                ++part.h0_edges;
                colors[x].insert(nb.color);
                colors[nb.vertex].insert(nb.color);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        part.h0_color_degree[v] = colors[v].size();
    }
    return part;
}

ExtensionStep greedy_extend(const EdgeColoredGraph &g, const Case2Partition &part, GreedyPath &path,
                            ExtendSide side) {
    if (path.vertices.empty()) {
        throw PreconditionError("greedy_extend: empty path");
    }
    const auto tip = path.vertices.back();
    ExtensionStep step;
    step.side = side;
    step.path_vertices = path.vertices.size();

    const auto edges = static_cast<std::int64_t>(path.colors.size());
    std::int64_t same_side = 0;
    for (auto v : path.vertices) {
        same_side += side == ExtendSide::into_y0 ? part.in_y0[v] : part.in_x[v];
    }
    const auto deg = static_cast<std::int64_t>(part.h0_color_degree[tip]);
    step.lower_bound = side == ExtendSide::into_y0 ? deg - edges - same_side : deg - 2 * edges - same_side;

    std::set<Color> fresh;
    std::optional<std::pair<Vertex, Color>> first;
    for (const auto &nb : g.neighbors(tip)) {
        const auto w = nb.vertex;
        if (contains(path.vertices, w) || contains(path.colors, nb.color)) {
            continue;
        }
        if (side == ExtendSide::into_y0) {
            if (!part.h0_edge(tip, w, nb.color)) {
                continue;
            }
        } else {
            if (!part.h0_edge(w, tip, nb.color) || contains(path.colors, static_cast<Color>(part.color_to_z[w]))) {
                continue;
            }
        }
        ++step.feasible_vertices;
        fresh.insert(nb.color);
        if (!first) {
            first = std::make_pair(w, nb.color);
        }
    }
    step.feasible_colors = fresh.size();
    if (first) {
        step.chosen = first->first;
        path.vertices.push_back(first->first);
        path.colors.push_back(first->second);
    }
    return step;
}

std::pair<std::optional<RainbowWitness>, FinderTrace> find_rainbow_cycle(const EdgeColoredGraph &g, std::size_t ell,
                                                                         FinderOptions options) {
    if (ell < 3) {
        throw PreconditionError("find_rainbow_cycle: ell must be at least 3");
    }
    FinderTrace trace;
    trace.ell = ell;
    trace.n = g.vertex_count();
    trace.input_edges = g.edge_count();

    auto fallback = [&](std::optional<RainbowWitness> found) {
        if (found) {
            if (!is_rainbow_cycle(g, *found, ell)) {
                throw std::logic_error("proof finder built an invalid cycle: " + to_string(*found));
            }
            trace.outcome = FinderOutcome::found_by_proof;
        } else if (options.fallback && g.vertex_count() <= options.exact_cap) {
            found = find_rainbow_cycle_exact(g, ell);
            if (found) {
                trace.outcome = FinderOutcome::found_by_fallback;
            }
        }
        trace.witness = found;
        return std::make_pair(found, trace);
    };

    if (g.vertex_count() == 0 || g.edge_count() == 0) {
        trace.note = "graph has no edges";
        return fallback(std::nullopt);
    }
    const auto h = edge_minimal_reduce(g);
    trace.reduced_edges = h.edge_count();
    trace.min_color_degree = min_color_degree(h);
    if (trace.min_color_degree == 0) {
        trace.note = "isolated vertex";
        return fallback(std::nullopt);
    }
    const auto rep = replication(h);
    trace.replication = rep.r;
    trace.z = rep.vertex;
    trace.zeta = rep.color;
    trace.hypotheses_met = 2 * trace.min_color_degree >= trace.n + 1 && trace.n >= 432 * ell + 1;

    const auto want = trace.min_color_degree - 1;
    std::vector<Color> seen{rep.color};
    for (const auto &nb : h.neighbors(trace.z)) {
        if (trace.x_set.size() == want) {
            break;
        }
        if (!contains(seen, nb.color)) {
            seen.push_back(nb.color);
            trace.x_set.push_back(nb.vertex);
        }
    }
    if (trace.x_set.size() < want) {
        trace.note = "fewer than delta^c - 1 distinct colors besides zeta at z";
        auto result = fallback(std::nullopt);
        if (!result.first) {
            result.second.outcome = FinderOutcome::hypothesis_violation;
        }
        return result;
    }

    const auto in_x = vertex_mask(h.vertex_count(), trace.x_set);
    trace.e0 = find_e0(h, in_x, trace.x_set, trace.zeta);
    std::optional<RainbowWitness> found;
    if (ell > h.vertex_count()) {
        trace.note = "ell exceeds the vertex count";
    } else if (trace.e0) {
        trace.proof_case = ProofCase::case1;
        found = run_case1(h, trace, options);
    } else {
        found = run_case2(h, trace, options);
    }
    return fallback(found);
}

} // namespace rainbow
