#include "rainbow/constructions.hpp"

#include <algorithm>
#include <random>

namespace rainbow {

EdgeColoredGraph rainbow_complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) {
        throw PreconditionError("rainbow_complete_bipartite: both parts must be nonempty");
    }
    std::vector<ColoredEdge> edges;
    edges.reserve(a * b);
    Color next = 0;
    for (std::size_t u = 0; u < a; ++u) {
        for (std::size_t v = a; v < a + b; ++v) {
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), next++});
        }
    }
    return EdgeColoredGraph::build(a + b, std::move(edges));
}

EdgeColoredGraph rainbow_complete_graph(std::size_t n) {
    std::vector<ColoredEdge> edges;
    Color next = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), next++});
        }
    }
    return EdgeColoredGraph::build(n, std::move(edges));
}

EdgeColoredGraph matched_bipartite(std::size_t m) {
    if (m % 2 == 0) {
        throw PreconditionError("matched_bipartite: m must be odd");
    }
    std::vector<ColoredEdge> edges;
    Color next = 0;
    for (std::size_t a = 0; a <= m; a += 2) {
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(a + 1), next++});
    }
    for (std::size_t a = 0; a <= m; ++a) {
        for (std::size_t b = m + 1; b <= 2 * m; ++b) {
            edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), next++});
        }
    }
    return EdgeColoredGraph::build(2 * m + 1, std::move(edges));
}

EdgeColoredGraph random_colored_graph(std::size_t n, double edge_prob, std::size_t palette_size, std::uint64_t seed,
                                      RandomGraphOptions options) {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw PreconditionError("random_colored_graph: edge probability must lie in [0, 1]");
    }
    if (palette_size == 0) {
        throw PreconditionError("random_colored_graph: palette must be nonempty");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    std::uniform_int_distribution<Color> color(0, static_cast<Color>(palette_size - 1));
    std::vector<ColoredEdge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!coin(rng)) {
                continue;
            }
            const auto c = options.distinct_colors ? static_cast<Color>(edges.size()) : color(rng);
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), c});
        }
    }
    if (options.distinct_colors && edges.size() > palette_size) {
        throw PreconditionError("random_colored_graph: " + std::to_string(edges.size()) +
                                " edges do not fit distinctly into a palette of " + std::to_string(palette_size));
    }
    return EdgeColoredGraph::build(n, std::move(edges));
}

EdgeColoredGraph boost_min_color_degree(const EdgeColoredGraph &g, std::size_t target, std::uint64_t seed) {
    const auto n = g.vertex_count();
    if (n == 0 || target > n - 1) {
        throw InfeasibleTarget("boost_min_color_degree: target " + std::to_string(target) +
                               " exceeds n - 1 = " + std::to_string(n == 0 ? 0 : n - 1));
    }
    std::vector<std::size_t> cdeg(n);
    std::vector<char> adjacent(n * n, 0);
    for (Vertex v = 0; v < n; ++v) {
        cdeg[v] = g.color_degree(v);
    }
    for (const auto &e : g.edges()) {
        adjacent[std::size_t{e.u} * n + e.v] = 1;
        adjacent[std::size_t{e.v} * n + e.u] = 1;
    }

    std::vector<Vertex> deficient;
    for (Vertex v = 0; v < n; ++v) {
        if (cdeg[v] < target) {
            deficient.push_back(v);
        }
    }
    if (deficient.empty()) {
        return g;
    }

    std::mt19937_64 rng(seed);
    std::shuffle(deficient.begin(), deficient.end(), rng);
    Color fresh = g.palette().empty() ? 0 : g.palette().back() + 1;
    std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
    std::vector<Vertex> partners;
    for (auto v : deficient) {
        if (cdeg[v] >= target) {
            continue;
        }
        partners.clear();
        for (Vertex w = 0; w < n; ++w) {
            if (w != v && !adjacent[std::size_t{v} * n + w]) {
                partners.push_back(w);
            }
        }
        std::shuffle(partners.begin(), partners.end(), rng);
        std::stable_partition(partners.begin(), partners.end(), [&](Vertex w) { return cdeg[w] < target; });
        for (auto w : partners) {
            if (cdeg[v] >= target) {
                break;
            }
            edges.push_back({std::min(v, w), std::max(v, w), fresh++});
            adjacent[std::size_t{v} * n + w] = 1;
            adjacent[std::size_t{w} * n + v] = 1;
            ++cdeg[v];
            ++cdeg[w];
        }
        if (cdeg[v] < target) {
            throw InfeasibleTarget("boost_min_color_degree: vertex " + std::to_string(v) + " is adjacent to every "
                                   "other vertex but reaches only color degree " + std::to_string(cdeg[v]));
        }
    }
    return EdgeColoredGraph::build(n, std::move(edges));
}

} // namespace rainbow
