#pragma once

// Slow reference implementations written straight from the definitions.
// They look only at the raw edge list, never at the indexed views the
// library builds, so agreement is meaningful.

#include "rainbow/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using rainbow::Color;
using rainbow::ColoredEdge;
using rainbow::EdgeColoredGraph;
using rainbow::Vertex;

/// Adjacency matrix of colors; -1 for non-edges.
struct Matrix {
    std::size_t n = 0;
    std::vector<std::int64_t> c;

    explicit Matrix(const EdgeColoredGraph &g) : n(g.vertex_count()), c(n * n, -1) {
        for (const auto &e : g.edges()) {
            c[e.u * n + e.v] = e.color;
            c[e.v * n + e.u] = e.color;
        }
    }
    explicit Matrix(std::size_t n_, const std::vector<ColoredEdge> &edges) : n(n_), c(n * n, -1) {
        for (const auto &e : edges) {
            c[e.u * n + e.v] = e.color;
            c[e.v * n + e.u] = e.color;
        }
    }
    [[nodiscard]] std::int64_t at(Vertex u, Vertex v) const { return c[u * n + v]; }
    [[nodiscard]] bool edge(Vertex u, Vertex v) const { return u != v && at(u, v) >= 0; }
};

inline std::size_t color_degree(const Matrix &m, Vertex v) {
    std::set<std::int64_t> cs;
    for (Vertex w = 0; w < m.n; ++w) {
        if (m.edge(v, w)) {
            cs.insert(m.at(v, w));
        }
    }
    return cs.size();
}

inline std::size_t min_color_degree(const Matrix &m) {
    std::size_t best = SIZE_MAX;
    for (Vertex v = 0; v < m.n; ++v) {
        best = std::min(best, color_degree(m, v));
    }
    return best;
}

inline std::size_t replication(const Matrix &m) {
    std::size_t r = 0;
    for (Vertex v = 0; v < m.n; ++v) {
        std::map<std::int64_t, std::size_t> count;
        for (Vertex w = 0; w < m.n; ++w) {
            if (m.edge(v, w)) {
                r = std::max(r, ++count[m.at(v, w)]);
            }
        }
    }
    return r;
}

inline std::vector<Vertex> unique_neighborhood(const Matrix &m, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < m.n; ++w) {
        if (!m.edge(v, w)) {
            continue;
        }
        std::size_t same = 0;
        for (Vertex u = 0; u < m.n; ++u) {
            same += m.edge(v, u) && m.at(v, u) == m.at(v, w) ? 1 : 0;
        }
        if (same == 1) {
            out.push_back(w);
        }
    }
    return out;
}

/// Every ordered sequence of ell distinct vertices that closes into a
/// rainbow cycle; each cycle appears 2 ell times.
inline std::uint64_t rainbow_cycle_count(const Matrix &m, std::size_t ell) {
    if (ell > m.n) {
        return 0;
    }
    std::uint64_t ordered = 0;
    std::vector<Vertex> seq;
    std::vector<char> used(m.n, 0);
    auto rec = [&](auto &self) -> void {
        if (seq.size() == ell) {
            if (!m.edge(seq.back(), seq.front())) {
                return;
            }
            std::set<std::int64_t> cs;
            for (std::size_t i = 0; i < ell; ++i) {
                cs.insert(m.at(seq[i], seq[(i + 1) % ell]));
            }
            ordered += cs.size() == ell ? 1 : 0;
            return;
        }
        for (Vertex v = 0; v < m.n; ++v) {
            if (used[v] || (!seq.empty() && !m.edge(seq.back(), v))) {
                continue;
            }
            used[v] = 1;
            seq.push_back(v);
            self(self);
            seq.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
    return ordered / (2 * ell);
}

/// sigma and rho straight from the definitions.
inline std::pair<std::size_t, std::size_t> sigma_rho(const Matrix &m, Vertex v, const std::vector<Vertex> &x,
                                                     Vertex y) {
    std::set<std::int64_t> sep;
    for (auto xi : x) {
        if (m.edge(xi, y) && m.at(xi, y) != m.at(v, xi)) {
            sep.insert(m.at(xi, y));
        }
    }
    std::size_t rho = 0;
    for (auto a : sep) {
        bool outside = false;
        for (Vertex w = 0; w < m.n; ++w) {
            if (std::find(x.begin(), x.end(), w) == x.end() && m.edge(w, y) && m.at(w, y) == a) {
                outside = true;
            }
        }
        rho += outside ? 0 : 1;
    }
    return {sep.size(), rho};
}

/// Some walk u-v-w-x (x may equal u) of three equally colored edges.
inline bool has_mono_3path(const Matrix &m) {
    for (Vertex u = 0; u < m.n; ++u) {
        for (Vertex v = 0; v < m.n; ++v) {
            for (Vertex w = 0; w < m.n; ++w) {
                for (Vertex x = 0; x < m.n; ++x) {
                    if (u == v || v == w || w == x || u == w || v == x) {
                        continue;
                    }
                    if (m.edge(u, v) && m.edge(v, w) && m.edge(w, x) && m.at(u, v) == m.at(v, w) &&
                        m.at(v, w) == m.at(w, x)) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

/// No edge can be deleted without lowering the minimum color degree.
inline bool edge_minimal(const EdgeColoredGraph &g) {
    const auto delta = min_color_degree(Matrix(g));
    std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto rest = edges;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (min_color_degree(Matrix(g.vertex_count(), rest)) >= delta) {
            return false;
        }
    }
    return true;
}

/// Vertices y carrying some rainbow path of exactly `vertices` vertices from
/// the anchor that avoids the forbidden colors and, apart from the anchor,
/// the avoid set.
inline std::set<Vertex> reach_layer(const Matrix &m, Vertex anchor, const std::vector<Color> &forbidden,
                                    const std::vector<Vertex> &avoid, std::size_t vertices) {
    std::set<Vertex> out;
    std::vector<Vertex> path{anchor};
    std::vector<std::int64_t> colors;
    auto rec = [&](auto &self) -> void {
        if (path.size() == vertices) {
            out.insert(path.back());
            return;
        }
        for (Vertex w = 0; w < m.n; ++w) {
            if (!m.edge(path.back(), w) || std::find(path.begin(), path.end(), w) != path.end() ||
                std::find(avoid.begin(), avoid.end(), w) != avoid.end()) {
                continue;
            }
            const auto c = m.at(path.back(), w);
            if (std::find(colors.begin(), colors.end(), c) != colors.end() ||
                std::find(forbidden.begin(), forbidden.end(), static_cast<Color>(c)) != forbidden.end()) {
                continue;
            }
            path.push_back(w);
            colors.push_back(c);
            self(self);
            colors.pop_back();
            path.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// Arcs (x, y), x in X, y in Y, with c(xy) = c(vx).
inline std::set<std::pair<Vertex, Vertex>> digraph_d(const Matrix &m, Vertex v, const std::vector<Vertex> &x,
                                                     const std::vector<Vertex> &y) {
    std::set<std::pair<Vertex, Vertex>> arcs;
    for (auto xi : x) {
        for (auto yi : y) {
            if (m.edge(xi, yi) && m.at(xi, yi) == m.at(v, xi)) {
                arcs.insert({xi, yi});
            }
        }
    }
    return arcs;
}

/// A random graph straight from a generator independent of the library.
inline EdgeColoredGraph random_graph(std::mt19937_64 &rng, std::size_t n, double p, std::size_t palette) {
    std::vector<ColoredEdge> edges;
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<Color> color(0, static_cast<Color>(palette - 1));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.push_back({u, v, color(rng)});
            }
        }
    }
    return EdgeColoredGraph::build(n, std::move(edges));
}

} // namespace oracle
