#include "rainbow/minimality.hpp"

#include <algorithm>

namespace rainbow {

namespace {

std::size_t class_index(const EdgeColoredGraph &g, Vertex v, Color c) {
    auto classes = g.color_classes(v);
    auto it = std::lower_bound(classes.begin(), classes.end(), c,
                               [](const EdgeColoredGraph::ColorClass &cls, Color a) { return cls.color < a; });
    return static_cast<std::size_t>(it - classes.begin());
}

} // namespace

EdgeColoredGraph edge_minimal_reduce(const EdgeColoredGraph &g) {
    const auto n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0) {
        return g;
    }
    const auto delta = min_color_degree(g);
    const auto edges = g.edges();

    // Per-vertex class multiplicities, flattened; base[v] is v's first class.
    std::vector<std::size_t> base(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        base[v + 1] = base[v] + g.color_classes(v).size();
    }
    std::vector<std::uint32_t> mult(base[n]);
    std::vector<std::size_t> cdeg(n);
    for (Vertex v = 0; v < n; ++v) {
        auto classes = g.color_classes(v);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            mult[base[v] + i] = static_cast<std::uint32_t>(classes[i].size());
        }
        cdeg[v] = classes.size();
    }
    std::vector<std::size_t> slot_u(edges.size()), slot_v(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        slot_u[i] = base[edges[i].u] + class_index(g, edges[i].u, edges[i].color);
        slot_v[i] = base[edges[i].v] + class_index(g, edges[i].v, edges[i].color);
    }

    std::vector<char> alive(edges.size(), 1);
    auto endpoint_ok = [&](Vertex w, std::size_t slot) { return mult[slot] > 1 || cdeg[w] > delta; };
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!alive[i] || !endpoint_ok(edges[i].u, slot_u[i]) || !endpoint_ok(edges[i].v, slot_v[i])) {
                continue;
            }
            alive[i] = 0;
            removed = true;
            if (--mult[slot_u[i]] == 0) {
                --cdeg[edges[i].u];
            }
            if (--mult[slot_v[i]] == 0) {
                --cdeg[edges[i].v];
            }
        }
    }

    std::vector<ColoredEdge> kept;
    kept.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (alive[i]) {
            kept.push_back(edges[i]);
        }
    }
    return EdgeColoredGraph::build(n, std::move(kept));
}

bool check_no_mono_3path(const EdgeColoredGraph &g) {
    // A middle edge {v, w} of color a extends on both sides exactly when
    // |N_a(v)| >= 2 and |N_a(w)| >= 2.
    for (const auto &e : g.edges()) {
        if (g.alpha_neighborhood(e.u, e.color).size() >= 2 && g.alpha_neighborhood(e.v, e.color).size() >= 2) {
            return false;
        }
    }
    return true;
}

bool is_edge_minimal(const EdgeColoredGraph &g) {
    if (g.vertex_count() == 0) {
        return true;
    }
    const auto delta = min_color_degree(g);
    for (const auto &e : g.edges()) {
        const bool drops_u = g.alpha_neighborhood(e.u, e.color).size() == 1 && g.color_degree(e.u) == delta;
        const bool drops_v = g.alpha_neighborhood(e.v, e.color).size() == 1 && g.color_degree(e.v) == delta;
        if (!drops_u && !drops_v) {
            return false;
        }
    }
    return true;
}

} // namespace rainbow
