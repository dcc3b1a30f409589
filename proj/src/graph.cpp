#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rainbow {

namespace {

std::string edge_name(const ColoredEdge &e) {
    std::ostringstream os;
    os << "{" << e.u << "," << e.v << "} (color " << e.color << ")";
    return os.str();
}

} // namespace

EdgeColoredGraph EdgeColoredGraph::build(std::size_t n, std::vector<ColoredEdge> edges) {
    for (auto &e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("vertex out of range in edge " + edge_name(e) + " for n = " + std::to_string(n));
        }
        if (e.u == e.v) {
            throw GraphError("loop at edge " + edge_name(e));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
            throw GraphError("duplicate edge " + edge_name(edges[i]));
        }
    }

    EdgeColoredGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);

    g.palette_.reserve(g.edges_.size());
    for (const auto &e : g.edges_) {
        g.palette_.push_back(e.color);
    }
    std::sort(g.palette_.begin(), g.palette_.end());
    g.palette_.erase(std::unique(g.palette_.begin(), g.palette_.end()), g.palette_.end());

    std::vector<std::size_t> deg(n, 0);
    for (const auto &e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.adj_offsets_.assign(n + 1, 0);
    std::partial_sum(deg.begin(), deg.end(), g.adj_offsets_.begin() + 1);
    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (const auto &e : g.edges_) {
        const auto rank = static_cast<std::uint32_t>(
            std::lower_bound(g.palette_.begin(), g.palette_.end(), e.color) - g.palette_.begin());
        g.adj_[fill[e.u]++] = Neighbor{e.v, e.color, rank};
        g.adj_[fill[e.v]++] = Neighbor{e.u, e.color, rank};
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.adj_offsets_[v + 1]),
                  [](const Neighbor &a, const Neighbor &b) { return a.vertex < b.vertex; });
    }

    // Color-grouped view.
    g.by_color_.resize(g.adj_.size());
    g.class_offsets_.assign(n + 1, 0);
    std::vector<Neighbor> scratch;
    for (std::size_t v = 0; v < n; ++v) {
        const auto lo = g.adj_offsets_[v];
        const auto hi = g.adj_offsets_[v + 1];
        scratch.assign(g.adj_.begin() + static_cast<std::ptrdiff_t>(lo), g.adj_.begin() + static_cast<std::ptrdiff_t>(hi));
        std::sort(scratch.begin(), scratch.end(), [](const Neighbor &a, const Neighbor &b) {
            return a.color != b.color ? a.color < b.color : a.vertex < b.vertex;
        });
        for (std::size_t i = 0; i < scratch.size(); ++i) {
            g.by_color_[lo + i] = scratch[i].vertex;
            if (i == 0 || scratch[i].color != scratch[i - 1].color) {
                g.classes_.push_back(ColorClass{scratch[i].color, static_cast<std::uint32_t>(lo + i),
                                                static_cast<std::uint32_t>(lo + i + 1)});
            } else {
                ++g.classes_.back().end;
            }
        }
        g.class_offsets_[v + 1] = g.classes_.size();
    }
    return g;
}

void EdgeColoredGraph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
    }
}

std::optional<std::uint32_t> EdgeColoredGraph::color_rank(Color c) const {
    auto it = std::lower_bound(palette_.begin(), palette_.end(), c);
    if (it == palette_.end() || *it != c) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - palette_.begin());
}

std::span<const EdgeColoredGraph::Neighbor> EdgeColoredGraph::neighbors(Vertex v) const {
    check_vertex(v);
    return std::span<const Neighbor>(adj_).subspan(adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]);
}

std::size_t EdgeColoredGraph::degree(Vertex v) const {
    check_vertex(v);
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::size_t EdgeColoredGraph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        best = std::max(best, adj_offsets_[v + 1] - adj_offsets_[v]);
    }
    return best;
}

std::optional<Color> EdgeColoredGraph::edge_color(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    check_vertex(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), v, [](const Neighbor &a, Vertex x) { return a.vertex < x; });
    if (it == nb.end() || it->vertex != v) {
        return std::nullopt;
    }
    return it->color;
}

std::span<const EdgeColoredGraph::ColorClass> EdgeColoredGraph::color_classes(Vertex v) const {
    check_vertex(v);
    return std::span<const ColorClass>(classes_).subspan(class_offsets_[v], class_offsets_[v + 1] - class_offsets_[v]);
}

std::span<const Vertex> EdgeColoredGraph::class_members(const ColorClass &cls) const {
    return std::span<const Vertex>(by_color_).subspan(cls.begin, cls.size());
}

std::span<const Vertex> EdgeColoredGraph::alpha_neighborhood(Vertex v, Color alpha) const {
    auto classes = color_classes(v);
    auto it = std::lower_bound(classes.begin(), classes.end(), alpha,
                               [](const ColorClass &c, Color a) { return c.color < a; });
    if (it == classes.end() || it->color != alpha) {
        return {};
    }
    return class_members(*it);
}

std::vector<Vertex> EdgeColoredGraph::unique_neighborhood(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto &cls : color_classes(v)) {
        if (cls.size() == 1) {
            out.push_back(by_color_[cls.begin]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t EdgeColoredGraph::color_degree(Vertex v) const {
    check_vertex(v);
    return class_offsets_[v + 1] - class_offsets_[v];
}

EdgeColoredGraph build_graph(std::size_t n, std::vector<ColoredEdge> colored_edges) {
    return EdgeColoredGraph::build(n, std::move(colored_edges));
}

std::size_t color_degree(const EdgeColoredGraph &g, Vertex v) { return g.color_degree(v); }

std::vector<char> vertex_mask(std::size_t n, std::span<const Vertex> vertices) {
    std::vector<char> mask(n, 0);
    for (auto v : vertices) {
        if (v >= n) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        }
        mask[v] = 1;
    }
    return mask;
}

std::size_t color_degree_within(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> within) {
    const auto mask = vertex_mask(g.vertex_count(), within);
    std::size_t count = 0;
    for (const auto &cls : g.color_classes(v)) {
        const auto members = g.class_members(cls);
        if (std::any_of(members.begin(), members.end(), [&](Vertex u) { return mask[u] != 0; })) {
            ++count;
        }
    }
    return count;
}

std::size_t min_color_degree(const EdgeColoredGraph &g) {
    if (g.vertex_count() == 0) {
        throw PreconditionError("min_color_degree: graph has no vertices");
    }
    std::size_t best = g.color_degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        best = std::min(best, g.color_degree(v));
    }
    return best;
}

Replication replication(const EdgeColoredGraph &g) {
    if (g.edge_count() == 0) {
        throw PreconditionError("replication: no colors present");
    }
    Replication best;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto &cls : g.color_classes(v)) {
            // Strict comparison keeps the first (smallest vertex, smallest color) maximizer.
            if (cls.size() > best.r) {
                best = Replication{cls.size(), v, cls.color};
            }
        }
    }
    return best;
}

std::size_t replication_number(const EdgeColoredGraph &g) {
    return g.edge_count() == 0 ? 0 : replication(g).r;
}

InducedSubgraph induced_subgraph(const EdgeColoredGraph &g, std::span<const Vertex> subset) {
    InducedSubgraph out;
    out.original.assign(subset.begin(), subset.end());
    std::sort(out.original.begin(), out.original.end());
    out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());

    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> relabel(g.vertex_count(), absent);
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        if (out.original[i] >= g.vertex_count()) {
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(out.original[i]) + " out of range");
        }
        relabel[out.original[i]] = static_cast<Vertex>(i);
    }
    std::vector<ColoredEdge> edges;
    for (const auto &e : g.edges()) {
        if (relabel[e.u] != absent && relabel[e.v] != absent) {
            edges.push_back(ColoredEdge{relabel[e.u], relabel[e.v], e.color});
        }
    }
    out.graph = EdgeColoredGraph::build(out.original.size(), std::move(edges));
    return out;
}

ColorStats compute_color_stats(const EdgeColoredGraph &g) {
    ColorStats stats;
    stats.color_degree.resize(g.vertex_count());
    stats.unique_nbhd.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        stats.color_degree[v] = g.color_degree(v);
        stats.unique_nbhd[v] = g.unique_neighborhood(v);
    }
    if (g.edge_count() > 0) {
        stats.replication = replication(g);
    }
    return stats;
}

} // namespace rainbow
