#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Raised when a graph cannot be constructed (loops, duplicates, bad ids).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ColoredEdge {
    Vertex u = 0;
    Vertex v = 0;
    Color color = 0;

    auto operator<=>(const ColoredEdge &) const = default;
};

/// Immutable simple graph with a total edge-coloring.
///
/// Vertices are 0..n-1. Every vertex keeps two views of its star: the
/// neighbors sorted by id (for adjacency lookups) and the neighbors grouped
/// by color (for N_alpha(v), N_1(v) and color degrees).
class EdgeColoredGraph {
public:
    struct Neighbor {
        Vertex vertex;
        Color color;
        /// Position of `color` in palette(); dense in 0..palette_size()-1.
        std::uint32_t rank;
    };

    /// A maximal run of equally colored edges at one vertex.
    struct ColorClass {
        Color color;
        std::uint32_t begin;
        std::uint32_t end;

        [[nodiscard]] std::size_t size() const { return end - begin; }
    };

    EdgeColoredGraph() = default;

    /// Validates and indexes the edge list. Edges may be given in any order
    /// and orientation; they are stored normalized (u < v) and sorted.
    static EdgeColoredGraph build(std::size_t n, std::vector<ColoredEdge> edges);

    [[nodiscard]] std::size_t vertex_count() const { return n_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] std::span<const ColoredEdge> edges() const { return edges_; }

    /// Distinct colors in use, ascending.
    [[nodiscard]] std::span<const Color> palette() const { return palette_; }
    [[nodiscard]] std::size_t palette_size() const { return palette_.size(); }
    [[nodiscard]] std::optional<std::uint32_t> color_rank(Color c) const;

    [[nodiscard]] std::span<const Neighbor> neighbors(Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const;
    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] std::optional<Color> edge_color(Vertex u, Vertex v) const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return edge_color(u, v).has_value(); }

    [[nodiscard]] std::span<const ColorClass> color_classes(Vertex v) const;
    [[nodiscard]] std::span<const Vertex> class_members(const ColorClass &cls) const;

    /// N_alpha(v), ascending; empty when alpha does not occur at v.
    [[nodiscard]] std::span<const Vertex> alpha_neighborhood(Vertex v, Color alpha) const;

    /// N_1(v): neighbors whose edge color occurs exactly once at v. Ascending.
    [[nodiscard]] std::vector<Vertex> unique_neighborhood(Vertex v) const;

    [[nodiscard]] std::size_t color_degree(Vertex v) const;

    friend bool operator==(const EdgeColoredGraph &a, const EdgeColoredGraph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<ColoredEdge> edges_;
    std::vector<Color> palette_;

    std::vector<std::size_t> adj_offsets_;
    std::vector<Neighbor> adj_;

    std::vector<std::size_t> class_offsets_;
    std::vector<ColorClass> classes_;
    std::vector<Vertex> by_color_;
};

EdgeColoredGraph build_graph(std::size_t n, std::vector<ColoredEdge> colored_edges);

std::size_t color_degree(const EdgeColoredGraph &g, Vertex v);

/// Number of distinct colors on edges from v into `within`.
std::size_t color_degree_within(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> within);

/// delta^c(G). Requires n >= 1.
std::size_t min_color_degree(const EdgeColoredGraph &g);

struct Replication {
    std::size_t r = 0;
    Vertex vertex = 0;
    Color color = 0;
};

/// R = max |N_alpha(v)| with the lexicographically smallest (v, alpha)
/// attaining it. Throws PreconditionError when the graph has no edges.
Replication replication(const EdgeColoredGraph &g);

/// R, or 0 for an edgeless graph.
std::size_t replication_number(const EdgeColoredGraph &g);

struct InducedSubgraph {
    EdgeColoredGraph graph;
    /// original[i] is the host vertex relabeled to i.
    std::vector<Vertex> original;
};

/// G[A]. A is deduplicated; retained vertices are relabeled in ascending order.
InducedSubgraph induced_subgraph(const EdgeColoredGraph &g, std::span<const Vertex> subset);

struct ColorStats {
    std::vector<std::size_t> color_degree;
    std::vector<std::vector<Vertex>> unique_nbhd;
    std::optional<Replication> replication;
};

ColorStats compute_color_stats(const EdgeColoredGraph &g);

/// Membership mask of size n for a vertex list; ids >= n are rejected.
std::vector<char> vertex_mask(std::size_t n, std::span<const Vertex> vertices);

} // namespace rainbow
