#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/witness.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

struct FinderOptions {
    /// Run the exact search on the input graph when the constructive steps give up.
    bool fallback = true;
    /// The exact fallback is only attempted up to this many vertices.
    std::size_t exact_cap = 16;
    /// Keep the full vertex sets (X+, Y_0, reach layers) in the trace.
    bool record_sets = false;
    /// Case 2 start candidates to try; 0 tries all of them.
    std::size_t max_case2_starts = 0;
};

enum class ProofCase { case1, case2a, case2b, degenerate };
enum class FinderOutcome { found_by_proof, found_by_fallback, exhausted, hypothesis_violation };

std::string to_string(ProofCase c);
std::string to_string(FinderOutcome o);

enum class ExtendSide { into_y0, into_x };

/// One greedy extension step. `lower_bound` is the count of new colors the
/// counting argument promises: deg^c_{H0}(x) - |E(Q)| - |Y0 cap V(Q)| into Y_0,
/// deg^c_{H0}(y) - 2|E(Q)| - |X cap V(Q)| into X.
struct ExtensionStep {
    ExtendSide side = ExtendSide::into_y0;
    std::size_t path_vertices = 0;
    std::size_t feasible_vertices = 0;
    std::size_t feasible_colors = 0;
    std::int64_t lower_bound = 0;
    std::optional<Vertex> chosen;
};

struct Case2Attempt {
    std::vector<Vertex> start;
    std::vector<ExtensionStep> steps;
    bool closed = false;
};

/// Y = V - ({z} cup X) split by how y attaches to X.
struct Case2Partition {
    Vertex z = 0;
    Color zeta = 0;
    std::vector<Vertex> x_set;
    std::vector<Vertex> y;
    /// 2 deg^c_H(y) <= 5 ell
    std::vector<Vertex> y_h;
    /// at least two edges {x, y} with c(xy) = c(xz)
    std::vector<Vertex> y_d;
    std::vector<Vertex> y0;
    std::vector<std::pair<Vertex, Vertex>> d_edges;
    std::size_t h0_edges = 0;
    std::size_t max_d_degree_x = 0;

    /// Indexed by vertex id.
    std::vector<char> in_x;
    std::vector<char> in_y0;
    std::vector<std::int64_t> color_to_z;
    std::vector<std::size_t> h0_color_degree;

    /// Edge of H_0: x in X, y in Y_0, c(xy) != c(xz).
    [[nodiscard]] bool h0_edge(Vertex x, Vertex y, Color c) const {
        return in_x[x] && in_y0[y] && static_cast<std::int64_t>(c) != color_to_z[x];
    }
};

/// Requires X subset of N(z) and every edge inside X colored zeta; otherwise
/// throws PreconditionError (Case 1 applies).
Case2Partition case2_partition(const EdgeColoredGraph &g, Vertex z, Color zeta, std::span<const Vertex> x_set,
                               std::size_t ell);

/// A rainbow path z, ... alternating between Y and X.
struct GreedyPath {
    std::vector<Vertex> vertices;
    std::vector<Color> colors;
};

/// Appends the smallest-id feasible vertex on `side` and reports how many
/// candidates there were. Into Y_0: an H_0 edge with a fresh color to an
/// unused vertex. Into X: additionally c(xz) must be fresh, so the path
/// closes through {x, z}. The path is left unchanged when nothing fits.
ExtensionStep greedy_extend(const EdgeColoredGraph &g, const Case2Partition &part, GreedyPath &path,
                            ExtendSide side);

struct FinderTrace {
    std::size_t ell = 0;
    std::size_t n = 0;
    std::size_t input_edges = 0;
    std::size_t reduced_edges = 0;
    std::size_t min_color_degree = 0;
    std::size_t replication = 0;
    Vertex z = 0;
    Color zeta = 0;
    std::vector<Vertex> x_set;
    /// 2 delta^c >= n + 1 and n >= 432 ell + 1.
    bool hypotheses_met = false;

    ProofCase proof_case = ProofCase::degenerate;
    FinderOutcome outcome = FinderOutcome::exhausted;
    std::string note;

    // Case 1
    std::optional<std::pair<Vertex, Vertex>> e0;
    std::size_t x_plus_size = 0;
    std::vector<Color> c_rep;
    std::vector<std::size_t> layer_sizes;
    std::size_t f_arcs = 0;
    std::size_t f_lower_bound = 0;
    std::vector<Vertex> x_plus;

    // Case 2
    std::size_t y_size = 0;
    std::size_t y_h_size = 0;
    std::size_t y_d_size = 0;
    std::size_t y0_size = 0;
    std::size_t d_edges = 0;
    std::size_t h0_edges = 0;
    std::size_t max_d_degree_x = 0;
    std::vector<Vertex> y_h;
    std::vector<Vertex> y_d;
    std::vector<Vertex> y0;
    std::vector<Case2Attempt> attempts;

    std::optional<RainbowWitness> witness;
};

/// Reduces g to an edge-minimal spanning subgraph and follows the case
/// analysis of the density argument to build a rainbow ell-cycle. The
/// witness, when present, is a rainbow ell-cycle of g.
std::pair<std::optional<RainbowWitness>, FinderTrace> find_rainbow_cycle(const EdgeColoredGraph &g, std::size_t ell,
                                                                         FinderOptions options = {});

} // namespace rainbow
