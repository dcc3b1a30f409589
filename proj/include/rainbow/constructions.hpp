#pragma once

#include "rainbow/graph.hpp"

#include <cstdint>

namespace rainbow {

/// Thrown when no sequence of edge additions reaches the requested color degree.
class InfeasibleTarget : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// K_{a,b} on parts {0..a-1} and {a..a+b-1}; the edges, in sorted order,
/// get colors 0, 1, 2, ...
EdgeColoredGraph rainbow_complete_bipartite(std::size_t a, std::size_t b);

/// Rainbow K_n, colors assigned in sorted edge order.
EdgeColoredGraph rainbow_complete_graph(std::size_t n);

/// Rainbow K_{m+1,m} on A = {0..m} and B = {m+1..2m}, plus a perfect matching
/// inside A in fresh colors; {0, 1} carries the smallest color. delta^c = m + 1
/// on n = 2m + 1 vertices, every color is used once, and N(0) minus its
/// matching partner is B, which spans no edges. Requires m odd.
EdgeColoredGraph matched_bipartite(std::size_t m);

struct RandomGraphOptions {
    /// Color the edges 0, 1, 2, ... in sorted order instead of drawing colors.
    bool distinct_colors = false;
};

/// G(n, p) with colors uniform over {0, ..., palette_size - 1}. Deterministic in
/// the seed. With distinct_colors, palette_size must cover the edge count.
EdgeColoredGraph random_colored_graph(std::size_t n, double edge_prob, std::size_t palette_size, std::uint64_t seed,
                                      RandomGraphOptions options = {});

/// Adds edges with previously unused colors at vertices whose color degree
/// is below `target` until every vertex reaches it. Partners are tried in a
/// seeded random order, deficient vertices first. Existing edges keep their
/// colors. Throws InfeasibleTarget when target > n - 1 or when some vertex
/// runs out of non-neighbors first.
EdgeColoredGraph boost_min_color_degree(const EdgeColoredGraph &g, std::size_t target, std::uint64_t seed);

} // namespace rainbow
