#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/witness.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

struct SearchOptions {
    /// 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Exact search for a rainbow cycle on `ell` vertices.
///
/// Each cycle is visited once: anchored at its smallest vertex s, every
/// other vertex larger than s, and oriented so the second vertex precedes
/// the last. A partial path ending in u with r edges still to place is cut
/// unless some walk of exactly r edges leads from u back to s through
/// vertices >= s (this also kills every odd cycle attempt in a bipartite
/// host). The returned witness does not depend on the thread count.
std::optional<RainbowWitness> find_rainbow_cycle_exact(const EdgeColoredGraph &g, std::size_t ell,
                                                       SearchOptions options = {});

/// Number of rainbow ell-cycles, each counted once up to rotation and reflection.
std::uint64_t count_rainbow_cycles(const EdgeColoredGraph &g, std::size_t ell, SearchOptions options = {});

enum class ReachMode { exact, greedy };

/// Rainbow-path reachability layers from an anchor.
///
/// layer(i) maps y to one witness of an i-vertex rainbow {anchor, y}-path
/// that uses no forbidden color and whose vertices other than the anchor
/// avoid `avoid`. layer(1) = {anchor}.
struct LayeredReach {
    Vertex anchor = 0;
    std::vector<Color> forbidden;
    std::vector<Vertex> avoid;
    ReachMode mode = ReachMode::greedy;
    std::size_t max_layer = 0;
    /// layers[i - 1] holds layer i.
    std::vector<std::map<Vertex, RainbowWitness>> layers;

    [[nodiscard]] const std::map<Vertex, RainbowWitness> &layer(std::size_t i) const;
    [[nodiscard]] std::vector<Vertex> members(std::size_t i) const;
    [[nodiscard]] bool contains(std::size_t i, Vertex y) const;
};

struct ReachOptions {
    /// Exact mode is refused above this many vertices.
    std::size_t exact_cap = 16;
};

/// Exact mode enumerates every admissible path, so membership is exact.
/// Greedy mode extends only the one stored witness per member, scanning
/// members and their neighbors in id order; its layers are subsets of the
/// exact ones and every member still carries a valid witness.
LayeredReach layered_reach(const EdgeColoredGraph &g, Vertex anchor, std::span<const Color> forbidden,
                           std::size_t max_layer, std::span<const Vertex> avoid, ReachMode mode,
                           ReachOptions options = {});

/// Colors c({v, x}) occurring at least twice over x in X. Requires X subset of N(v).
std::vector<Color> repeating_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set);

/// Tries to close a rainbow ell-cycle P_vy + {y, x} + {x, v} for y in layer
/// ell-1 of `reach` and x in N(y) cap X. A candidate is rejected when
///   (A) x lies on P_vy, (B) c(xy) is a path color,
///   (C) c(vx) is a path color, or (D) c(xy) = c(vx).
/// Scans y then x in ascending order and returns the first success.
std::optional<RainbowWitness> close_cycle_from_reach(const EdgeColoredGraph &g, Vertex v,
                                                     std::span<const Vertex> x_set, const LayeredReach &reach,
                                                     std::span<const Color> c_rep, std::size_t ell);

} // namespace rainbow
