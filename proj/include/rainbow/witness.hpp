#pragma once

#include "rainbow/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rainbow {

enum class WitnessKind { path, cycle };

/// An explicit vertex sequence certifying a rainbow path or cycle.
///
/// colors[i] is the color of {vertices[i], vertices[i+1]}; for a cycle the
/// last entry is the closing edge {vertices.back(), vertices.front()}.
struct RainbowWitness {
    WitnessKind kind = WitnessKind::path;
    std::vector<Vertex> vertices;
    std::vector<Color> colors;

    [[nodiscard]] std::size_t length() const { return vertices.size(); }

    friend bool operator==(const RainbowWitness &, const RainbowWitness &) = default;
};

/// Reads the edge colors off `g`. Throws GraphError if consecutive vertices
/// are not adjacent. Does not check the rainbow property.
RainbowWitness make_witness(const EdgeColoredGraph &g, WitnessKind kind, std::vector<Vertex> vertices);

/// Human-readable description of the first defect, or nullopt for a valid
/// witness (distinct vertices, edges present with the recorded colors,
/// colors pairwise distinct).
std::optional<std::string> witness_defect(const EdgeColoredGraph &g, const RainbowWitness &w);

inline bool is_valid_witness(const EdgeColoredGraph &g, const RainbowWitness &w) {
    return !witness_defect(g, w).has_value();
}

inline bool is_rainbow_cycle(const EdgeColoredGraph &g, const RainbowWitness &w, std::size_t ell) {
    return w.kind == WitnessKind::cycle && w.vertices.size() == ell && is_valid_witness(g, w);
}

std::string to_string(const RainbowWitness &w);

} // namespace rainbow
