#include "rainbow/witness.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {

RainbowWitness make_witness(const EdgeColoredGraph &g, WitnessKind kind, std::vector<Vertex> vertices) {
    RainbowWitness w{kind, std::move(vertices), {}};
    const auto k = w.vertices.size();
    const auto edges = kind == WitnessKind::cycle ? k : (k == 0 ? 0 : k - 1);
    w.colors.reserve(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        const auto a = w.vertices[i];
        const auto b = w.vertices[(i + 1) % k];
        auto c = g.edge_color(a, b);
        if (!c) {
            throw GraphError("witness uses non-edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
        w.colors.push_back(*c);
    }
    return w;
}

std::optional<std::string> witness_defect(const EdgeColoredGraph &g, const RainbowWitness &w) {
    const auto k = w.vertices.size();
    if (k == 0) {
        return "empty witness";
    }
    if (w.kind == WitnessKind::cycle && k < 3) {
        return "cycle with fewer than 3 vertices";
    }
    for (auto v : w.vertices) {
        if (v >= g.vertex_count()) {
            return "vertex " + std::to_string(v) + " out of range";
        }
    }
    auto sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return "repeated vertex";
    }
    const auto edges = w.kind == WitnessKind::cycle ? k : k - 1;
    if (w.colors.size() != edges) {
        return "color sequence has " + std::to_string(w.colors.size()) + " entries, expected " + std::to_string(edges);
    }
    for (std::size_t i = 0; i < edges; ++i) {
        const auto a = w.vertices[i];
        const auto b = w.vertices[(i + 1) % k];
        auto c = g.edge_color(a, b);
        if (!c) {
            return "non-edge {" + std::to_string(a) + "," + std::to_string(b) + "}";
        }
        if (*c != w.colors[i]) {
            return "edge {" + std::to_string(a) + "," + std::to_string(b) + "} has color " + std::to_string(*c) +
                   ", witness records " + std::to_string(w.colors[i]);
        }
    }
    auto colors = w.colors;
    std::sort(colors.begin(), colors.end());
    if (auto it = std::adjacent_find(colors.begin(), colors.end()); it != colors.end()) {
        return "color " + std::to_string(*it) + " repeats";
    }
    return std::nullopt;
}

std::string to_string(const RainbowWitness &w) {
    std::ostringstream os;
    os << (w.kind == WitnessKind::cycle ? "cycle" : "path") << ":";
    for (auto v : w.vertices) {
        os << ' ' << v;
    }
    os << " (colors:";
    for (auto c : w.colors) {
        os << ' ' << c;
    }
    os << ')';
    return os.str();
}

} // namespace rainbow
