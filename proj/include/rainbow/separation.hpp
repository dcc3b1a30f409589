#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/witness.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

/// Exact rational with positive denominator; compared by cross-multiplication.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator==(const Rational &a, const Rational &b) { return (a <=> b) == 0; }
};

std::string to_string(const Rational &r);

/// Thrown when a caller-supplied path witness is malformed.
class WitnessError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// --- separation and restriction -------------------------------------------

/// Colors a with a = c({x, y}) != c({v, x}) for some x in N(y) cap X.
/// Requires X subset of N(v) and y != v.
std::vector<Color> separating_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set, Vertex y);

/// Separating colors that appear on no edge {w, y} with w outside X.
std::vector<Color> restricted_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set, Vertex y);

// --- auxiliary digraphs ---------------------------------------------------

/// Directed graph on a subset of host vertices. Arcs are unique and stay
/// inside the declared vertex set.
class Digraph {
public:
    Digraph(std::size_t host_n, std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> arcs);

    [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
    [[nodiscard]] std::span<const std::pair<Vertex, Vertex>> arcs() const { return arcs_; }
    [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
    [[nodiscard]] std::size_t out_degree(Vertex v) const { return out_[v].size(); }
    [[nodiscard]] std::size_t in_degree(Vertex v) const { return in_[v].size(); }
    [[nodiscard]] std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    [[nodiscard]] std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    [[nodiscard]] bool contains(Vertex v) const { return v < member_.size() && member_[v]; }
    [[nodiscard]] bool has_arc(Vertex tail, Vertex head) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<char> member_;
    std::vector<std::pair<Vertex, Vertex>> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// On X cup Y: arc (x, y) for every edge {x, y}, x in X, y in Y, with
/// c({x, y}) = c({v, x}). Requires X subset of N(v), Y nonempty, v not in Y.
Digraph build_digraph_D(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set,
                        std::span<const Vertex> y_set);

/// The variant on N(z): arc (x, y) for edges of G[N(z)] with y in N_1(z) and
/// c({x, z}) = c({x, y}).
Digraph build_digraph_D_sec2(const EdgeColoredGraph &g, Vertex z);

/// On V: arc (x, y) for x in X+, {x, y} an edge, c({x, y}) != c({x, z}).
Digraph build_digraph_F(const EdgeColoredGraph &g, Vertex z, std::span<const Vertex> x_plus);

// --- averaging bound --------------------------------------------------------

struct SeparationRecord {
    Vertex y = 0;
    std::vector<Color> separating;
    std::vector<Color> restricted;

    [[nodiscard]] std::size_t sigma() const { return separating.size(); }
    [[nodiscard]] std::size_t rho() const { return restricted.size(); }
};

struct SeparationReport {
    Vertex v = 0;
    std::vector<Vertex> x_set;
    std::vector<Vertex> y_set;
    std::vector<SeparationRecord> records;

    std::size_t n = 0;
    std::size_t min_color_degree = 0;
    std::size_t replication = 0;
    /// |X cap N_1(v)|
    std::size_t x_unique = 0;

    std::int64_t sigma_sum = 0;
    std::int64_t rho_sum = 0;
    Rational sigma_average;
    Rational rho_average;
    /// delta^c + |X| - n - (R - 1) |X cap N_1(v)| / |Y|
    Rational bound;

    /// Bookkeeping on D: arc count, every tail in N_1(v), out-degrees <= R - 1.
    std::size_t d_arcs = 0;
    bool d_tails_unique = true;
    bool d_out_degree_ok = true;

    bool edge_minimal = false;
    /// sigma_average >= rho_average >= bound (only meaningful when edge_minimal).
    bool holds = false;
};

/// Computes every quantity without requiring edge-minimality.
SeparationReport separation_report(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set,
                                   std::span<const Vertex> y_set, unsigned threads = 1);

/// As separation_report, but refuses graphs that contain a monochromatic
/// 3-edge path (which edge-minimal graphs never do).
SeparationReport check_averaging_bound(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set,
                                       std::span<const Vertex> y_set, unsigned threads = 1);

// --- hypothesis-certified checks ------------------------------------------

/// A graph together with the facts the conditional statements need:
/// edge-minimality and the presence or absence of a rainbow ell-cycle,
/// both established here rather than trusted from the caller.
class CertifiedGraph {
public:
    static CertifiedGraph certify(EdgeColoredGraph g, std::size_t ell, SearchOptions options = {});

    [[nodiscard]] const EdgeColoredGraph &graph() const { return g_; }
    [[nodiscard]] std::size_t ell() const { return ell_; }
    [[nodiscard]] bool edge_minimal() const { return edge_minimal_; }
    [[nodiscard]] bool rainbow_cycle_free() const { return !cycle_.has_value(); }
    [[nodiscard]] const std::optional<RainbowWitness> &cycle() const { return cycle_; }

private:
    EdgeColoredGraph g_;
    std::size_t ell_ = 3;
    bool edge_minimal_ = false;
    std::optional<RainbowWitness> cycle_;
};

enum class Verdict { holds, violated, vacuous };

std::string to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::vacuous;
    std::string detail;
};

struct SigmaCapRecord {
    Vertex y = 0;
    std::size_t sigma = 0;
    std::size_t cap = 0;
    bool holds = false;
};

/// sigma_{v,X}(y) <= 3 ell for every y carrying an (ell-1)-vertex,
/// C_rep-free rainbow {v, y}-path. Throws PreconditionError unless the graph
/// is certified edge-minimal and rainbow-ell-cycle-free and C_rep is exactly
/// the set of colors repeating from v into X; WitnessError names a broken path.
std::vector<SigmaCapRecord> check_sigma_cap(const CertifiedGraph &cg, Vertex v, std::span<const Vertex> x_set,
                                            std::span<const Color> c_rep,
                                            std::span<const std::pair<Vertex, RainbowWitness>> y_paths);

/// delta^c < n/2 or Delta < delta^c + 4R + 3 ell, for certified graphs with
/// delta^c >= 5R + 27 ell; vacuous otherwise.
CheckResult check_maxdeg_bound(const CertifiedGraph &cg);

/// delta^c <= n/2 + 3 ell for graphs without a rainbow ell-cycle; vacuous otherwise.
CheckResult check_delta_bound(const CertifiedGraph &cg);

/// The bound delta^c <= n/2 + max{0, 3 ell + (R-1)((n+1)/(2|Y|) - 1)} with
/// Y the layer ell-1 of zeta-free rainbow paths from z, where (z, zeta)
/// attains R. Any nonempty subset of the true Y satisfies it, so greedy
/// layers are admissible too.
CheckResult check_replication_delta_bound(const CertifiedGraph &cg, ReachMode mode = ReachMode::exact,
                                          ReachOptions options = {});

/// |Y_{ell-1}(v, C_T)| >= (3/2)(delta^c - |C_T| - 4 ell) for a triangle T
/// through v and C_T disjoint from the colors of T.
CheckResult check_triangle_reach_bound(const CertifiedGraph &cg, std::span<const Vertex> triangle, Vertex v,
                                       std::span<const Color> c_t, ReachMode mode = ReachMode::exact,
                                       ReachOptions options = {});

} // namespace rainbow
