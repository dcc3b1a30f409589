#include "rainbow/separation.hpp"

#include "rainbow/minimality.hpp"
#include "rainbow/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

std::string to_string(const Rational &r) {
    const auto g = std::gcd(r.num, r.den);
    const auto num = g == 0 ? r.num : r.num / g;
    const auto den = g == 0 ? r.den : r.den / g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::violated:
        return "violated";
    case Verdict::vacuous:
        return "vacuous";
    }
    return "unknown";
}

namespace {

void sort_unique(std::vector<Color> &cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

/// c({v, x}) indexed by x, -1 outside X. Validates X subset of N(v).
std::vector<std::int64_t> anchor_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set) {
    if (v >= g.vertex_count()) {
        throw std::out_of_range("anchor " + std::to_string(v) + " out of range");
    }
    std::vector<std::int64_t> to_v(g.vertex_count(), -1);
    for (auto x : x_set) {
        if (x >= g.vertex_count()) {
            throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
        }
        auto c = g.edge_color(v, x);
        if (!c) {
            throw PreconditionError("X is not contained in N(" + std::to_string(v) + "): vertex " +
                                    std::to_string(x) + " is not a neighbor");
        }
        to_v[x] = *c;
    }
    return to_v;
}

SeparationRecord record_for(const EdgeColoredGraph &g, const std::vector<std::int64_t> &to_v, Vertex y) {
    SeparationRecord rec;
    rec.y = y;
    std::vector<Color> outside;
    for (const auto &nb : g.neighbors(y)) {
        if (to_v[nb.vertex] < 0) {
            outside.push_back(nb.color);
        } else if (static_cast<std::int64_t>(nb.color) != to_v[nb.vertex]) {
            rec.separating.push_back(nb.color);
        }
    }
    sort_unique(rec.separating);
    sort_unique(outside);
    std::set_difference(rec.separating.begin(), rec.separating.end(), outside.begin(), outside.end(),
                        std::back_inserter(rec.restricted));
    return rec;
}

void check_y(const EdgeColoredGraph &g, Vertex v, Vertex y) {
    if (y >= g.vertex_count()) {
        throw std::out_of_range("vertex " + std::to_string(y) + " out of range");
    }
    if (y == v) {
        throw PreconditionError("separation is defined for y != v");
    }
}

std::vector<Vertex> sorted_unique(std::span<const Vertex> vs) {
    std::vector<Vertex> out(vs.begin(), vs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<Color> separating_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set, Vertex y) {
    const auto to_v = anchor_colors(g, v, x_set);
    check_y(g, v, y);
    return record_for(g, to_v, y).separating;
}

std::vector<Color> restricted_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set, Vertex y) {
    const auto to_v = anchor_colors(g, v, x_set);
    check_y(g, v, y);
    return record_for(g, to_v, y).restricted;
}

// ---------------------------------------------------------------------------

Digraph::Digraph(std::size_t host_n, std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> arcs)
    : vertices_(std::move(vertices)), member_(host_n, 0), arcs_(std::move(arcs)), out_(host_n), in_(host_n) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (auto v : vertices_) {
        if (v >= host_n) {
            throw std::out_of_range("digraph vertex " + std::to_string(v) + " out of range");
        }
        member_[v] = 1;
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
        throw PreconditionError("digraph has a duplicate arc");
    }
    for (const auto &[t, h] : arcs_) {
        if (!contains(t) || !contains(h)) {
            throw PreconditionError("arc (" + std::to_string(t) + "," + std::to_string(h) +
                                    ") leaves the vertex set");
        }
        out_[t].push_back(h);
        in_[h].push_back(t);
    }
    for (auto &l : in_) {
        std::sort(l.begin(), l.end());
    }
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    if (tail >= out_.size()) {
        return false;
    }
    return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

Digraph build_digraph_D(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set,
                        std::span<const Vertex> y_set) {
    const auto to_v = anchor_colors(g, v, x_set);
    if (y_set.empty()) {
        throw PreconditionError("build_digraph_D: Y must be nonempty");
    }
    const auto ys = sorted_unique(y_set);
    const auto in_y = vertex_mask(g.vertex_count(), ys);
    if (in_y[v]) {
        throw PreconditionError("build_digraph_D: anchor must not lie in Y");
    }
    const auto xs = sorted_unique(x_set);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (auto x : xs) {
        for (const auto &nb : g.neighbors(x)) {
            if (in_y[nb.vertex] && static_cast<std::int64_t>(nb.color) == to_v[x]) {
                arcs.emplace_back(x, nb.vertex);
            }
        }
    }
    std::vector<Vertex> verts = xs;
    verts.insert(verts.end(), ys.begin(), ys.end());
    return Digraph(g.vertex_count(), std::move(verts), std::move(arcs));
}

Digraph build_digraph_D_sec2(const EdgeColoredGraph &g, Vertex z) {
    std::vector<Vertex> nz;
    for (const auto &nb : g.neighbors(z)) {
        nz.push_back(nb.vertex);
    }
    const auto to_z = anchor_colors(g, z, nz);
    const auto unique = g.unique_neighborhood(z);
    const auto in_unique = vertex_mask(g.vertex_count(), unique);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (auto x : nz) {
        for (const auto &nb : g.neighbors(x)) {
            if (in_unique[nb.vertex] && static_cast<std::int64_t>(nb.color) == to_z[x]) {
                arcs.emplace_back(x, nb.vertex);
            }
        }
    }
    return Digraph(g.vertex_count(), std::move(nz), std::move(arcs));
}

Digraph build_digraph_F(const EdgeColoredGraph &g, Vertex z, std::span<const Vertex> x_plus) {
    const auto to_z = anchor_colors(g, z, x_plus);
    const auto xs = sorted_unique(x_plus);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (auto x : xs) {
        for (const auto &nb : g.neighbors(x)) {
            if (static_cast<std::int64_t>(nb.color) != to_z[x]) {
                arcs.emplace_back(x, nb.vertex);
            }
        }
    }
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    return Digraph(g.vertex_count(), std::move(all), std::move(arcs));
}

// ---------------------------------------------------------------------------

SeparationReport separation_report(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set,
                                   std::span<const Vertex> y_set, unsigned threads) {
    const auto to_v = anchor_colors(g, v, x_set);
    SeparationReport rep;
    rep.v = v;
    rep.x_set = sorted_unique(x_set);
    rep.y_set = sorted_unique(y_set);
    if (rep.y_set.empty()) {
        throw PreconditionError("Y must be nonempty");
    }
    for (auto y : rep.y_set) {
        check_y(g, v, y);
    }
    rep.n = g.vertex_count();
    rep.min_color_degree = min_color_degree(g);
    rep.replication = replication_number(g);
    const auto unique = g.unique_neighborhood(v);
    rep.x_unique = static_cast<std::size_t>(std::count_if(rep.x_set.begin(), rep.x_set.end(), [&](Vertex x) {
        return std::binary_search(unique.begin(), unique.end(), x);
    }));

    rep.records.resize(rep.y_set.size());
    parallel_for(rep.y_set.size(), threads, [&](std::size_t i) { rep.records[i] = record_for(g, to_v, rep.y_set[i]); });
    for (const auto &r : rep.records) {
        rep.sigma_sum += static_cast<std::int64_t>(r.sigma());
        rep.rho_sum += static_cast<std::int64_t>(r.rho());
    }
    const auto ny = static_cast<std::int64_t>(rep.y_set.size());
    rep.sigma_average = Rational{rep.sigma_sum, ny};
    rep.rho_average = Rational{rep.rho_sum, ny};
    const auto base = static_cast<std::int64_t>(rep.min_color_degree) + static_cast<std::int64_t>(rep.x_set.size()) -
                      static_cast<std::int64_t>(rep.n);
    rep.bound = Rational{ny * base - (static_cast<std::int64_t>(rep.replication) - 1) *
                                         static_cast<std::int64_t>(rep.x_unique),
                         ny};

    const auto d = build_digraph_D(g, v, rep.x_set, rep.y_set);
    rep.d_arcs = d.arc_count();
    for (auto x : rep.x_set) {
        if (d.out_degree(x) == 0) {
            continue;
        }
        if (!std::binary_search(unique.begin(), unique.end(), x)) {
            rep.d_tails_unique = false;
        }
        if (d.out_degree(x) + 1 > rep.replication) {
            rep.d_out_degree_ok = false;
        }
    }

    rep.edge_minimal = check_no_mono_3path(g);
    rep.holds = rep.sigma_average >= rep.rho_average && rep.rho_average >= rep.bound;
    return rep;
}

SeparationReport check_averaging_bound(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set,
                                       std::span<const Vertex> y_set, unsigned threads) {
    if (!check_no_mono_3path(g)) {
        throw PreconditionError("averaging bound requires an edge-minimal graph (found a monochromatic 3-edge path)");
    }
    return separation_report(g, v, x_set, y_set, threads);
}

// ---------------------------------------------------------------------------

CertifiedGraph CertifiedGraph::certify(EdgeColoredGraph g, std::size_t ell, SearchOptions options) {
    CertifiedGraph cg;
    cg.ell_ = ell;
    cg.edge_minimal_ = is_edge_minimal(g);
    cg.cycle_ = find_rainbow_cycle_exact(g, ell, options);
    cg.g_ = std::move(g);
    return cg;
}

namespace {

void require_certified(const CertifiedGraph &cg, const char *what) {
    if (!cg.edge_minimal()) {
        throw PreconditionError(std::string(what) + " requires an edge-minimal graph");
    }
    if (!cg.rainbow_cycle_free()) {
        throw PreconditionError(std::string(what) + " requires a graph without a rainbow " +
                                std::to_string(cg.ell()) + "-cycle; found " + to_string(*cg.cycle()));
    }
}

std::optional<std::string> hypotheses_missing(const CertifiedGraph &cg) {
    if (!cg.edge_minimal()) {
        return "graph is not edge-minimal";
    }
    if (!cg.rainbow_cycle_free()) {
        return "graph has a rainbow " + std::to_string(cg.ell()) + "-cycle";
    }
    return std::nullopt;
}

} // namespace

std::vector<SigmaCapRecord> check_sigma_cap(const CertifiedGraph &cg, Vertex v, std::span<const Vertex> x_set,
                                            std::span<const Color> c_rep,
                                            std::span<const std::pair<Vertex, RainbowWitness>> y_paths) {
    require_certified(cg, "check_sigma_cap");
    const auto &g = cg.graph();
    const auto ell = cg.ell();
    const auto to_v = anchor_colors(g, v, x_set);
    auto expected = repeating_colors(g, v, x_set);
    std::vector<Color> given(c_rep.begin(), c_rep.end());
    sort_unique(given);
    if (given != expected) {
        throw PreconditionError("C_rep must be exactly the colors repeating from v into X");
    }

    std::vector<SigmaCapRecord> out;
    out.reserve(y_paths.size());
    for (const auto &[y, path] : y_paths) {
        const auto label = "witness for y = " + std::to_string(y) + ": ";
        if (auto defect = witness_defect(g, path)) {
            throw WitnessError(label + *defect);
        }
        if (path.kind != WitnessKind::path || path.vertices.size() != ell - 1) {
            throw WitnessError(label + "expected a path on " + std::to_string(ell - 1) + " vertices");
        }
        if (path.vertices.front() != v || path.vertices.back() != y) {
            throw WitnessError(label + "path must run from v to y");
        }
        for (auto c : path.colors) {
            if (std::binary_search(given.begin(), given.end(), c)) {
                throw WitnessError(label + "path uses repeated color " + std::to_string(c));
            }
        }
        const auto sigma = record_for(g, to_v, y).sigma();
        out.push_back(SigmaCapRecord{y, sigma, 3 * ell, sigma <= 3 * ell});
    }
    return out;
}

CheckResult check_maxdeg_bound(const CertifiedGraph &cg) {
    if (auto missing = hypotheses_missing(cg)) {
        return {Verdict::vacuous, *missing};
    }
    const auto &g = cg.graph();
    if (g.vertex_count() == 0 || g.edge_count() == 0) {
        return {Verdict::vacuous, "graph has no edges"};
    }
    const auto delta = min_color_degree(g);
    const auto r = replication_number(g);
    const auto ell = cg.ell();
    if (delta < 5 * r + 27 * ell) {
        return {Verdict::vacuous, "delta^c = " + std::to_string(delta) + " < 5R + 27 ell = " +
                                      std::to_string(5 * r + 27 * ell)};
    }
    const auto n = g.vertex_count();
    const auto max_deg = g.max_degree();
    const bool ok = 2 * delta < n || max_deg < delta + 4 * r + 3 * ell;
    return {ok ? Verdict::holds : Verdict::violated,
            "n = " + std::to_string(n) + ", delta^c = " + std::to_string(delta) + ", R = " + std::to_string(r) +
                ", Delta = " + std::to_string(max_deg)};
}

CheckResult check_delta_bound(const CertifiedGraph &cg) {
    if (!cg.rainbow_cycle_free()) {
        return {Verdict::vacuous, "graph has a rainbow " + std::to_string(cg.ell()) + "-cycle"};
    }
    const auto &g = cg.graph();
    if (g.vertex_count() == 0) {
        return {Verdict::vacuous, "empty graph"};
    }
    const auto delta = min_color_degree(g);
    const auto n = g.vertex_count();
    const bool ok = 2 * delta <= n + 6 * cg.ell();
    return {ok ? Verdict::holds : Verdict::violated,
            "n = " + std::to_string(n) + ", delta^c = " + std::to_string(delta)};
}

CheckResult check_replication_delta_bound(const CertifiedGraph &cg, ReachMode mode, ReachOptions options) {
    if (auto missing = hypotheses_missing(cg)) {
        return {Verdict::vacuous, *missing};
    }
    const auto &g = cg.graph();
    if (g.edge_count() == 0) {
        return {Verdict::vacuous, "graph has no edges"};
    }
    const auto ell = cg.ell();
    const auto rep = replication(g);
    const std::vector<Color> forbidden{rep.color};
    const auto reach = layered_reach(g, rep.vertex, forbidden, ell - 1, {}, mode, options);
    const auto y = static_cast<std::int64_t>(reach.layer(ell - 1).size());
    if (y == 0) {
        return {Verdict::vacuous, "Y is empty"};
    }
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const auto delta = static_cast<std::int64_t>(min_color_degree(g));
    const auto r = static_cast<std::int64_t>(rep.r);
    const auto l = static_cast<std::int64_t>(ell);
    // 2|Y| delta <= n|Y| + max{0, 6 ell |Y| + (R - 1)(n + 1 - 2|Y|)}
    const auto lhs = 2 * y * delta;
    const auto rhs = n * y + std::max<std::int64_t>(0, 6 * l * y + (r - 1) * (n + 1 - 2 * y));
    return {lhs <= rhs ? Verdict::holds : Verdict::violated,
            "|Y| = " + std::to_string(y) + ", delta^c = " + std::to_string(delta) + ", R = " + std::to_string(r)};
}

CheckResult check_triangle_reach_bound(const CertifiedGraph &cg, std::span<const Vertex> triangle, Vertex v,
                                       std::span<const Color> c_t, ReachMode mode, ReachOptions options) {
    const auto &g = cg.graph();
    if (triangle.size() != 3) {
        throw PreconditionError("triangle must have three vertices");
    }
    std::vector<Color> tri_colors;
    for (std::size_t i = 0; i < 3; ++i) {
        auto c = g.edge_color(triangle[i], triangle[(i + 1) % 3]);
        if (!c || triangle[i] == triangle[(i + 1) % 3]) {
            throw PreconditionError("vertices do not span a triangle");
        }
        tri_colors.push_back(*c);
    }
    if (std::find(triangle.begin(), triangle.end(), v) == triangle.end()) {
        throw PreconditionError("v must lie on the triangle");
    }
    for (auto c : c_t) {
        if (std::find(tri_colors.begin(), tri_colors.end(), c) != tri_colors.end()) {
            throw PreconditionError("C_T must avoid the triangle colors");
        }
    }
    if (auto missing = hypotheses_missing(cg)) {
        return {Verdict::vacuous, *missing};
    }
    std::vector<Color> ct(c_t.begin(), c_t.end());
    sort_unique(ct);
    const auto ell = cg.ell();
    const auto delta = static_cast<std::int64_t>(min_color_degree(g));
    // 2|Y| >= 3(delta - |C_T| - 4 ell)
    const auto rhs = 3 * (delta - static_cast<std::int64_t>(ct.size()) - 4 * static_cast<std::int64_t>(ell));
    if (rhs <= 0) {
        return {Verdict::vacuous, "lower bound is non-positive"};
    }
    const auto reach = layered_reach(g, v, ct, ell - 1, {}, mode, options);
    const auto y = static_cast<std::int64_t>(reach.layer(ell - 1).size());
    return {2 * y >= rhs ? Verdict::holds : Verdict::violated,
            "|Y| = " + std::to_string(y) + ", delta^c = " + std::to_string(delta) + ", |C_T| = " +
                std::to_string(ct.size())};
}

} // namespace rainbow
