#include "rainbow/rainbow_search.hpp"

#include "rainbow/color_set.hpp"
#include "rainbow/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

namespace rainbow {

namespace {

void check_length(std::size_t ell) {
    if (ell < 3) {
        throw PreconditionError("cycle length must be at least 3, got " + std::to_string(ell));
    }
}

/// Per-anchor pruning data: walk_[r][w] != 0 iff some walk of exactly r
/// edges joins w to the anchor inside the vertices >= anchor.
class AnchorTables {
public:
    AnchorTables(const EdgeColoredGraph &g, std::size_t ell) : g_(g), ell_(ell) {
        walk_.assign(ell, std::vector<char>(g.vertex_count(), 0));
        rank_to_anchor_.assign(g.vertex_count(), -1);
    }

    void reset(Vertex s) {
        if (anchor_ && *anchor_ == s) {
            return;
        }
        if (anchor_) {
            for (const auto &nb : g_.neighbors(*anchor_)) {
                rank_to_anchor_[nb.vertex] = -1;
            }
        }
        anchor_ = s;
        for (const auto &nb : g_.neighbors(s)) {
            rank_to_anchor_[nb.vertex] = static_cast<std::int64_t>(nb.rank);
        }
        std::fill(walk_[0].begin(), walk_[0].end(), 0);
        walk_[0][s] = 1;
        for (std::size_t r = 1; r < ell_; ++r) {
            auto &cur = walk_[r];
            std::fill(cur.begin(), cur.end(), 0);
            const auto &prev = walk_[r - 1];
            for (Vertex u = s; u < g_.vertex_count(); ++u) {
                if (!prev[u]) {
                    continue;
                }
                for (const auto &nb : g_.neighbors(u)) {
                    if (nb.vertex >= s) {
                        cur[nb.vertex] = 1;
                    }
                }
            }
        }
    }

    [[nodiscard]] bool reachable(std::size_t remaining, Vertex w) const { return walk_[remaining][w] != 0; }
    [[nodiscard]] std::int64_t rank_to_anchor(Vertex w) const { return rank_to_anchor_[w]; }

private:
    const EdgeColoredGraph &g_;
    std::size_t ell_;
    std::optional<Vertex> anchor_;
    std::vector<std::vector<char>> walk_;
    std::vector<std::int64_t> rank_to_anchor_;
};

template <typename ColorSet>
class CycleDfs {
public:
    CycleDfs(const EdgeColoredGraph &g, std::size_t ell, bool stop_at_first)
        : g_(g), ell_(ell), stop_at_first_(stop_at_first), tables_(g, ell), on_path_(g.vertex_count(), 0) {
        path_.reserve(ell);
        ranks_.reserve(ell);
    }

    /// Explores all cycles whose anchor is s and whose second vertex is v1.
    void run(Vertex s, Vertex v1, std::uint32_t first_rank) {
        tables_.reset(s);
        if (!tables_.reachable(ell_ - 1, v1)) {
            return;
        }
        path_.assign({s, v1});
        ranks_.assign({first_rank});
        on_path_[s] = on_path_[v1] = 1;
        used_.insert(first_rank);
        extend();
        used_.erase(first_rank);
        on_path_[s] = on_path_[v1] = 0;
    }

    [[nodiscard]] std::uint64_t count() const { return count_; }
    [[nodiscard]] bool found() const { return found_.has_value(); }
    [[nodiscard]] const std::optional<std::pair<std::vector<Vertex>, std::vector<std::uint32_t>>> &witness() const {
        return found_;
    }

private:
    void extend() {
        const auto u = path_.back();
        if (path_.size() == ell_) {
            const auto closing = tables_.rank_to_anchor(u);
            if (closing < 0 || used_.contains(static_cast<std::uint32_t>(closing))) {
                return;
            }
            ++count_;
            if (!found_) {
                auto ranks = ranks_;
                ranks.push_back(static_cast<std::uint32_t>(closing));
                found_.emplace(path_, std::move(ranks));
            }
            return;
        }
        const auto s = path_.front();
        const auto remaining = ell_ - path_.size();
        const bool last = path_.size() + 1 == ell_;
        for (const auto &nb : g_.neighbors(u)) {
            const auto w = nb.vertex;
            if (w <= s || on_path_[w] || used_.contains(nb.rank) || !tables_.reachable(remaining, w)) {
                continue;
            }
            if (last && w <= path_[1]) {
                continue;
            }
            path_.push_back(w);
            ranks_.push_back(nb.rank);
            on_path_[w] = 1;
            used_.insert(nb.rank);
            extend();
            used_.erase(nb.rank);
            on_path_[w] = 0;
            ranks_.pop_back();
            path_.pop_back();
            if (stop_at_first_ && found_) {
                return;
            }
        }
    }

    const EdgeColoredGraph &g_;
    std::size_t ell_;
    bool stop_at_first_;
    AnchorTables tables_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
    std::vector<std::uint32_t> ranks_;
    ColorSet used_;
    std::uint64_t count_ = 0;
    std::optional<std::pair<std::vector<Vertex>, std::vector<std::uint32_t>>> found_;
};

struct Task {
    Vertex s;
    Vertex v1;
    std::uint32_t rank;
};

std::vector<Task> anchored_first_edges(const EdgeColoredGraph &g) {
    std::vector<Task> tasks;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (const auto &nb : g.neighbors(s)) {
            if (nb.vertex > s) {
                tasks.push_back(Task{s, nb.vertex, nb.rank});
            }
        }
    }
    return tasks;
}

template <typename ColorSet>
std::optional<RainbowWitness> find_impl(const EdgeColoredGraph &g, std::size_t ell, unsigned threads) {
    const auto tasks = anchored_first_edges(g);
    const auto workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(tasks.size(), 1));
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    std::mutex mutex;
    std::optional<RainbowWitness> result;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        CycleDfs<ColorSet> dfs(g, ell, true);
        for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            // Tasks are claimed in order, so a found index only cancels later work.
            if (i > best.load()) {
                return;
            }
            dfs.run(tasks[i].s, tasks[i].v1, tasks[i].rank);
            if (dfs.found()) {
                std::lock_guard lock(mutex);
                if (i < best.load()) {
                    best.store(i);
                    const auto &[verts, ranks] = *dfs.witness();
                    RainbowWitness w{WitnessKind::cycle, verts, {}};
                    for (auto r : ranks) {
                        w.colors.push_back(g.palette()[r]);
                    }
                    result = std::move(w);
                }
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    return result;
}

template <typename ColorSet>
std::uint64_t count_impl(const EdgeColoredGraph &g, std::size_t ell, unsigned threads) {
    const auto tasks = anchored_first_edges(g);
    const auto workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(tasks.size(), 1));
    std::atomic<std::uint64_t> total{0};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        CycleDfs<ColorSet> dfs(g, ell, false);
        for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            dfs.run(tasks[i].s, tasks[i].v1, tasks[i].rank);
        }
        total.fetch_add(dfs.count());
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    return total.load();
}

} // namespace

std::optional<RainbowWitness> find_rainbow_cycle_exact(const EdgeColoredGraph &g, std::size_t ell,
                                                       SearchOptions options) {
    check_length(ell);
    if (ell > g.vertex_count() || ell > g.palette_size()) {
        return std::nullopt;
    }
    if (g.palette_size() <= FixedColorSet::capacity) {
        return find_impl<FixedColorSet>(g, ell, options.threads);
    }
    return find_impl<HashColorSet>(g, ell, options.threads);
}

std::uint64_t count_rainbow_cycles(const EdgeColoredGraph &g, std::size_t ell, SearchOptions options) {
    check_length(ell);
    if (ell > g.vertex_count() || ell > g.palette_size()) {
        return 0;
    }
    if (g.palette_size() <= FixedColorSet::capacity) {
        return count_impl<FixedColorSet>(g, ell, options.threads);
    }
    return count_impl<HashColorSet>(g, ell, options.threads);
}

// ---------------------------------------------------------------------------
// Layered reachability

const std::map<Vertex, RainbowWitness> &LayeredReach::layer(std::size_t i) const {
    if (i == 0 || i > layers.size()) {
        throw std::out_of_range("reach layer " + std::to_string(i) + " not built (max " +
                                std::to_string(layers.size()) + ")");
    }
    return layers[i - 1];
}

std::vector<Vertex> LayeredReach::members(std::size_t i) const {
    std::vector<Vertex> out;
    for (const auto &[y, w] : layer(i)) {
        out.push_back(y);
    }
    return out;
}

bool LayeredReach::contains(std::size_t i, Vertex y) const {
    const auto &l = layer(i);
    return l.find(y) != l.end();
}

namespace {

class ReachBuilder {
public:
    ReachBuilder(const EdgeColoredGraph &g, LayeredReach &reach)
        : g_(g), reach_(reach), forbidden_(g.palette_size(), 0), used_(g.palette_size(), 0),
          blocked_(g.vertex_count(), 0) {
        for (auto c : reach.forbidden) {
            if (auto r = g.color_rank(c)) {
                forbidden_[*r] = 1;
            }
        }
        for (auto a : reach.avoid) {
            blocked_[a] = 1;
        }
    }

    void exact() {
        path_.assign({reach_.anchor});
        colors_.clear();
        blocked_[reach_.anchor] = 1;
        record();
        dfs();
    }

    void greedy() {
        record_path({reach_.anchor}, {});
        for (std::size_t i = 1; i < reach_.max_layer; ++i) {
            for (const auto &[y, w] : reach_.layers[i - 1]) {
                mark(w, 1);
                for (const auto &nb : g_.neighbors(y)) {
                    if (blocked_[nb.vertex] || forbidden_[nb.rank] || used_[nb.rank] ||
                        reach_.layers[i].contains(nb.vertex)) {
                        continue;
                    }
                    auto verts = w.vertices;
                    verts.push_back(nb.vertex);
                    auto cols = w.colors;
                    cols.push_back(nb.color);
                    reach_.layers[i].emplace(nb.vertex, RainbowWitness{WitnessKind::path, std::move(verts),
                                                                        std::move(cols)});
                }
                mark(w, 0);
            }
        }
    }

private:
    void mark(const RainbowWitness &w, char value) {
        for (auto v : w.vertices) {
            blocked_[v] = value;
        }
        // The anchor is never re-entered; avoid-set members stay blocked.
        blocked_[reach_.anchor] = 1;
        if (value == 0) {
            for (auto a : reach_.avoid) {
                blocked_[a] = 1;
            }
        }
        for (auto c : w.colors) {
            used_[*g_.color_rank(c)] = value;
        }
    }

    void record_path(std::vector<Vertex> verts, std::vector<Color> cols) {
        const auto i = verts.size();
        const auto y = verts.back();
        reach_.layers[i - 1].emplace(y, RainbowWitness{WitnessKind::path, std::move(verts), std::move(cols)});
    }

    void record() {
        if (!reach_.layers[path_.size() - 1].contains(path_.back())) {
            record_path(path_, colors_);
        }
    }

    void dfs() {
        if (path_.size() == reach_.max_layer) {
            return;
        }
        for (const auto &nb : g_.neighbors(path_.back())) {
            if (blocked_[nb.vertex] || forbidden_[nb.rank] || used_[nb.rank]) {
                continue;
            }
            path_.push_back(nb.vertex);
            colors_.push_back(nb.color);
            blocked_[nb.vertex] = 1;
            used_[nb.rank] = 1;
            record();
            dfs();
            used_[nb.rank] = 0;
            blocked_[nb.vertex] = 0;
            colors_.pop_back();
            path_.pop_back();
        }
    }

    const EdgeColoredGraph &g_;
    LayeredReach &reach_;
    std::vector<char> forbidden_;
    std::vector<char> used_;
    std::vector<char> blocked_;
    std::vector<Vertex> path_;
    std::vector<Color> colors_;
};

} // namespace

LayeredReach layered_reach(const EdgeColoredGraph &g, Vertex anchor, std::span<const Color> forbidden,
                           std::size_t max_layer, std::span<const Vertex> avoid, ReachMode mode,
                           ReachOptions options) {
    if (anchor >= g.vertex_count()) {
        throw std::out_of_range("layered_reach: anchor out of range");
    }
    if (max_layer == 0) {
        throw PreconditionError("layered_reach: max_layer must be at least 1");
    }
    if (std::find(avoid.begin(), avoid.end(), anchor) != avoid.end()) {
        throw PreconditionError("layered_reach: anchor lies in the avoid set");
    }
    if (mode == ReachMode::exact && g.vertex_count() > options.exact_cap) {
        throw PreconditionError("layered_reach: exact mode refused for n = " + std::to_string(g.vertex_count()) +
                                " above the cap " + std::to_string(options.exact_cap) +
                                "; use greedy mode or raise the cap");
    }
    vertex_mask(g.vertex_count(), avoid);

    LayeredReach reach;
    reach.anchor = anchor;
    reach.forbidden.assign(forbidden.begin(), forbidden.end());
    std::sort(reach.forbidden.begin(), reach.forbidden.end());
    reach.forbidden.erase(std::unique(reach.forbidden.begin(), reach.forbidden.end()), reach.forbidden.end());
    reach.avoid.assign(avoid.begin(), avoid.end());
    std::sort(reach.avoid.begin(), reach.avoid.end());
    reach.avoid.erase(std::unique(reach.avoid.begin(), reach.avoid.end()), reach.avoid.end());
    reach.mode = mode;
    reach.max_layer = max_layer;
    reach.layers.resize(max_layer);

    ReachBuilder builder(g, reach);
    if (mode == ReachMode::exact) {
        builder.exact();
    } else {
        builder.greedy();
    }
    return reach;
}

std::vector<Color> repeating_colors(const EdgeColoredGraph &g, Vertex v, std::span<const Vertex> x_set) {
    std::vector<Color> colors;
    colors.reserve(x_set.size());
    auto xs = std::vector<Vertex>(x_set.begin(), x_set.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (auto x : xs) {
        auto c = g.edge_color(v, x);
        if (!c) {
            throw PreconditionError("vertex " + std::to_string(x) + " of X is not a neighbor of " +
                                    std::to_string(v));
        }
        colors.push_back(*c);
    }
    std::sort(colors.begin(), colors.end());
    std::vector<Color> out;
    for (std::size_t i = 1; i < colors.size(); ++i) {
        if (colors[i] == colors[i - 1] && (out.empty() || out.back() != colors[i])) {
            out.push_back(colors[i]);
        }
    }
    return out;
}

std::optional<RainbowWitness> close_cycle_from_reach(const EdgeColoredGraph &g, Vertex v,
                                                     std::span<const Vertex> x_set, const LayeredReach &reach,
                                                     std::span<const Color> c_rep, std::size_t ell) {
    check_length(ell);
    if (reach.anchor != v) {
        throw PreconditionError("close_cycle_from_reach: reach is anchored at " + std::to_string(reach.anchor) +
                                ", expected " + std::to_string(v));
    }
    if (reach.max_layer < ell - 1) {
        throw PreconditionError("close_cycle_from_reach: reach stops at layer " + std::to_string(reach.max_layer) +
                                ", need layer " + std::to_string(ell - 1));
    }
    for (auto c : c_rep) {
        if (!std::binary_search(reach.forbidden.begin(), reach.forbidden.end(), c)) {
            throw PreconditionError("close_cycle_from_reach: repeated color " + std::to_string(c) +
                                    " is not forbidden in the reach");
        }
    }
    std::vector<std::int64_t> color_to_v(g.vertex_count(), -1);
    for (auto x : x_set) {
        auto c = g.edge_color(v, x);
        if (!c) {
            throw PreconditionError("vertex " + std::to_string(x) + " of X is not a neighbor of " +
                                    std::to_string(v));
        }
        color_to_v[x] = *c;
    }

    for (const auto &[y, path] : reach.layer(ell - 1)) {
        auto on_path = [&](Vertex w) {
            return std::find(path.vertices.begin(), path.vertices.end(), w) != path.vertices.end();
        };
        auto path_color = [&](Color c) { return std::find(path.colors.begin(), path.colors.end(), c) != path.colors.end(); };
        for (const auto &nb : g.neighbors(y)) {
            const auto x = nb.vertex;
            if (color_to_v[x] < 0) {
                continue;
            }
            const auto cvx = static_cast<Color>(color_to_v[x]);
            if (on_path(x) || path_color(nb.color) || path_color(cvx) || nb.color == cvx) {
                continue;
            }
            auto verts = path.vertices;
            verts.push_back(x);
            return make_witness(g, WitnessKind::cycle, std::move(verts));
        }
    }
    return std::nullopt;
}

} // namespace rainbow
