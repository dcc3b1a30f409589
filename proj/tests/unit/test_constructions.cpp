#include "../oracles.hpp"

#include "rainbow/constructions.hpp"
#include "rainbow/minimality.hpp"
#include "rainbow/rainbow_search.hpp"

#include <doctest.h>

using namespace rainbow;

TEST_CASE("rainbow complete bipartite graphs") {
    const auto g = rainbow_complete_bipartite(3, 4);
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 12);
    CHECK(min_color_degree(g) == 3);
    CHECK(replication_number(g) == 1);
    CHECK(g.palette().size() == 12);
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 3));
    CHECK(is_edge_minimal(g));
    CHECK_THROWS_AS(rainbow_complete_bipartite(0, 3), PreconditionError);
}

TEST_CASE("rainbow complete graphs") {
    const auto g = rainbow_complete_graph(6);
    CHECK(g.edge_count() == 15);
    CHECK(min_color_degree(g) == 5);
    CHECK(oracle::rainbow_cycle_count(oracle::Matrix(g), 3) == 20);
}

TEST_CASE("matched bipartite graphs") {
    for (std::size_t m : {3, 5, 7, 11}) {
        const auto g = matched_bipartite(m);
        CHECK(g.vertex_count() == 2 * m + 1);
        CHECK(min_color_degree(g) == m + 1);
        CHECK(replication_number(g) == 1);
        CHECK(g.edge_color(0, 1) == Color{0});
        CHECK(is_edge_minimal(g));
        for (Vertex b = static_cast<Vertex>(m + 1); b <= 2 * m; ++b) {
            for (Vertex c = b + 1; c <= 2 * m; ++c) {
                CHECK_FALSE(g.adjacent(b, c));
            }
        }
    }
    CHECK_THROWS_AS(matched_bipartite(4), PreconditionError);
}

TEST_CASE("random graphs are deterministic in the seed") {
    const auto a = random_colored_graph(30, 0.4, 5, 9);
    const auto b = random_colored_graph(30, 0.4, 5, 9);
    const auto c = random_colored_graph(30, 0.4, 5, 10);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    for (auto col : a.palette()) {
        CHECK(col < 5);
    }
    const auto d = random_colored_graph(20, 0.5, 1000, 3, {.distinct_colors = true});
    CHECK(replication_number(d) == 1);
    CHECK(d.palette().size() == d.edge_count());
    CHECK(random_colored_graph(10, 1.0, 2, 1).edge_count() == 45);
    CHECK(random_colored_graph(10, 0.0, 2, 1).edge_count() == 0);
}

TEST_CASE("boosting reaches the target and keeps existing colors") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(4, 30)(rng);
        const auto g = oracle::random_graph(rng, n, 0.5, 4);
        const auto target = std::uniform_int_distribution<std::size_t>(1, n / 2)(rng);
        EdgeColoredGraph h;
        try {
            h = boost_min_color_degree(g, target, trial);
        } catch (const InfeasibleTarget &) {
            continue;
        }
        CHECK(oracle::min_color_degree(oracle::Matrix(h)) >= target);
        for (const auto &e : g.edges()) {
            CHECK(h.edge_color(e.u, e.v) == e.color);
        }
        CHECK(h == boost_min_color_degree(g, target, trial));
    }
    CHECK_THROWS_AS(boost_min_color_degree(rainbow_complete_graph(4), 4, 0), InfeasibleTarget);
    // the centre of a monochromatic star cannot gain colors once saturated
    const auto star = build_graph(4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}});
    CHECK_THROWS_AS(boost_min_color_degree(star, 2, 0), InfeasibleTarget);
}
