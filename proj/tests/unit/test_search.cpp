#include "../oracles.hpp"

#include "rainbow/constructions.hpp"
#include "rainbow/rainbow_search.hpp"

#include <doctest.h>

using namespace rainbow;

TEST_CASE("small counts") {
    CHECK(count_rainbow_cycles(rainbow_complete_bipartite(3, 3), 4) == 9);
    CHECK(count_rainbow_cycles(rainbow_complete_graph(4), 3) == 4);
    CHECK(count_rainbow_cycles(rainbow_complete_graph(5), 5) == 12);
    // a monochromatic triangle is no rainbow triangle
    CHECK(count_rainbow_cycles(build_graph(3, {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}}), 3) == 0);
}

TEST_CASE("parameter checks and trivial answers") {
    const auto g = rainbow_complete_graph(4);
    CHECK_THROWS_AS(find_rainbow_cycle_exact(g, 2), PreconditionError);
    CHECK_FALSE(find_rainbow_cycle_exact(g, 5).has_value());
    // two colors cannot make a rainbow triangle
    CHECK_FALSE(find_rainbow_cycle_exact(build_graph(3, {{0, 1, 0}, {0, 2, 1}, {1, 2, 0}}), 3).has_value());
}

TEST_CASE("exact search agrees with permutation enumeration") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(3, 8)(rng);
        const auto ell = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(n, 6))(rng);
        const auto g = oracle::random_graph(rng, n, 0.6, 2 + trial % 8);
        const auto expected = oracle::rainbow_cycle_count(oracle::Matrix(g), ell);
        CHECK(count_rainbow_cycles(g, ell) == expected);
        const auto w = find_rainbow_cycle_exact(g, ell);
        CHECK(w.has_value() == (expected > 0));
        if (w) {
            CHECK(is_rainbow_cycle(g, *w, ell));
        }
    }
}

TEST_CASE("answers do not depend on the thread count") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracle::random_graph(rng, 12, 0.5, 6);
        for (std::size_t ell = 3; ell <= 6; ++ell) {
            const auto one = find_rainbow_cycle_exact(g, ell, {1});
            const auto many = find_rainbow_cycle_exact(g, ell, {4});
            CHECK(one == many);
            CHECK(count_rainbow_cycles(g, ell, {1}) == count_rainbow_cycles(g, ell, {3}));
        }
    }
}

TEST_CASE("balanced rainbow bipartite graphs have no odd rainbow cycles") {
    for (std::size_t n = 6; n <= 16; ++n) {
        const auto g = rainbow_complete_bipartite(n / 2, n - n / 2);
        CHECK_FALSE(find_rainbow_cycle_exact(g, 3).has_value());
        CHECK_FALSE(find_rainbow_cycle_exact(g, 5).has_value());
        CHECK(find_rainbow_cycle_exact(g, 4).has_value());
    }
}

TEST_CASE("exact reach layers match path enumeration") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
        const auto g = oracle::random_graph(rng, n, 0.5, 3 + trial % 5);
        const oracle::Matrix m(g);
        const auto anchor = static_cast<Vertex>(trial % n);
        std::vector<Color> forbidden;
        if (trial % 2 == 0) {
            forbidden.push_back(static_cast<Color>(trial % 3));
        }
        std::vector<Vertex> avoid;
        if (trial % 3 == 0 && n > 2) {
            avoid.push_back(static_cast<Vertex>((anchor + 1) % n));
        }
        const auto layers = std::min<std::size_t>(n, 5);
        const auto exact = layered_reach(g, anchor, forbidden, layers, avoid, ReachMode::exact);
        const auto greedy = layered_reach(g, anchor, forbidden, layers, avoid, ReachMode::greedy);
        for (std::size_t i = 1; i <= layers; ++i) {
            const auto want = oracle::reach_layer(m, anchor, forbidden, avoid, i);
            const auto got = exact.members(i);
            CHECK(std::set<Vertex>(got.begin(), got.end()) == want);
            for (const auto &[y, w] : greedy.layer(i)) {
                CHECK(want.contains(y));
                CHECK(is_valid_witness(g, w));
                CHECK(w.vertices.size() == i);
                CHECK(w.vertices.front() == anchor);
                CHECK(w.vertices.back() == y);
            }
            for (const auto &[y, w] : exact.layer(i)) {
                CHECK(is_valid_witness(g, w));
                for (auto c : w.colors) {
                    CHECK(std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end());
                }
            }
        }
    }
}

TEST_CASE("reach layer examples and errors") {
    const auto k5 = rainbow_complete_graph(5);
    const auto reach = layered_reach(k5, 0, {}, 3, {}, ReachMode::exact);
    CHECK(reach.members(1) == std::vector<Vertex>{0});
    CHECK(reach.members(3) == std::vector<Vertex>{1, 2, 3, 4});
    CHECK_THROWS_AS((void)reach.layer(4), std::out_of_range);
    const std::vector<Vertex> self{0};
    CHECK_THROWS_AS(layered_reach(k5, 0, {}, 3, self, ReachMode::greedy), PreconditionError);
    CHECK_THROWS_AS(layered_reach(rainbow_complete_graph(20), 0, {}, 3, {}, ReachMode::exact), PreconditionError);
    CHECK_NOTHROW(layered_reach(rainbow_complete_graph(20), 0, {}, 3, {}, ReachMode::exact, {20}));
}

TEST_CASE("repeating colors and closing a cycle") {
    // star at 0 with colors 5, 5, 6 plus a rainbow triangle 0-3-4
    const auto g = build_graph(5, {{0, 1, 5}, {0, 2, 5}, {0, 3, 6}, {0, 4, 7}, {3, 4, 8}, {1, 2, 9}});
    const std::vector<Vertex> x{1, 2, 3};
    CHECK(repeating_colors(g, 0, x) == std::vector<Color>{5});
    const std::vector<Vertex> bad{1, 0};
    CHECK_THROWS_AS(repeating_colors(g, 0, bad), PreconditionError);

    const std::vector<Color> c_rep{5};
    const auto reach = layered_reach(g, 0, c_rep, 2, {}, ReachMode::exact);
    const std::vector<Vertex> x_all{1, 2, 3, 4};
    const auto w = close_cycle_from_reach(g, 0, x_all, reach, c_rep, 3);
    REQUIRE(w.has_value());
    CHECK(is_rainbow_cycle(g, *w, 3));
    const auto unforbidden = layered_reach(g, 0, {}, 2, {}, ReachMode::exact);
    CHECK_THROWS_AS(close_cycle_from_reach(g, 0, x_all, unforbidden, c_rep, 3), PreconditionError);
    CHECK_THROWS_AS(close_cycle_from_reach(g, 0, x_all, reach, c_rep, 4), PreconditionError);
}

TEST_CASE("closing is sound on random graphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(4, 10)(rng);
        const auto g = oracle::random_graph(rng, n, 0.6, 4 + trial % 6);
        const auto v = static_cast<Vertex>(trial % n);
        std::vector<Vertex> x;
        for (const auto &nb : g.neighbors(v)) {
            x.push_back(nb.vertex);
        }
        const auto c_rep = repeating_colors(g, v, x);
        for (std::size_t ell = 3; ell <= std::min<std::size_t>(n, 5); ++ell) {
            const auto reach = layered_reach(g, v, c_rep, ell - 1, {}, ReachMode::exact);
            if (auto w = close_cycle_from_reach(g, v, x, reach, c_rep, ell)) {
                CHECK(is_rainbow_cycle(g, *w, ell));
            }
        }
    }
}
