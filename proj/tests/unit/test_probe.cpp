#include "../oracles.hpp"

#include "rainbow/constructions.hpp"
#include "rainbow/probe.hpp"
#include "rainbow/rainbow_search.hpp"

#include <doctest.h>

using namespace rainbow;

namespace {

std::uint64_t through_by_difference(const EdgeColoredGraph &g, Vertex u, Vertex v, Color c, std::size_t ell) {
    std::vector<ColoredEdge> with;
    std::vector<ColoredEdge> without;
    for (const auto &e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            continue;
        }
        with.push_back(e);
        without.push_back(e);
    }
    with.push_back({u, v, c});
    const auto n = g.vertex_count();
    return oracle::rainbow_cycle_count(oracle::Matrix(n, with), ell) -
           oracle::rainbow_cycle_count(oracle::Matrix(n, without), ell);
}

} // namespace

TEST_CASE("cycles through an edge match brute force") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(4, 8)(rng);
        const auto g = oracle::random_graph(rng, n, 0.6, 5);
        const auto u = static_cast<Vertex>(trial % n);
        const auto v = static_cast<Vertex>((u + 1 + trial % (n - 1)) % n);
        const auto c = static_cast<Color>(trial % 6);
        for (std::size_t ell = 3; ell <= std::min<std::size_t>(n, 6); ++ell) {
            CHECK(rainbow_cycles_through(g, u, v, c, ell) == through_by_difference(g, u, v, c, ell));
        }
    }
    CHECK_THROWS_AS(rainbow_cycles_through(rainbow_complete_graph(4), 1, 1, 0, 3), PreconditionError);
}

TEST_CASE("probe init names") {
    CHECK(parse_probe_init("bipartite") == ProbeInit::bipartite);
    CHECK(parse_probe_init("random") == ProbeInit::random);
    CHECK_FALSE(parse_probe_init("other").has_value());
    CHECK(to_string(ProbeInit::random) == "random");
}

TEST_CASE("probe objective order") {
    const ProbeObjective a{0, 3};
    const ProbeObjective b{0, 4};
    const ProbeObjective c{1, 9};
    CHECK(b.better_than(a));
    CHECK(a.better_than(c));
    CHECK_FALSE(a.better_than(a));
    CHECK(a.feasible());
    CHECK_FALSE(c.feasible());
}

TEST_CASE("probe bookkeeping is consistent") {
    for (auto init : {ProbeInit::bipartite, ProbeInit::random}) {
        for (std::size_t ell : {3, 4, 5}) {
            ProbeOptions opt;
            opt.budget = 3000;
            opt.seed = 5;
            opt.init = init;
            opt.chains = 2;
            opt.threads = 2;
            opt.cross_check_every = 200;
            const auto report = probe_counterexample(ell, 10, opt);
            REQUIRE(report.chains.size() == 2);
            for (const auto &chain : report.chains) {
                CHECK(chain.steps == 3000);
                CHECK(chain.cross_checks >= 15);
                const auto g = chain.graph();
                CHECK(count_rainbow_cycles(g, ell) == chain.objective.rainbow_cycles);
                CHECK(min_color_degree(g) == chain.objective.min_color_degree);
                const auto best = chain.best_graph();
                CHECK(count_rainbow_cycles(best, ell) == chain.best.rainbow_cycles);
                CHECK(min_color_degree(best) == chain.best.min_color_degree);
                CHECK(chain.best_feasible == chain.best.feasible());
                CHECK_FALSE(chain.objective.better_than(chain.best));
            }
        }
    }
}

TEST_CASE("probe is deterministic and independent of threads") {
    ProbeOptions opt;
    opt.budget = 2000;
    opt.seed = 11;
    opt.init = ProbeInit::random;
    opt.chains = 3;
    opt.threads = 1;
    const auto a = probe_counterexample(3, 9, opt);
    opt.threads = 3;
    const auto b = probe_counterexample(3, 9, opt);
    REQUIRE(a.chains.size() == b.chains.size());
    for (std::size_t i = 0; i < a.chains.size(); ++i) {
        CHECK(a.chains[i].best_coloring == b.chains[i].best_coloring);
        CHECK(a.chains[i].coloring == b.chains[i].coloring);
    }
    CHECK(a.best_chain == b.best_chain);
}

TEST_CASE("probe argument checks") {
    CHECK_THROWS_AS(probe_counterexample(2, 10), PreconditionError);
    CHECK_THROWS_AS(probe_counterexample(5, 4), PreconditionError);
    ProbeOptions opt;
    opt.chains = 0;
    CHECK_THROWS_AS(probe_counterexample(3, 10, opt), PreconditionError);
}
