#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <rainbow/dominating.hpp>
#include <rainbow/generators.hpp>
#include <rainbow/metrics.hpp>

using namespace rainbow;

namespace {

int domination_radius(const Graph &g, const VertexSet &d)
{
    auto fw = oracle::floyd_warshall(g);
    int worst = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int best = oracle::inf;
        for (auto x : d.members())
            best = std::min(best, fw[v][x]);
        worst = std::max(worst, best);
    }
    return worst;
}

bool induces_connected(const Graph &g, const VertexSet &d)
{
    std::vector<bool> removed(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        removed[v] = !d.contains(v);
    return !d.empty() && oracle::connected_without(g, removed);
}

// The colouring restricted to G[set], colour ids preserved.
bool rainbow_on(const Graph &g, const VertexSet &set, const EdgeColouring &c)
{
    auto sub = induced_subgraph(g, set);
    std::vector<int> colours;
    for (auto e : sub.to_parent_edge)
        colours.push_back(c[e]);
    return oracle::rainbow_connected(sub.graph, colours);
}

DominatingSet path_set(int n, std::vector<Vertex> members, int radius)
{
    return DominatingSet{VertexSet(n, std::span<const Vertex>(members)), radius, {}};
}

} // namespace

TEST_CASE("growth on complete graphs stops at the start vertex")
{
    auto d = grow_2l_step_dominating(complete_graph(6), GrowthParams{1, 5});
    CHECK(d.vertices.size() == 1);
    CHECK(d.trace.empty());
    CHECK(d.step_radius == 2);
}

TEST_CASE("growth on the 3-cube")
{
    auto q3 = hypercube_graph(3);
    auto d = grow_2l_step_dominating(q3, GrowthParams{1, 3});
    CHECK(d.vertices.size() <= 3 * 8 / 4);
    CHECK(d.vertices.size() == 1 + 3 * static_cast<int>(d.trace.size()));
    CHECK(induces_connected(q3, d.vertices));
    CHECK(domination_radius(q3, d.vertices) <= 2);
}

TEST_CASE("growth on C12")
{
    auto c12 = cycle_graph(12);
    auto d = grow_2l_step_dominating(c12, GrowthParams{1, 2});
    CHECK(d.vertices.size() <= 12);
    CHECK(induces_connected(c12, d.vertices));
    CHECK(domination_radius(c12, d.vertices) <= 2);
    for (const auto &step : d.trace) {
        CHECK(step.path.front() == step.picked);
        CHECK(step.path.size() == 4);
        for (std::size_t i = 0; i + 1 < step.path.size(); ++i)
            CHECK(c12.adjacent(step.path[i], step.path[i + 1]));
    }
}

TEST_CASE("growth rejects a falsified connectivity assumption")
{
    // Claimed 3-connected, but every 1-ball of a path has at most 3 < 3*1 + 1 vertices.
    CHECK_THROWS_WITH_AS(grow_2l_step_dominating(path_graph(9), GrowthParams{1, 3}), doctest::Contains("vertex 1 has only 3"),
                         precondition_error);
    CHECK_THROWS_AS(grow_2l_step_dominating(Graph(3, {{0, 1}}), GrowthParams{1, 1}), precondition_error);
}

TEST_CASE("growth properties on random graphs")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int kappa = 2 + static_cast<int>(seed % 2);
        const int l = 1 + static_cast<int>(seed / 2 % 2);
        const int n = 8 + static_cast<int>(seed % 13);
        auto g = random_k_connected(n, kappa, seed, static_cast<int>(seed % 3));
        auto d = grow_2l_step_dominating(g, GrowthParams{l, kappa});
        CHECK(induces_connected(g, d.vertices));
        CHECK(domination_radius(g, d.vertices) <= 2 * l);
        CHECK(d.vertices.size() <= (2 * l + 1) * n / (kappa * l + 1));
        const int t = static_cast<int>(d.trace.size());
        CHECK(d.vertices.size() == (2 * l + 1) * t + 1);
        CHECK((kappa * l + 1) * (t + 1) <= n);
    }
}

TEST_CASE("girth ball sizes")
{
    CHECK(girth_ball_size(3, 3) == 22);
    CHECK(girth_ball_size(5, 2) == 26);
    CHECK(girth_ball_size(3, 1) == 4);
}

TEST_CASE("girth growth on McGee is a single vertex")
{
    auto g = mcgee_graph();
    auto d = grow_girth_dominating(g, GrowthParams{1, 1, 3, 3});
    CHECK(d.vertices.size() == 1);
    CHECK(d.step_radius == 6);
    CHECK(domination_radius(g, d.vertices) <= 6);

    CHECK_THROWS_AS(grow_girth_dominating(petersen_graph(), GrowthParams{1, 1, 3, 3}), precondition_error);
    CHECK_THROWS_AS(grow_girth_dominating(cycle_graph(9), GrowthParams{1, 1, 3, 3}), precondition_error);
}

TEST_CASE("girth growth on cage55")
{
    auto g = cage55_graph();
    auto d = grow_girth_dominating(g, GrowthParams{1, 1, 2, 5});
    CHECK(induces_connected(g, d.vertices));
    CHECK(domination_radius(g, d.vertices) <= 4);
    CHECK(d.vertices.size() * 26 <= 5 * 30 - 4 * 26);
}

TEST_CASE("step domination predicate")
{
    auto c8 = cycle_graph(8);
    CHECK(is_connected_step_dominating(c8, VertexSet(8, {0, 1, 2}), 3));
    CHECK_FALSE(is_connected_step_dominating(c8, VertexSet(8, {0, 1, 2}), 2));
    CHECK_FALSE(is_connected_step_dominating(c8, VertexSet(8, {0, 4}), 2));
    CHECK_FALSE(is_connected_step_dominating(c8, VertexSet(8), 8));
}

TEST_CASE("one-step extension on K4 from a single vertex")
{
    auto k4 = complete_graph(4);
    auto step = extend_colouring_one_step(k4, path_set(4, {0}, 1), EdgeColouring(6));
    CHECK(step.set.vertices.size() == 4);
    CHECK(step.set.step_radius == 0);
    CHECK(step.fresh_colours <= 3);
    CHECK(step.colouring.is_total());
    CHECK(verify_rainbow_connected(k4, step.colouring).complete());
}

TEST_CASE("one-step extension on C8 from six consecutive vertices")
{
    auto c8 = cycle_graph(8);
    EdgeColouring c(8);
    for (Vertex v = 0; v < 5; ++v)
        c.set(c8.edge_between(v, v + 1), v);
    auto d = path_set(8, {0, 1, 2, 3, 4, 5}, 1);
    auto step = extend_colouring_one_step(c8, d, c);
    CHECK(step.set.vertices.size() == 8);
    CHECK(step.fresh_colours <= 3);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(step.colouring[c8.edge_between(v, v + 1)] == v);
    CHECK(verify_rainbow_connected(c8, step.colouring).complete());
    CHECK(oracle::rainbow_connected(c8, {step.colouring.raw().begin(), step.colouring.raw().end()}));
}

TEST_CASE("one-step extension rejects bridges and bad sets")
{
    auto p4 = path_graph(4);
    CHECK_THROWS_WITH_AS(extend_colouring_one_step(p4, path_set(4, {1}, 2), EdgeColouring(3)),
                         "graph not bridgeless", precondition_error);
    auto c6 = cycle_graph(6);
    CHECK_THROWS_AS(extend_colouring_one_step(c6, path_set(6, {0}, 1), EdgeColouring(6)), precondition_error);
    CHECK_THROWS_AS(extend_colouring_one_step(c6, path_set(6, {0, 1, 2, 3}, 0), EdgeColouring(6)), precondition_error);
}

TEST_CASE("one-step budget over random bridgeless graphs")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 6 + static_cast<int>(seed % 7);
        auto g = random_k_connected(n, 2, seed, static_cast<int>(seed % 3));
        const int l = 1 + static_cast<int>(seed % 2);
        auto d = grow_2l_step_dominating(g, GrowthParams{l, 2});
        auto c = spanning_tree_colouring(g, d.vertices);
        DominatingSet current = d;
        int added_total = 0;
        while (current.step_radius > 0) {
            const int radius = current.step_radius;
            const int before = c.num_colours();
            auto step = extend_colouring_one_step(g, current, c);
            CHECK(step.fresh_colours <= 2 * radius + 1);
            CHECK(step.colouring.num_colours() - before == step.fresh_colours);
            CHECK(closed_neighbourhood(g, current.vertices, 1).is_subset_of(step.set.vertices));
            CHECK(induces_connected(g, step.set.vertices));
            CHECK(domination_radius(g, step.set.vertices) <= radius - 1);
            CHECK(rainbow_on(g, step.set.vertices, step.colouring));
            added_total += step.fresh_colours;
            current = step.set;
            c = step.colouring;
        }
        CHECK(added_total <= 2 * l * (2 * l + 2));
        CHECK(verify_rainbow_connected(g, c).complete());
    }
}

TEST_CASE("dominate and colour")
{
    SUBCASE("l = 0 returns the colouring unchanged")
    {
        auto k4 = complete_graph(4);
        EdgeColouring c(std::vector<Colour>{5, 5, 7, 5, 7, 5});
        CHECK(dominate_and_colour(k4, path_set(4, {0, 1, 2, 3}, 0), c) == c);
    }
    SUBCASE("Q3 with the grown set")
    {
        auto q3 = hypercube_graph(3);
        auto d = grow_2l_step_dominating(q3, GrowthParams{1, 3});
        d.step_radius = 1;
        if (!is_connected_step_dominating(q3, d.vertices, 1))
            d.step_radius = 2;
        auto c = dominate_and_colour(q3, d);
        CHECK(verify_rainbow_connected(q3, c).complete());
        CHECK(c.num_colours() <= d.vertices.size() - 1 + d.step_radius * (d.step_radius + 2));
    }
    SUBCASE("C8 from a four-vertex path")
    {
        auto c8 = cycle_graph(8);
        auto d = path_set(8, {0, 1, 2, 3}, 2);
        auto c = dominate_and_colour(c8, d);
        CHECK(verify_rainbow_connected(c8, c).complete());
        CHECK(c.num_colours() <= 3 + 2 * 4);
        CHECK(c.num_colours() >= rc_exact(c8).rc_value);
    }
}
