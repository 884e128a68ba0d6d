#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <rainbow/generators.hpp>
#include <rainbow/metrics.hpp>

using namespace rainbow;

TEST_CASE("graph construction rejects loops and duplicates by name")
{
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 1}}), doctest::Contains("(1,1)"), precondition_error);
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}), doctest::Contains("(1,0)"), precondition_error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), precondition_error);

    Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
    CHECK(g.num_edges() == 3);
    CHECK(*g.edge_id(0, 3) == 2);
    auto nb = g.neighbours(0);
    CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2, 3});
    CHECK(g.incident_edges(0)[0] == 1);
    CHECK_THROWS_AS(g.edge_between(1, 2), precondition_error);
}

TEST_CASE("vertex sets")
{
    VertexSet s(6, {1, 4});
    CHECK(s.size() == 2);
    s.insert(4);
    CHECK(s.size() == 2);
    s.erase(1);
    CHECK(s.members() == std::vector<Vertex>{4});
    CHECK(s.complement().size() == 5);
    CHECK_THROWS_AS(s.insert(6), precondition_error);
    CHECK(VertexSet(6, {4}).is_subset_of(VertexSet::all(6)));
}

TEST_CASE("distances on small graphs")
{
    auto p = path_graph(4);
    CHECK(distances_from(p, 0) == std::vector<int>{0, 1, 2, 3});

    auto k4 = complete_graph(4);
    CHECK(distances_from(k4, 2) == std::vector<int>{1, 1, 0, 1});

    auto layered = gen_layered_tight(3, 5);
    auto d = distances_from(layered, 0);
    CHECK(*std::max_element(d.begin(), d.end()) == 5);

    Graph split(4, {{0, 1}, {2, 3}});
    auto ds = distances_from(split, 0);
    CHECK(ds[1] == 1);
    CHECK(ds[2] == unreachable);
    CHECK(ds[3] == unreachable);
}

TEST_CASE("distances agree with Floyd-Warshall and satisfy the triangle inequality")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = oracle::random_graph(3 + static_cast<int>(seed % 8), 0.4, seed);
        auto fw = oracle::floyd_warshall(g);
        const int n = g.num_vertices();
        std::vector<std::vector<int>> bfs;
        for (Vertex v = 0; v < n; ++v)
            bfs.push_back(distances_from(g, v));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (fw[a][b] >= oracle::inf)
                    CHECK(bfs[a][b] == unreachable);
                else
                    CHECK(bfs[a][b] == fw[a][b]);
                for (int c = 0; c < n; ++c)
                    if (bfs[a][b] != unreachable && bfs[b][c] != unreachable)
                        CHECK(bfs[a][c] <= bfs[a][b] + bfs[b][c]);
            }
    }
}

TEST_CASE("neighbourhood shells")
{
    CHECK(neighbourhood_shell(cycle_graph(6), VertexSet(6, {0}), 3).members() == std::vector<Vertex>{3});
    CHECK(neighbourhood_shell(complete_graph(5), VertexSet(5, {0}), 2).empty());

    auto q3 = hypercube_graph(3);
    auto fw = oracle::floyd_warshall(q3);
    auto shell = neighbourhood_shell(q3, VertexSet(8, {5}), 2);
    CHECK(shell.size() == 3);
    for (auto v : shell.members())
        CHECK(fw[5][v] == 2);
    CHECK(closed_neighbourhood(q3, VertexSet(8, {5}), 2).size() == 7);
}

TEST_CASE("shells partition the vertex set")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_k_connected(10, 1, seed, 3);
        VertexSet src(10, {static_cast<Vertex>(seed % 10)});
        VertexSet seen(10);
        int total = 0;
        for (int i = 0; i < 10; ++i) {
            auto shell = neighbourhood_shell(g, src, i);
            for (auto v : shell.members())
                CHECK_FALSE(seen.contains(v));
            seen |= shell;
            total += shell.size();
        }
        CHECK(total == 10);
    }
}

TEST_CASE("metrics of named graphs")
{
    auto k5 = compute_metrics(complete_graph(5));
    CHECK(k5.vertex_connectivity == 4);
    CHECK(k5.edge_connectivity == 4);
    CHECK(k5.min_degree == 4);
    CHECK(k5.diameter == 1);
    CHECK(*k5.girth == 3);

    auto c8 = compute_metrics(cycle_graph(8));
    CHECK(c8.vertex_connectivity == 2);
    CHECK(c8.edge_connectivity == 2);
    CHECK(*c8.girth == 8);
    CHECK(c8.diameter == 4);
    CHECK(c8.radius == 4);

    auto pg = petersen_graph();
    auto p = compute_metrics(pg);
    CHECK(p.vertex_connectivity == oracle::vertex_connectivity(pg));
    CHECK(p.edge_connectivity == oracle::edge_connectivity(pg));
    CHECK(*p.girth == oracle::girth(pg));
    CHECK(p.diameter == oracle::diameter(pg));
    CHECK(p.vertex_connectivity == 3);
    CHECK(*p.girth == 5);
    CHECK(p.diameter == 2);

    CHECK_FALSE(compute_metrics(path_graph(5)).girth.has_value());
    CHECK_THROWS_WITH_AS(compute_metrics(Graph(3, {{0, 1}})), "graph not connected", precondition_error);
}

TEST_CASE("connectivities match subset enumeration and respect kappa <= lambda <= delta")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_k_connected(5 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3), seed, 2);
        auto m = compute_metrics(g);
        CHECK(m.vertex_connectivity == oracle::vertex_connectivity(g));
        if (g.num_edges() <= 16)
            CHECK(m.edge_connectivity == oracle::edge_connectivity(g));
        CHECK(m.vertex_connectivity <= m.edge_connectivity);
        CHECK(m.edge_connectivity <= m.min_degree);
        CHECK(m.radius <= m.diameter);
        CHECK(m.diameter <= 2 * m.radius);
        CHECK(*m.girth == oracle::girth(g));
    }
}

TEST_CASE("biconnectivity, bridges and cut vertices")
{
    CHECK(is_biconnected(cycle_graph(5)));
    CHECK_FALSE(is_biconnected(path_graph(4)));
    CHECK(articulation_points(path_graph(4)) == std::vector<Vertex>{1, 2});
    CHECK(bridges(path_graph(3)).size() == 2);
    CHECK(bridges(cycle_graph(4)).empty());
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(articulation_points(bowtie) == std::vector<Vertex>{2});
    CHECK(bridges(bowtie).empty());
    CHECK(is_k_connected(complete_graph(6), 5));
    CHECK_FALSE(is_k_connected(complete_graph(6), 6));
}

TEST_CASE("chordality")
{
    CHECK(is_chordal(complete_graph(4)).chordal);
    CHECK_FALSE(is_chordal(cycle_graph(4)).chordal);

    auto t = random_k_tree(2, 12, 3);
    auto res = is_chordal(t);
    REQUIRE(res.chordal);
    CHECK(is_perfect_elimination_ordering(t, res.elimination_order));
    CHECK_FALSE(oracle::has_long_induced_cycle(t));
}

TEST_CASE("chordality agrees with induced-cycle enumeration")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto g = oracle::random_graph(4 + static_cast<int>(seed % 6), 0.5, seed);
        auto res = is_chordal(g);
        CHECK(res.chordal == !oracle::has_long_induced_cycle(g));
        if (res.chordal)
            CHECK(is_perfect_elimination_ordering(g, res.elimination_order));
    }
}

namespace {

std::vector<int> component_labels(const Graph &g, const std::vector<bool> &removed)
{
    std::vector<int> label(g.num_vertices(), -1);
    int next = 0;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (removed[s] || label[s] >= 0)
            continue;
        std::vector<Vertex> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : g.neighbours(x))
                if (!removed[y] && label[y] < 0) {
                    label[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    return label;
}

// S disconnects g, and G - S has two full components (every member of S has a
// neighbour in both), one of them holding D.
void check_minimal_separator(const Graph &g, const VertexSet &d, const VertexSet &s)
{
    std::vector<bool> removed(g.num_vertices(), false);
    for (auto v : s.members())
        removed[v] = true;
    REQUIRE_FALSE(oracle::connected_without(g, removed));
    auto label = component_labels(g, removed);
    const int home = label[d.members().front()];
    for (auto v : d.members())
        CHECK(label[v] == home);
    auto full = [&](int comp) {
        for (auto v : s.members()) {
            bool touches = false;
            for (auto y : g.neighbours(v))
                touches |= label[y] == comp;
            if (!touches)
                return false;
        }
        return true;
    };
    CHECK(full(home));
    bool other = false;
    for (int comp = 0; comp < *std::max_element(label.begin(), label.end()) + 1; ++comp)
        other |= comp != home && full(comp);
    CHECK(other);
}

} // namespace

TEST_CASE("minimal separators inside N(D)")
{
    auto p5 = path_graph(5);
    CHECK(minimal_separator_in_neighbourhood(p5, VertexSet(5, {0})).members() == std::vector<Vertex>{1});

    auto c6 = cycle_graph(6);
    auto s = minimal_separator_in_neighbourhood(c6, VertexSet(6, {0}));
    CHECK(s.members() == std::vector<Vertex>{1, 5});
    check_minimal_separator(c6, VertexSet(6, {0}), s);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = random_k_tree(2, 8, seed);
        VertexSet tri(8);
        for (const auto &e : t.edges()) {
            for (auto w : t.neighbours(e.u))
                if (t.adjacent(e.v, w)) {
                    tri = VertexSet(8, {e.u, e.v, w});
                    break;
                }
            if (!tri.empty() && closed_neighbourhood(t, tri, 1).size() < 8)
                break;
            tri = VertexSet(8);
        }
        if (tri.empty())
            continue;
        auto sep = minimal_separator_in_neighbourhood(t, tri);
        CHECK(sep.size() == 2);
        CHECK(is_clique(t, sep));
        check_minimal_separator(t, tri, sep);
    }

    CHECK_THROWS_AS(minimal_separator_in_neighbourhood(complete_graph(4), VertexSet(4, {0})), precondition_error);
}

TEST_CASE("minimal separators on random chordal and general graphs")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = seed % 2 ? random_k_tree(2 + static_cast<int>(seed % 3), 14, seed) : random_k_connected(10, 2, seed, 1);
        VertexSet d(g.num_vertices(), {static_cast<Vertex>(seed % g.num_vertices())});
        while (closed_neighbourhood(g, d, 1).size() < g.num_vertices()) {
            auto s = minimal_separator_in_neighbourhood(g, d);
            CHECK(s.is_subset_of(open_neighbourhood(g, d)));
            check_minimal_separator(g, d, s);
            if (seed % 2)
                CHECK(is_clique(g, s));
            d |= s;
        }
    }
}
