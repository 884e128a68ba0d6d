#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <rainbow/colouring.hpp>
#include <rainbow/generators.hpp>
#include <rainbow/metrics.hpp>

#include <numeric>
#include <random>

using namespace rainbow;

namespace {

std::vector<int> colours_of(const EdgeColouring &c) { return {c.raw().begin(), c.raw().end()}; }

EdgeColouring random_colouring(int m, int k, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<Colour> out(m);
    for (auto &x : out)
        x = pick(rng);
    return EdgeColouring(out);
}

void check_certificate(const Graph &g, const EdgeColouring &c, const RainbowCertificate &cert)
{
    for (const auto &w : cert.witnesses) {
        CHECK(w.path.front() == w.u);
        CHECK(w.path.back() == w.v);
        CHECK(is_rainbow_path(g, c, w.path));
    }
}

} // namespace

TEST_CASE("edge colourings")
{
    EdgeColouring c(std::vector<Colour>{4, 2, 4, 7});
    CHECK(c.num_colours() == 3);
    CHECK(c.palette() == std::vector<Colour>{2, 4, 7});
    CHECK(c.next_fresh() == 8);
    CHECK(colours_of(c.compacted()) == std::vector<int>{0, 1, 0, 2});
    CHECK(c.is_total());

    EdgeColouring partial(3);
    CHECK(*partial.first_uncoloured() == 0);
    partial.set(0, 1);
    CHECK(*partial.first_uncoloured() == 1);
    CHECK(partial.uses(1));
    CHECK_FALSE(partial.uses(0));
}

TEST_CASE("verifier examples")
{
    auto k4 = complete_graph(4);
    CHECK(verify_rainbow_connected(k4, EdgeColouring(std::vector<Colour>(6, 0))).complete());

    auto p4 = path_graph(4);
    auto cert = verify_rainbow_connected(p4, EdgeColouring(std::vector<Colour>{0, 0, 1}));
    CHECK_FALSE(cert.complete());
    REQUIRE(cert.failing.size() == 2);
    CHECK(std::find(cert.failing.begin(), cert.failing.end(), std::pair<Vertex, Vertex>{0, 3}) != cert.failing.end());

    auto c4 = cycle_graph(4);
    EdgeColouring alt(std::vector<Colour>{0, 1, 0, 1});
    auto good = verify_rainbow_connected(c4, alt);
    CHECK(good.complete());
    CHECK(good.witnesses.size() == 6);
    check_certificate(c4, alt, good);
    auto path = good.path_between(2, 0);
    REQUIRE(path.has_value());
    CHECK(path->front() == 2);
    CHECK(path->back() == 0);

    CHECK_THROWS_WITH_AS(verify_rainbow_connected(p4, EdgeColouring(3)), doctest::Contains("(0,1)"), precondition_error);
}

TEST_CASE("verifier agrees with path enumeration and ignores colour names")
{
    std::mt19937_64 rng(5);
    int complete = 0;
    for (int round = 0; round < 300; ++round) {
        auto g = random_k_connected(4 + round % 5, 1 + round % 2, round, round % 4);
        const int k = 1 + round % 4;
        auto c = random_colouring(g.num_edges(), k, rng);
        auto cert = verify_rainbow_connected(g, c);
        const bool expected = oracle::rainbow_connected(g, colours_of(c));
        CHECK(cert.complete() == expected);
        check_certificate(g, c, cert);
        complete += expected;

        std::vector<Colour> perm(k);
        std::iota(perm.begin(), perm.end(), 10);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Colour> renamed;
        for (auto x : c.raw())
            renamed.push_back(perm[x]);
        CHECK(verify_rainbow_connected(g, EdgeColouring(renamed)).complete() == expected);
    }
    CHECK(complete > 10);
}

TEST_CASE("subgraph verification skips uncoloured edges and filtered pairs")
{
    auto c5 = cycle_graph(5);
    EdgeColouring c(5);
    c.set(0, 0);
    c.set(1, 1);
    c.set(2, 2);
    VertexSet path_part(5, {0, 1, 2, 3});
    CHECK(verify_rainbow_subgraph(c5, c, path_part).complete());
    c.set(2, 0);
    CHECK_FALSE(verify_rainbow_subgraph(c5, c, path_part).complete());
    auto skip03 = [](Vertex a, Vertex b) { return std::min(a, b) == 0 && std::max(a, b) == 3; };
    CHECK(verify_rainbow_subgraph(c5, c, path_part, skip03).complete());
}

TEST_CASE("rc bounds")
{
    CHECK(rc_bounds(path_graph(4)).lower == 3);
    CHECK(rc_bounds(path_graph(4)).upper == 3);
    CHECK(rc_bounds(complete_graph(6)).lower == 1);
    CHECK(rc_bounds(complete_graph(6)).upper == 5);
    CHECK(rc_bounds(petersen_graph()).lower == oracle::diameter(petersen_graph()));
    CHECK(rc_bounds(petersen_graph()).upper == 9);
}

TEST_CASE("rc_exact on complete graphs, stars and cycles")
{
    CHECK(rc_exact(complete_graph(5)).rc_value == 1);
    auto star = rc_exact(star_graph(4));
    CHECK(star.is_exact());
    CHECK(star.rc_value == 4);
    CHECK(star.witness.num_colours() == 4);

    auto c6 = rc_exact(cycle_graph(6));
    CHECK(c6.rc_value == 3);
    CHECK(c6.lower_bound_used == 3);
    CHECK(oracle::rainbow_connected(cycle_graph(6), colours_of(c6.witness)));
    CHECK(c6.witness.num_colours() == 3);

    for (int n = 4; n <= 9; ++n)
        CHECK(rc_exact(cycle_graph(n)).rc_value == (n + 1) / 2);
}

TEST_CASE("rc_exact matches plain brute force and is sandwiched")
{
    int tried = 0;
    for (std::uint64_t seed = 0; tried < 40; ++seed) {
        auto g = oracle::random_graph(4 + static_cast<int>(seed % 3), 0.6, seed);
        if (g.num_edges() > 8 || !is_connected(g))
            continue;
        ++tried;
        auto res = rc_exact(g);
        REQUIRE(res.is_exact());
        CHECK(res.rc_value == oracle::rc(g));
        CHECK(res.rc_value >= oracle::diameter(g));
        CHECK(res.rc_value <= g.num_vertices() - 1);
        CHECK(res.witness.num_colours() == res.rc_value);
        CHECK(oracle::rainbow_connected(g, colours_of(res.witness)));
    }
}

TEST_CASE("rc_exact refuses large graphs and reports exhausted budgets")
{
    CHECK_THROWS_AS(rc_exact(petersen_graph()), precondition_error);
    auto res = rc_exact(petersen_graph(), RcBudget{15, 5});
    CHECK_FALSE(res.is_exact());
    CHECK(res.rc_value >= 2);
    CHECK_THROWS_AS(rc_exact(Graph(3, {{0, 1}})), precondition_error);
}

TEST_CASE("spanning tree colourings are rainbow")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_k_connected(9, 1, seed, 4);
        auto c = spanning_tree_colouring(g, VertexSet::all(9), 3);
        CHECK(c.is_total());
        CHECK(c.num_colours() == 8);
        CHECK(verify_rainbow_connected(g, c).complete());
    }
}
