#include <rainbow/colourers.hpp>
#include <rainbow/metrics.hpp>

#include <cmath>
#include <limits>
#include <numeric>

namespace rainbow {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d)
{
    if (den <= 0)
        throw precondition_error("rational needs a positive denominator");
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational &a, const Rational &b)
{
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational two_connected_bound(int n) { return Rational((n + 1) / 2 + 1); }

Rational chordal_bound(int n, int kappa)
{
    if (kappa < 1)
        throw precondition_error("kappa must be at least 1");
    return Rational(n, kappa) + Rational(3);
}

Rational kappa_bound(int n, int kappa, int l)
{
    if (kappa < 1 || l < 0)
        throw precondition_error("kappa >= 1 and l >= 0 required");
    return Rational(static_cast<std::int64_t>(2 * l + 1) * n, static_cast<std::int64_t>(kappa) * l + 1) +
           Rational(2LL * l * (2 * l + 2) - 1);
}

int l_for_epsilon(double epsilon)
{
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw precondition_error("epsilon must lie in (0, 1]");
    return static_cast<int>(std::ceil(1.0 / epsilon - 1e-12));
}

ChordalResult colour_chordal(const Graph &g, int kappa)
{
    const int n = g.num_vertices();
    if (n == 0 || !is_connected(g))
        throw precondition_error("graph not connected");
    if (!is_chordal(g).chordal)
        throw precondition_error("graph is not chordal");
    if (kappa < 1)
        throw precondition_error("kappa must be at least 1");
    if (!is_k_connected(g, kappa))
        throw precondition_error("graph is not " + std::to_string(kappa) + "-connected");

    ChordalResult out;
    if (n == 1) {
        out.colouring = EdgeColouring(0);
        return out;
    }
    if (g.num_edges() == static_cast<std::int64_t>(n) * (n - 1) / 2) {
        out.colouring = EdgeColouring(std::vector<Colour>(static_cast<std::size_t>(g.num_edges()), 0));
        return out;
    }
    if (kappa == 1) {
        out.colouring = spanning_tree_colouring(g, VertexSet::all(n));
        return out;
    }

    Vertex start = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start))
            start = v;
    VertexSet d(n, {start});
    EdgeColouring col(g.num_edges());
    Colour next = 0;

    while (!is_connected_step_dominating(g, d, 1)) {
        auto s = minimal_separator_in_neighbourhood(g, d);
        if (!is_clique(g, s))
            throw internal_error("minimal separator is not a clique");
        if (s.size() < kappa)
            throw precondition_error("separator of size " + std::to_string(s.size()) + " contradicts " +
                                     std::to_string(kappa) + "-connectivity");
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const auto &ed = g.edge(e);
            bool u_in = s.contains(ed.u), v_in = s.contains(ed.v);
            if ((u_in && (v_in || d.contains(ed.v))) || (v_in && d.contains(ed.u)))
                col.set(e, next);
        }
        ++next;
        d |= s;
        const int used = col.num_colours();
        if (static_cast<std::int64_t>(used) * kappa > d.size())
            throw internal_error("separator growth used more than |D|/kappa colours");
        out.steps.push_back({std::move(s), d.size(), used});
    }

    out.colouring = dominate_and_colour(g, DominatingSet{d, 1, {}}, col);
    return out;
}

EdgeColouring colour_kappa_pipeline(const Graph &g, int kappa, int l)
{
    if (kappa == 1)
        throw precondition_error("kappa = 1 is covered by a spanning-tree colouring; the pipeline needs kappa >= 2");
    if (kappa < 2)
        throw precondition_error("kappa must be at least 2");
    if (!is_k_connected(g, kappa))
        throw precondition_error("graph is not " + std::to_string(kappa) + "-connected");
    auto d = grow_2l_step_dominating(g, GrowthParams{l, kappa, 1, 3});
    auto col = dominate_and_colour(g, d);
    if (!kappa_bound(g.num_vertices(), kappa, l).admits(col.num_colours()))
        throw internal_error("kappa pipeline exceeded its bound");
    return col;
}

GirthResult colour_girth_pipeline(const Graph &g)
{
    if (!is_connected(g))
        throw precondition_error("graph not connected");
    const int delta = min_degree(g);
    const auto gi = girth(g);
    const int girth_value = gi ? *gi : std::numeric_limits<int>::max();
    const int n = g.num_vertices();

    GirthResult out;
    int half;
    if (delta >= 5 && girth_value >= 5) {
        out.regime = GirthRegime::degree5_girth5;
        out.bound = Rational(n, delta) + Rational(19);
        half = 2;
    }
    else if (delta >= 3 && girth_value >= 7) {
        out.regime = GirthRegime::degree3_girth7;
        out.bound = Rational(n, delta) + Rational(41);
        half = 3;
    }
    else {
        std::string gs = gi ? std::to_string(*gi) : "infinite";
        throw precondition_error("girth pipeline needs min degree >= 3 with girth >= 7 (have " +
                                 std::to_string(delta) + ", " + gs + ") or min degree >= 5 with girth >= 5");
    }
    auto d = grow_girth_dominating(g, GrowthParams{1, 1, half, delta});
    out.colouring = dominate_and_colour(g, d);
    if (!out.bound.admits(out.colouring.num_colours()))
        throw internal_error("girth pipeline exceeded its bound");
    return out;
}

} // namespace rainbow
