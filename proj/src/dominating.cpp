#include <rainbow/dominating.hpp>
#include <rainbow/metrics.hpp>

#include <algorithm>

namespace rainbow {

namespace {

Vertex max_degree_vertex(const Graph &g)
{
    Vertex best = 0;
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

// Lowest-id neighbour one layer closer to the source set.
Vertex layer_parent(const Graph &g, const std::vector<int> &dist, Vertex v)
{
    for (auto w : g.neighbours(v))
        if (dist[w] == dist[v] - 1)
            return w;
    throw internal_error("vertex " + std::to_string(v) + " has no BFS parent");
}

DominatingSet grow(const Graph &g, int l, std::int64_t ball_bound)
{
    const int n = g.num_vertices();
    if (n == 0 || !is_connected(g))
        throw precondition_error("graph not connected");
    if (l < 0)
        throw precondition_error("step parameter must be non-negative");

    DominatingSet out;
    out.vertices = VertexSet(n, {max_degree_vertex(g)});
    out.step_radius = 2 * l;

    auto check_ball = [&](Vertex v) {
        auto ball = closed_neighbourhood(g, VertexSet(n, {v}), l).size();
        if (ball < ball_bound)
            throw precondition_error("vertex " + std::to_string(v) + " has only " + std::to_string(ball) +
                                     " vertices within distance " + std::to_string(l) + ", fewer than the " +
                                     std::to_string(ball_bound) + " the connectivity assumption guarantees");
    };

    std::int64_t rounds = 0;
    for (;;) {
        auto dist = distances_from(g, out.vertices);
        Vertex far = -1;
        for (Vertex v = 0; v < n; ++v)
            if (dist[v] == 2 * l + 1) {
                far = v;
                break;
            }
        if (far == -1)
            break;
        if (rounds == 0)
            check_ball(out.vertices.members().front());
        check_ball(far);

        GrowthStep step{far, {far}};
        for (Vertex x = far; dist[x] > 0;) {
            x = layer_parent(g, dist, x);
            step.path.push_back(x);
        }
        for (std::size_t i = 0; i + 1 < step.path.size(); ++i)
            out.vertices.insert(step.path[i]);
        out.trace.push_back(std::move(step));
        ++rounds;

        auto covered = static_cast<std::int64_t>(closed_neighbourhood(g, out.vertices, l).size());
        if (covered < ball_bound * (rounds + 1))
            throw internal_error("l-ball of the growing set did not gain the guaranteed " +
                                 std::to_string(ball_bound) + " vertices");
    }
    if (out.vertices.size() != (2 * l + 1) * rounds + 1)
        throw internal_error("growth added an unexpected number of vertices");
    return out;
}

} // namespace

bool is_connected_step_dominating(const Graph &g, const VertexSet &d, int radius)
{
    if (d.empty() || !is_connected_subset(g, d))
        return false;
    auto dist = distances_from(g, d);
    return std::all_of(dist.begin(), dist.end(), [radius](int x) { return x <= radius; });
}

DominatingSet grow_2l_step_dominating(const Graph &g, const GrowthParams &p)
{
    if (p.kappa < 1)
        throw precondition_error("kappa must be at least 1");
    const std::int64_t bound = static_cast<std::int64_t>(p.kappa) * p.l + 1;
    auto out = grow(g, p.l, bound);
    // |D| <= (2l + 1) n / (kappa l + 1)
    if (static_cast<std::int64_t>(out.vertices.size()) * bound >
        static_cast<std::int64_t>(2 * p.l + 1) * g.num_vertices())
        throw internal_error("dominating set exceeds its size bound");
    return out;
}

std::int64_t girth_ball_size(int delta, int g)
{
    if (delta < 3 || g < 1)
        throw precondition_error("ball bound needs delta >= 3 and g >= 1");
    std::int64_t total = 1, layer = delta;
    for (int i = 0; i < g; ++i) {
        total += layer;
        layer *= delta - 1;
    }
    return total;
}

DominatingSet grow_girth_dominating(const Graph &g, const GrowthParams &p)
{
    if (p.delta < 3)
        throw precondition_error("girth variant needs minimum degree at least 3");
    if (min_degree(g) < p.delta)
        throw precondition_error("minimum degree " + std::to_string(min_degree(g)) + " is below " +
                                 std::to_string(p.delta));
    auto gi = girth(g);
    if (gi && *gi < 2 * p.g + 1)
        throw precondition_error("girth " + std::to_string(*gi) + " is below 2g + 1 = " +
                                 std::to_string(2 * p.g + 1));
    const auto ball = girth_ball_size(p.delta, p.g);
    auto out = grow(g, p.g, ball);
    // |D| <= (2g + 1) n / C - 2g
    const std::int64_t lhs = static_cast<std::int64_t>(out.vertices.size()) * ball;
    const std::int64_t rhs = static_cast<std::int64_t>(2 * p.g + 1) * g.num_vertices() - 2LL * p.g * ball;
    if (lhs > rhs)
        throw internal_error("girth dominating set exceeds its size bound");
    return out;
}

DominationStep extend_colouring_one_step(const Graph &g, const DominatingSet &d, const EdgeColouring &c)
{
    const int n = g.num_vertices();
    const int l = d.step_radius;
    if (l < 1)
        throw precondition_error("step radius must be at least 1");
    if (!bridges(g).empty())
        throw precondition_error("graph not bridgeless");
    if (!is_connected_step_dominating(g, d.vertices, l))
        throw precondition_error("set is not a connected " + std::to_string(l) + "-step dominating set");
    if (c.num_edges() != g.num_edges())
        throw precondition_error("colouring size does not match graph");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto &ed = g.edge(e);
        if (d.vertices.contains(ed.u) && d.vertices.contains(ed.v) && !c.is_coloured(e))
            throw precondition_error("edge " + describe_edge(ed) + " inside the set is uncoloured");
    }

    auto dist = distances_from(g, d.vertices);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> branch(static_cast<std::size_t>(n), -1); // layer-1 ancestor
    std::vector<Vertex> by_layer(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        by_layer[v] = v;
    std::stable_sort(by_layer.begin(), by_layer.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    for (auto v : by_layer) {
        if (dist[v] == 0)
            continue;
        parent[v] = layer_parent(g, dist, v);
        branch[v] = dist[v] == 1 ? v : branch[parent[v]];
    }

    enum class Side { none, base, left, right };
    std::vector<Side> side(static_cast<std::size_t>(n), Side::none);
    for (auto v : d.vertices.members())
        side[v] = Side::base;

    DominationStep out;
    out.colouring = c;
    const Colour first_fresh = c.next_fresh();
    auto paint = [&](Vertex a, Vertex b, int index) {
        if (index < 1 || index > 2 * l + 1)
            throw internal_error("ear colour index out of range");
        auto e = g.edge_between(a, b);
        if (out.colouring.is_coloured(e))
            throw internal_error("ear edge " + describe_edge(g.edge(e)) + " already coloured");
        out.colouring.set(e, first_fresh + index - 1);
    };

    const int top = 2 * l + 1;
    for (Vertex x = 0; x < n; ++x) {
        if (dist[x] != 1 || side[x] != Side::none)
            continue;

        // Leave the subtree of x through an edge other than its tree edge.
        Vertex a = -1, b = -1;
        for (Vertex u = 0; u < n; ++u) {
            if (branch[u] != x)
                continue;
            for (auto w : g.neighbours(u)) {
                if (branch[w] == x || (u == x && w == parent[x]))
                    continue;
                if (a == -1 || dist[u] + dist[w] < dist[a] + dist[b]) {
                    a = u;
                    b = w;
                }
            }
        }
        if (a == -1)
            throw internal_error("tree edge at " + std::to_string(x) + " is a bridge");

        std::vector<Vertex> down; // x = y_1, ..., y_s = a
        for (Vertex y = a; y != -1 && dist[y] >= 1; y = parent[y])
            down.push_back(y);
        std::reverse(down.begin(), down.end());
        for (auto y : down)
            if (side[y] != Side::none)
                throw internal_error("subtree vertex " + std::to_string(y) + " already covered");

        std::vector<Vertex> up; // b and its ancestors before the first covered vertex
        Vertex w = b;
        while (side[w] == Side::none) {
            up.push_back(w);
            w = parent[w];
        }

        const int s = dist[a];
        if (side[w] != Side::left) {
            for (auto y : down) {
                paint(parent[y], y, dist[y]);
                side[y] = Side::left;
            }
            paint(a, b, top - dist[b]);
            for (auto z : up) {
                paint(z, parent[z], top + 1 - dist[z]);
                side[z] = Side::right;
            }
        }
        else {
            for (auto z : up) {
                paint(z, parent[z], dist[z]);
                side[z] = Side::left;
            }
            paint(a, b, top - s);
            for (auto y : down) {
                paint(y, parent[y], top + 1 - dist[y]);
                side[y] = Side::right;
            }
        }
    }

    out.set.vertices = d.vertices;
    for (Vertex v = 0; v < n; ++v)
        if (side[v] != Side::none)
            out.set.vertices.insert(v);
    out.set.step_radius = l - 1;
    out.set.trace = d.trace;

    auto old = c.palette();
    const Colour filler = old.empty() ? first_fresh : old.front();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto &ed = g.edge(e);
        if (!out.colouring.is_coloured(e) && out.set.vertices.contains(ed.u) && out.set.vertices.contains(ed.v))
            out.colouring.set(e, filler);
    }

    std::vector<Colour> fresh;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (out.colouring[e] >= first_fresh)
            fresh.push_back(out.colouring[e]);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    out.fresh_colours = static_cast<int>(fresh.size());
    if (out.fresh_colours > 2 * l + 1)
        throw internal_error("one-step extension used " + std::to_string(out.fresh_colours) +
                             " fresh colours, above 2l + 1");
    return out;
}

EdgeColouring dominate_and_colour(const Graph &g, const DominatingSet &d, const std::optional<EdgeColouring> &c)
{
    if (!is_connected_step_dominating(g, d.vertices, d.step_radius))
        throw precondition_error("set is not a connected " + std::to_string(d.step_radius) +
                                 "-step dominating set");
    auto colouring = c ? *c : spanning_tree_colouring(g, d.vertices);
    DominatingSet current = d;
    while (current.step_radius > 0) {
        auto step = extend_colouring_one_step(g, current, colouring);
        current = std::move(step.set);
        colouring = std::move(step.colouring);
    }
    if (auto e = colouring.first_uncoloured())
        throw precondition_error("edge " + describe_edge(g.edge(*e)) + " left uncoloured by the starting colouring");
    return d.step_radius > 0 ? colouring.compacted() : colouring;
}

} // namespace rainbow
