#include <rainbow/metrics.hpp>

#include "flow.hpp"

#include <algorithm>
#include <queue>

namespace rainbow {

std::vector<int> distances_from(const Graph &g, const VertexSet &source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), unreachable);
    std::queue<Vertex> queue;
    for (auto s : source.members()) {
        dist[s] = 0;
        queue.push(s);
    }
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop();
        for (auto y : g.neighbours(x))
            if (dist[y] == unreachable) {
                dist[y] = dist[x] + 1;
                queue.push(y);
            }
    }
    return dist;
}

std::vector<int> distances_from(const Graph &g, Vertex source)
{
    return distances_from(g, VertexSet(g.num_vertices(), {source}));
}

VertexSet neighbourhood_shell(const Graph &g, const VertexSet &s, int i)
{
    auto dist = distances_from(g, s);
    VertexSet out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (dist[v] == i)
            out.insert(v);
    return out;
}

VertexSet closed_neighbourhood(const Graph &g, const VertexSet &s, int i)
{
    auto dist = distances_from(g, s);
    VertexSet out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (dist[v] <= i)
            out.insert(v);
    return out;
}

VertexSet open_neighbourhood(const Graph &g, const VertexSet &s)
{
    return neighbourhood_shell(g, s, 1);
}

std::vector<int> components(const Graph &g, const VertexSet &alive)
{
    std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
    int next = 0;
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
        if (!alive.contains(root) || label[root] != -1)
            continue;
        std::vector<Vertex> stack{root};
        label[root] = next;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : g.neighbours(x))
                if (alive.contains(y) && label[y] == -1) {
                    label[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    return label;
}

bool is_connected_subset(const Graph &g, const VertexSet &s)
{
    if (s.empty())
        return false;
    auto label = components(g, s);
    for (auto v : s.members())
        if (label[v] != 0)
            return false;
    return true;
}

bool is_connected(const Graph &g)
{
    return g.num_vertices() > 0 && is_connected_subset(g, VertexSet::all(g.num_vertices()));
}

namespace {

// Lowpoint DFS shared by articulation points and bridges.
struct LowpointSearch {
    const Graph &g;
    std::vector<int> order, low;
    std::vector<Vertex> cut_vertices;
    std::vector<EdgeId> bridge_edges;
    int counter = 0;

    explicit LowpointSearch(const Graph &graph)
        : g(graph), order(static_cast<std::size_t>(graph.num_vertices()), -1),
          low(static_cast<std::size_t>(graph.num_vertices()), 0)
    {
        std::vector<bool> is_cut(static_cast<std::size_t>(g.num_vertices()), false);
        for (Vertex root = 0; root < g.num_vertices(); ++root) {
            if (order[root] != -1)
                continue;
            int children = visit(root, -1, is_cut);
            is_cut[root] = children > 1;
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (is_cut[v])
                cut_vertices.push_back(v);
        std::sort(bridge_edges.begin(), bridge_edges.end());
    }

    int visit(Vertex v, EdgeId via, std::vector<bool> &is_cut)
    {
        order[v] = low[v] = counter++;
        int children = 0;
        auto nbrs = g.neighbours(v);
        auto ids = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            auto w = nbrs[i];
            if (ids[i] == via)
                continue;
            if (order[w] == -1) {
                ++children;
                visit(w, ids[i], is_cut);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= order[v])
                    is_cut[v] = true;
                if (low[w] > order[v])
                    bridge_edges.push_back(ids[i]);
            }
            else
                low[v] = std::min(low[v], order[w]);
        }
        return children;
    }
};

} // namespace

std::vector<Vertex> articulation_points(const Graph &g)
{
    return LowpointSearch(g).cut_vertices;
}

std::vector<EdgeId> bridges(const Graph &g)
{
    return LowpointSearch(g).bridge_edges;
}

bool is_biconnected(const Graph &g)
{
    return g.num_vertices() >= 3 && is_connected(g) && articulation_points(g).empty();
}

int min_degree(const Graph &g)
{
    int best = g.num_vertices() == 0 ? 0 : g.degree(0);
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph &g)
{
    int best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::optional<int> girth(const Graph &g)
{
    std::optional<int> best;
    const int n = g.num_vertices();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<EdgeId> via(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unreachable);
        dist[root] = 0;
        via[root] = -1;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop();
            if (best && 2 * dist[x] >= *best)
                break;
            auto nbrs = g.neighbours(x);
            auto ids = g.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                auto y = nbrs[i];
                if (ids[i] == via[x])
                    continue;
                if (dist[y] == unreachable) {
                    dist[y] = dist[x] + 1;
                    via[y] = ids[i];
                    queue.push(y);
                }
                else {
                    int cycle = dist[x] + dist[y] + 1;
                    if (!best || cycle < *best)
                        best = cycle;
                }
            }
        }
    }
    return best;
}

int eccentricity(const Graph &g, Vertex v)
{
    auto dist = distances_from(g, v);
    return *std::max_element(dist.begin(), dist.end());
}

int diameter(const Graph &g)
{
    int best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, eccentricity(g, v));
    return best;
}

namespace {

bool is_complete(const Graph &g)
{
    const long long n = g.num_vertices();
    return g.num_edges() == n * (n - 1) / 2;
}

// Even's scheme: a minimum separator misses one of the first kappa+1 vertices.
int vertex_connectivity_capped(const Graph &g, int cap)
{
    const int n = g.num_vertices();
    if (n <= 1 || !is_connected(g))
        return 0;
    if (is_complete(g))
        return std::min(cap, n - 1);
    int best = std::min(cap, n - 2);
    for (Vertex s = 0; s <= best && s < n; ++s)
        for (Vertex t = 0; t < n; ++t) {
            if (t == s || g.adjacent(s, t))
                continue;
            best = std::min(best, detail::local_vertex_connectivity(g, s, t, best));
        }
    return best;
}

} // namespace

int vertex_connectivity(const Graph &g)
{
    return vertex_connectivity_capped(g, g.num_vertices());
}

bool is_k_connected(const Graph &g, int k)
{
    if (k <= 0)
        return true;
    return g.num_vertices() > k && vertex_connectivity_capped(g, k) >= k;
}

int edge_connectivity(const Graph &g)
{
    const int n = g.num_vertices();
    if (n <= 1 || !is_connected(g))
        return 0;
    int best = min_degree(g);
    for (Vertex t = 1; t < n; ++t)
        best = std::min(best, detail::local_edge_connectivity(g, 0, t, best));
    return best;
}

GraphMetrics compute_metrics(const Graph &g)
{
    if (g.num_vertices() < 2)
        throw precondition_error("metrics need at least two vertices");
    if (!is_connected(g))
        throw precondition_error("graph not connected");
    GraphMetrics m;
    m.radius = unreachable;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int ecc = eccentricity(g, v);
        m.diameter = std::max(m.diameter, ecc);
        m.radius = std::min(m.radius, ecc);
    }
    m.girth = girth(g);
    m.min_degree = min_degree(g);
    m.vertex_connectivity = vertex_connectivity(g);
    m.edge_connectivity = edge_connectivity(g);
    return m;
}

bool is_perfect_elimination_ordering(const Graph &g, const std::vector<Vertex> &order)
{
    const int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || position[order[i]] != -1)
            return false;
        position[order[i]] = i;
    }
    for (auto v : order) {
        std::vector<Vertex> later;
        for (auto w : g.neighbours(v))
            if (position[w] > position[v])
                later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b]))
                    return false;
    }
    return true;
}

ChordalityResult is_chordal(const Graph &g)
{
    const int n = g.num_vertices();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[v] && (pick == -1 || weight[v] > weight[pick]))
                pick = v;
        numbered[pick] = true;
        order[i] = pick;
        for (auto w : g.neighbours(pick))
            if (!numbered[w])
                ++weight[w];
    }
    if (!is_perfect_elimination_ordering(g, order))
        return {false, {}};
    return {true, std::move(order)};
}

bool is_clique(const Graph &g, const VertexSet &s)
{
    auto members = s.members();
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!g.adjacent(members[a], members[b]))
                return false;
    return true;
}

VertexSet minimal_separator_in_neighbourhood(const Graph &g, const VertexSet &d)
{
    const int n = g.num_vertices();
    if (d.empty())
        throw precondition_error("dominating candidate is empty");
    auto dist = distances_from(g, d);
    Vertex far = -1;
    for (Vertex v = 0; v < n; ++v)
        if (dist[v] >= 2) {
            if (dist[v] == unreachable)
                throw precondition_error("graph not connected");
            far = v;
            break;
        }
    if (far == -1)
        throw precondition_error("set already dominates the graph in one step");

    VertexSet boundary(n);
    for (Vertex v = 0; v < n; ++v)
        if (dist[v] == 1)
            boundary.insert(v);

    // Component C of G - N(D) containing the far vertex, then S' = N(C).
    auto outside = boundary.complement();
    auto label = components(g, outside);
    VertexSet far_component(n);
    for (Vertex v = 0; v < n; ++v)
        if (label[v] == label[far])
            far_component.insert(v);
    auto wider = open_neighbourhood(g, far_component);

    // Shrink to the boundary of the component of G - S' that contains D.
    auto rest = wider.complement();
    auto rest_label = components(g, rest);
    Vertex anchor = d.members().front();
    VertexSet d_side(n);
    for (Vertex v = 0; v < n; ++v)
        if (rest_label[v] == rest_label[anchor])
            d_side.insert(v);
    return open_neighbourhood(g, d_side);
}

} // namespace rainbow
