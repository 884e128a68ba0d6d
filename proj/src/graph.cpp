#include <rainbow/graph.hpp>

#include <algorithm>
#include <numeric>

namespace rainbow {

VertexSet::VertexSet(int universe) : bits_(static_cast<std::size_t>(universe), false) {}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

VertexSet VertexSet::all(int universe)
{
    VertexSet s(universe);
    s.bits_.assign(static_cast<std::size_t>(universe), true);
    s.count_ = universe;
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v < 0 || v >= universe())
        throw precondition_error("vertex " + std::to_string(v) + " outside universe of size " +
                                 std::to_string(universe()));
    if (!bits_[v]) {
        bits_[v] = true;
        ++count_;
    }
}

void VertexSet::erase(Vertex v)
{
    if (contains(v)) {
        bits_[v] = false;
        --count_;
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int v = 0; v < universe(); ++v)
        if (bits_[v])
            out.push_back(v);
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(universe());
    for (int v = 0; v < universe(); ++v)
        if (!bits_[v])
            out.insert(v);
    return out;
}

bool VertexSet::is_subset_of(const VertexSet &other) const
{
    for (int v = 0; v < universe(); ++v)
        if (bits_[v] && !other.contains(v))
            return false;
    return true;
}

VertexSet &VertexSet::operator|=(const VertexSet &other)
{
    for (int v = 0; v < other.universe(); ++v)
        if (other.bits_[v])
            insert(v);
    return *this;
}

std::string describe_edge(const Edge &e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n < 0)
        throw precondition_error("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    adj_edges_.resize(static_cast<std::size_t>(n));
    for (EdgeId id = 0; id < num_edges(); ++id) {
        const auto &e = edges_[id];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw precondition_error("edge " + describe_edge(e) + " references a vertex outside 0.." +
                                     std::to_string(n - 1));
        if (e.u == e.v)
            throw precondition_error("self-loop at edge " + describe_edge(e));
        adj_[e.u].push_back(e.v);
        adj_edges_[e.u].push_back(id);
        adj_[e.v].push_back(e.u);
        adj_edges_[e.v].push_back(id);
    }
    for (int v = 0; v < n; ++v) {
        auto &nbrs = adj_[v];
        auto &ids = adj_edges_[v];
        std::vector<std::size_t> order(nbrs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return nbrs[a] < nbrs[b]; });
        std::vector<Vertex> sorted_nbrs;
        std::vector<EdgeId> sorted_ids;
        for (auto i : order) {
            if (!sorted_nbrs.empty() && sorted_nbrs.back() == nbrs[i])
                throw precondition_error("duplicate edge " + describe_edge(edges_[ids[i]]));
            sorted_nbrs.push_back(nbrs[i]);
            sorted_ids.push_back(ids[i]);
        }
        nbrs = std::move(sorted_nbrs);
        ids = std::move(sorted_ids);
    }
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const
{
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        return std::nullopt;
    const auto &nbrs = adj_[a];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b)
        return std::nullopt;
    return adj_edges_[a][static_cast<std::size_t>(it - nbrs.begin())];
}

EdgeId Graph::edge_between(Vertex a, Vertex b) const
{
    auto id = edge_id(a, b);
    if (!id)
        throw precondition_error("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                 " are not adjacent");
    return *id;
}

Subgraph edge_subgraph(const Graph &g, const VertexSet &keep, const std::vector<bool> &edge_kept)
{
    Subgraph sub;
    sub.from_parent_vertex.assign(static_cast<std::size_t>(g.num_vertices()), -1);
    for (auto v : keep.members()) {
        sub.from_parent_vertex[v] = static_cast<Vertex>(sub.to_parent_vertex.size());
        sub.to_parent_vertex.push_back(v);
    }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto &ed = g.edge(e);
        if (!edge_kept[e] || !keep.contains(ed.u) || !keep.contains(ed.v))
            continue;
        edges.push_back({sub.from_parent_vertex[ed.u], sub.from_parent_vertex[ed.v]});
        sub.to_parent_edge.push_back(e);
    }
    sub.graph = Graph(static_cast<int>(sub.to_parent_vertex.size()), std::move(edges));
    return sub;
}

Subgraph induced_subgraph(const Graph &g, const VertexSet &keep)
{
    return edge_subgraph(g, keep, std::vector<bool>(static_cast<std::size_t>(g.num_edges()), true));
}

} // namespace rainbow
