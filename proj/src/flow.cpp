#include "flow.hpp"

#include <algorithm>
#include <queue>

namespace rainbow::detail {

UnitFlow::UnitFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

void UnitFlow::add_arc(int from, int to, int capacity)
{
    adj_[from].push_back({to, static_cast<int>(adj_[to].size()), capacity, capacity});
    adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, 0, 0});
}

void UnitFlow::add_undirected(int a, int b, int capacity)
{
    adj_[a].push_back({b, static_cast<int>(adj_[b].size()), capacity, capacity});
    adj_[b].push_back({a, static_cast<int>(adj_[a].size()) - 1, capacity, capacity});
}

int UnitFlow::max_flow(int source, int sink, int limit)
{
    int flow = 0;
    const auto nodes = adj_.size();
    std::vector<std::pair<int, int>> parent(nodes);
    while (flow < limit) {
        std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
        parent[source] = {source, -1};
        std::queue<int> queue;
        queue.push(source);
        while (!queue.empty() && parent[sink].first == -1) {
            int x = queue.front();
            queue.pop();
            for (int i = 0; i < static_cast<int>(adj_[x].size()); ++i) {
                const auto &arc = adj_[x][i];
                if (arc.cap > 0 && parent[arc.to].first == -1) {
                    parent[arc.to] = {x, i};
                    queue.push(arc.to);
                }
            }
        }
        if (parent[sink].first == -1)
            break;
        for (int y = sink; y != source;) {
            auto [x, i] = parent[y];
            auto &arc = adj_[x][i];
            arc.cap -= 1;
            adj_[y][arc.rev].cap += 1;
            y = x;
        }
        ++flow;
    }
    return flow;
}

std::vector<std::vector<int>> UnitFlow::flow_paths(int source, int sink) const
{
    // Net positive flow on arc x->y is original - cap when original > 0.
    std::vector<std::vector<int>> used(adj_.size());
    for (std::size_t x = 0; x < adj_.size(); ++x)
        for (const auto &arc : adj_[x])
            for (int k = 0; k < arc.original - arc.cap; ++k)
                used[x].push_back(arc.to);
    // Cancel opposite flows on undirected pairs.
    for (std::size_t x = 0; x < used.size(); ++x) {
        for (std::size_t i = 0; i < used[x].size(); ++i) {
            int y = used[x][i];
            auto &back = used[y];
            auto it = std::find(back.begin(), back.end(), static_cast<int>(x));
            if (it != back.end()) {
                back.erase(it);
                used[x].erase(used[x].begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            }
        }
    }
    std::vector<std::vector<int>> paths;
    while (!used[source].empty()) {
        std::vector<int> path{source};
        int x = source;
        while (x != sink && !used[x].empty()) {
            int y = used[x].back();
            used[x].pop_back();
            path.push_back(y);
            x = y;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

int local_edge_connectivity(const Graph &g, Vertex s, Vertex t, int limit)
{
    UnitFlow flow(g.num_vertices());
    for (const auto &e : g.edges())
        flow.add_undirected(e.u, e.v, 1);
    return flow.max_flow(s, t, limit);
}

int local_vertex_connectivity(const Graph &g, Vertex s, Vertex t, int limit)
{
    // Vertex v splits into in = 2v and out = 2v + 1.
    const int n = g.num_vertices();
    UnitFlow flow(2 * n);
    for (Vertex v = 0; v < n; ++v)
        flow.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
    for (const auto &e : g.edges()) {
        flow.add_arc(2 * e.u + 1, 2 * e.v, 1);
        flow.add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    return flow.max_flow(2 * s + 1, 2 * t, limit);
}

} // namespace rainbow::detail
