#include <rainbow/colouring.hpp>
#include <rainbow/metrics.hpp>

#include <algorithm>
#include <queue>

namespace rainbow {

namespace {

// Candidate paths for one value of k: every simple path of length <= k per
// unordered pair, stored as edge lists. A colouring is rainbow connected iff
// each pair keeps at least one path whose edge colours are pairwise distinct.
struct PathTable {
    std::vector<std::vector<EdgeId>> path_edges;
    std::vector<int> path_pair;
    std::vector<std::vector<int>> paths_on_edge;
    int num_pairs = 0;
    std::vector<int> paths_per_pair;
};

PathTable enumerate_paths(const Graph &g, int k)
{
    const int n = g.num_vertices();
    PathTable table;
    table.paths_on_edge.resize(static_cast<std::size_t>(g.num_edges()));
    auto pair_index = [n](Vertex a, Vertex b) { return a * n + b; };
    table.num_pairs = n * n;
    table.paths_per_pair.assign(static_cast<std::size_t>(n * n), 0);

    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> edges;
    for (Vertex s = 0; s < n; ++s) {
        auto walk = [&](auto &&self, Vertex x) -> void {
            if (x > s) {
                int id = static_cast<int>(table.path_edges.size());
                table.path_edges.push_back(edges);
                table.path_pair.push_back(pair_index(s, x));
                ++table.paths_per_pair[pair_index(s, x)];
                for (auto e : edges)
                    table.paths_on_edge[e].push_back(id);
            }
            if (static_cast<int>(edges.size()) == k)
                return;
            auto nbrs = g.neighbours(x);
            auto ids = g.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (on_path[nbrs[i]])
                    continue;
                on_path[nbrs[i]] = 1;
                edges.push_back(ids[i]);
                self(self, nbrs[i]);
                edges.pop_back();
                on_path[nbrs[i]] = 0;
            }
        };
        on_path[s] = 1;
        walk(walk, s);
        on_path[s] = 0;
    }
    return table;
}

// Edges in BFS discovery order from a maximum-degree vertex, so that the
// short paths of nearby pairs are completed early in the search.
std::vector<EdgeId> search_order(const Graph &g)
{
    const int n = g.num_vertices();
    Vertex root = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(root))
            root = v;
    std::vector<char> seen_vertex(static_cast<std::size_t>(n), 0), seen_edge(static_cast<std::size_t>(g.num_edges()), 0);
    std::vector<EdgeId> order;
    std::queue<Vertex> queue;
    queue.push(root);
    seen_vertex[root] = 1;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop();
        auto nbrs = g.neighbours(x);
        auto ids = g.incident_edges(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (!seen_edge[ids[i]]) {
                seen_edge[ids[i]] = 1;
                order.push_back(ids[i]);
            }
            if (!seen_vertex[nbrs[i]]) {
                seen_vertex[nbrs[i]] = 1;
                queue.push(nbrs[i]);
            }
        }
    }
    return order;
}

class ColouringSearch {
public:
    ColouringSearch(const Graph &g, int k, std::int64_t node_budget)
        : g_(g), k_(k), budget_(node_budget), table_(enumerate_paths(g, k)), order_(search_order(g)),
          colour_(static_cast<std::size_t>(g.num_edges()), uncoloured),
          mask_(table_.path_edges.size(), 0), dead_(table_.path_edges.size(), 0),
          alive_(table_.paths_per_pair)
    {
    }

    enum class Outcome { found, refuted, out_of_budget };

    Outcome run()
    {
        const int n = g_.num_vertices();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (alive_[a * n + b] == 0)
                    return Outcome::refuted;
        return descend(0, -1);
    }

    std::int64_t nodes() const { return nodes_; }
    EdgeColouring witness() const { return EdgeColouring(colour_); }

private:
    struct Undo {
        int path;
        bool killed;
    };

    Outcome descend(std::size_t depth, Colour top)
    {
        if (depth == order_.size())
            return Outcome::found;
        auto e = order_[depth];
        // Symmetry breaking: colour top + 1 is the only new colour allowed here.
        Colour limit = std::min(k_ - 1, top + 1);
        for (Colour c = 0; c <= limit; ++c) {
            if (++nodes_ > budget_)
                return Outcome::out_of_budget;
            auto mark = undo_.size();
            bool ok = assign(e, c);
            if (ok) {
                auto r = descend(depth + 1, std::max(top, c));
                if (r != Outcome::refuted)
                    return r;
            }
            unassign(e, c, mark);
        }
        return Outcome::refuted;
    }

    bool assign(EdgeId e, Colour c)
    {
        colour_[e] = c;
        const std::uint64_t bit = std::uint64_t{1} << c;
        bool ok = true;
        for (auto p : table_.paths_on_edge[e]) {
            if (dead_[p])
                continue;
            if (mask_[p] & bit) {
                dead_[p] = 1;
                undo_.push_back({p, true});
                if (--alive_[table_.path_pair[p]] == 0)
                    ok = false;
            }
            else {
                mask_[p] |= bit;
                undo_.push_back({p, false});
            }
        }
        return ok;
    }

    void unassign(EdgeId e, Colour c, std::size_t mark)
    {
        const std::uint64_t bit = std::uint64_t{1} << c;
        while (undo_.size() > mark) {
            auto u = undo_.back();
            undo_.pop_back();
            if (u.killed) {
                dead_[u.path] = 0;
                ++alive_[table_.path_pair[u.path]];
            }
            else
                mask_[u.path] &= ~bit;
        }
        colour_[e] = uncoloured;
    }

    const Graph &g_;
    int k_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    PathTable table_;
    std::vector<EdgeId> order_;
    std::vector<Colour> colour_;
    std::vector<std::uint64_t> mask_;
    std::vector<char> dead_;
    std::vector<int> alive_;
    std::vector<Undo> undo_;
};

} // namespace

RcResult rc_exact(const Graph &g, RcBudget budget)
{
    if (!is_connected(g))
        throw precondition_error("graph not connected");
    if (g.num_edges() > budget.max_edges)
        throw precondition_error("graph has " + std::to_string(g.num_edges()) + " edges, above the cap of " +
                                 std::to_string(budget.max_edges));
    if (g.num_edges() > 64 || g.num_vertices() > 65)
        throw precondition_error("exact search supports at most 64 edges");

    RcResult result;
    const int n = g.num_vertices();
    result.lower_bound_used = diameter(g);
    if (n == 1) {
        result.rc_value = 0;
        result.witness = EdgeColouring(0);
        return result;
    }
    std::int64_t remaining = budget.max_nodes;
    for (int k = result.lower_bound_used; k <= n - 1; ++k) {
        ColouringSearch search(g, k, remaining);
        auto outcome = search.run();
        remaining -= search.nodes();
        if (outcome == ColouringSearch::Outcome::found) {
            result.rc_value = k;
            result.witness = search.witness();
            return result;
        }
        if (outcome == ColouringSearch::Outcome::out_of_budget) {
            result.status = RcResult::Status::inconclusive;
            result.rc_value = k;
            return result;
        }
    }
    throw internal_error("no rainbow colouring with n - 1 colours found; spanning tree bound violated");
}

} // namespace rainbow
