#include <rainbow/colouring.hpp>
#include <rainbow/metrics.hpp>

#include <algorithm>
#include <queue>

namespace rainbow {

EdgeColouring::EdgeColouring(int num_edges) : colour_of_(static_cast<std::size_t>(num_edges), uncoloured) {}

EdgeColouring::EdgeColouring(std::vector<Colour> colour_of) : colour_of_(std::move(colour_of))
{
    for (std::size_t e = 0; e < colour_of_.size(); ++e)
        if (colour_of_[e] < uncoloured)
            throw precondition_error("negative colour id on edge " + std::to_string(e));
}

void EdgeColouring::set(EdgeId e, Colour c)
{
    if (c < uncoloured)
        throw precondition_error("negative colour id");
    colour_of_[e] = c;
}

std::optional<EdgeId> EdgeColouring::first_uncoloured() const
{
    for (EdgeId e = 0; e < num_edges(); ++e)
        if (colour_of_[e] == uncoloured)
            return e;
    return std::nullopt;
}

std::vector<Colour> EdgeColouring::palette() const
{
    std::vector<Colour> out;
    for (auto c : colour_of_)
        if (c != uncoloured)
            out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int EdgeColouring::num_colours() const
{
    return static_cast<int>(palette().size());
}

bool EdgeColouring::uses(Colour c) const
{
    return c != uncoloured && std::find(colour_of_.begin(), colour_of_.end(), c) != colour_of_.end();
}

Colour EdgeColouring::next_fresh() const
{
    Colour top = uncoloured;
    for (auto c : colour_of_)
        top = std::max(top, c);
    return top + 1;
}

EdgeColouring EdgeColouring::compacted() const
{
    std::vector<Colour> relabel(static_cast<std::size_t>(next_fresh()), uncoloured);
    Colour next = 0;
    std::vector<Colour> out(colour_of_.size(), uncoloured);
    for (std::size_t e = 0; e < colour_of_.size(); ++e) {
        auto c = colour_of_[e];
        if (c == uncoloured)
            continue;
        if (relabel[c] == uncoloured)
            relabel[c] = next++;
        out[e] = relabel[c];
    }
    return EdgeColouring(std::move(out));
}

std::optional<std::vector<Vertex>> RainbowCertificate::path_between(Vertex u, Vertex v) const
{
    for (const auto &w : witnesses) {
        if (w.u == u && w.v == v)
            return w.path;
        if (w.u == v && w.v == u)
            return std::vector<Vertex>(w.path.rbegin(), w.path.rend());
    }
    return std::nullopt;
}

bool is_rainbow_path(const Graph &g, const EdgeColouring &c, std::span<const Vertex> path)
{
    std::vector<Colour> seen;
    std::vector<Vertex> visited(path.begin(), path.end());
    std::sort(visited.begin(), visited.end());
    if (std::adjacent_find(visited.begin(), visited.end()) != visited.end())
        return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto e = g.edge_id(path[i], path[i + 1]);
        if (!e || !c.is_coloured(*e))
            return false;
        if (std::find(seen.begin(), seen.end(), c[*e]) != seen.end())
            return false;
        seen.push_back(c[*e]);
    }
    return true;
}

namespace {

// Depth-first search for a rainbow path, goal-directed by BFS distance in the
// coloured subgraph and cut off once the remaining distance cannot fit.
class RainbowSearch {
public:
    RainbowSearch(const Graph &g, const EdgeColouring &c, const VertexSet &members, int max_length)
        : g_(g), c_(c), members_(members), max_length_(max_length),
          colour_used_(static_cast<std::size_t>(std::max(c.next_fresh(), 1)), 0),
          on_path_(static_cast<std::size_t>(g.num_vertices()), 0)
    {
    }

    void aim_at(Vertex target)
    {
        target_ = target;
        dist_.assign(static_cast<std::size_t>(g_.num_vertices()), unreachable);
        dist_[target] = 0;
        std::queue<Vertex> queue;
        queue.push(target);
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop();
            auto nbrs = g_.neighbours(x);
            auto ids = g_.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                if (c_.is_coloured(ids[i]) && members_.contains(nbrs[i]) && dist_[nbrs[i]] == unreachable) {
                    dist_[nbrs[i]] = dist_[x] + 1;
                    queue.push(nbrs[i]);
                }
        }
    }

    std::optional<std::vector<Vertex>> find_from(Vertex source)
    {
        if (dist_[source] == unreachable || dist_[source] > max_length_)
            return std::nullopt;
        path_.assign(1, source);
        on_path_[source] = 1;
        bool found = extend(source, 0);
        on_path_[source] = 0;
        if (!found)
            return std::nullopt;
        for (auto v : path_)
            on_path_[v] = 0;
        on_path_[source] = 0;
        auto out = path_;
        std::fill(colour_used_.begin(), colour_used_.end(), 0);
        return out;
    }

private:
    bool extend(Vertex x, int used)
    {
        if (x == target_)
            return true;
        auto nbrs = g_.neighbours(x);
        auto ids = g_.incident_edges(x);
        std::vector<std::pair<int, std::size_t>> moves;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            auto y = nbrs[i];
            auto e = ids[i];
            if (!c_.is_coloured(e) || !members_.contains(y) || on_path_[y] || colour_used_[c_[e]])
                continue;
            if (dist_[y] == unreachable || used + 1 + dist_[y] > max_length_)
                continue;
            moves.emplace_back(dist_[y], i);
        }
        std::sort(moves.begin(), moves.end());
        for (auto [d, i] : moves) {
            auto y = nbrs[i];
            auto colour = c_[ids[i]];
            colour_used_[colour] = 1;
            on_path_[y] = 1;
            path_.push_back(y);
            if (extend(y, used + 1))
                return true;
            path_.pop_back();
            on_path_[y] = 0;
            colour_used_[colour] = 0;
        }
        return false;
    }

    const Graph &g_;
    const EdgeColouring &c_;
    const VertexSet &members_;
    int max_length_;
    Vertex target_ = -1;
    std::vector<int> dist_;
    std::vector<char> colour_used_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
};

RainbowCertificate verify_pairs(const Graph &g, const EdgeColouring &c, const VertexSet &members,
                                const PairFilter &skip, VerifyOptions options)
{
    const int n = g.num_vertices();
    int max_length = options.max_path_length > 0 ? options.max_path_length : c.num_colours();
    RainbowSearch search(g, c, members, max_length);

    std::vector<std::vector<Vertex>> found(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<char> known(found.size(), 0);
    auto slot = [n](Vertex a, Vertex b) {
        return static_cast<std::size_t>(std::min(a, b)) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(std::max(a, b));
    };
    // Every subpath of a rainbow path is rainbow, so one hit certifies all of them.
    auto record = [&](const std::vector<Vertex> &path) {
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j) {
                auto s = slot(path[i], path[j]);
                if (known[s])
                    continue;
                known[s] = 1;
                std::vector<Vertex> sub(path.begin() + static_cast<std::ptrdiff_t>(i),
                                        path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                if (sub.front() > sub.back())
                    std::reverse(sub.begin(), sub.end());
                found[s] = std::move(sub);
            }
    };

    RainbowCertificate cert;
    auto vertices = members.members();
    for (auto t : vertices) {
        bool aimed = false;
        for (auto s : vertices) {
            if (s >= t || known[slot(s, t)] || (skip && skip(s, t)))
                continue;
            if (!aimed) {
                search.aim_at(t);
                aimed = true;
            }
            if (auto path = search.find_from(s))
                record(*path);
            else
                cert.failing.emplace_back(s, t);
        }
    }
    for (auto u : vertices)
        for (auto v : vertices) {
            if (u >= v || !known[slot(u, v)] || (skip && skip(u, v)))
                continue;
            cert.witnesses.push_back({u, v, found[slot(u, v)]});
        }
    std::sort(cert.failing.begin(), cert.failing.end());
    return cert;
}

} // namespace

RainbowCertificate verify_rainbow_connected(const Graph &g, const EdgeColouring &c, VerifyOptions options)
{
    if (c.num_edges() != g.num_edges())
        throw precondition_error("colouring covers " + std::to_string(c.num_edges()) + " edges, graph has " +
                                 std::to_string(g.num_edges()));
    if (auto e = c.first_uncoloured())
        throw precondition_error("edge " + std::to_string(*e) + " " + describe_edge(g.edge(*e)) +
                                 " is uncoloured");
    return verify_pairs(g, c, VertexSet::all(g.num_vertices()), {}, options);
}

RainbowCertificate verify_rainbow_subgraph(const Graph &g, const EdgeColouring &c, const VertexSet &members,
                                           const PairFilter &skip, VerifyOptions options)
{
    if (c.num_edges() != g.num_edges())
        throw precondition_error("colouring size does not match graph");
    return verify_pairs(g, c, members, skip, options);
}

RcBounds rc_bounds(const Graph &g)
{
    if (!is_connected(g))
        throw precondition_error("graph not connected");
    return {diameter(g), g.num_vertices() - 1};
}

EdgeColouring spanning_tree_colouring(const Graph &g, const VertexSet &members, Colour first_colour)
{
    EdgeColouring c(g.num_edges());
    if (members.empty())
        return c;
    if (!is_connected_subset(g, members))
        throw precondition_error("spanning tree colouring needs a connected vertex set");
    std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
    auto root = members.members().front();
    seen[root] = true;
    std::queue<Vertex> queue;
    queue.push(root);
    Colour next = first_colour;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop();
        auto nbrs = g.neighbours(x);
        auto ids = g.incident_edges(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (members.contains(nbrs[i]) && !seen[nbrs[i]]) {
                seen[nbrs[i]] = true;
                c.set(ids[i], next++);
                queue.push(nbrs[i]);
            }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto &ed = g.edge(e);
        if (!c.is_coloured(e) && members.contains(ed.u) && members.contains(ed.v))
            c.set(e, first_colour);
    }
    return c;
}

} // namespace rainbow
