#include <rainbow/colourers.hpp>
#include <rainbow/metrics.hpp>

#include <algorithm>
#include <queue>

namespace rainbow {

namespace {

int half_up(int x) { return (x + 1) / 2; }

std::vector<Vertex> shortest_cycle(const Graph &g)
{
    const int n = g.num_vertices();
    auto target = girth(g);
    if (!target)
        throw precondition_error("graph is acyclic");
    for (Vertex r = 0; r < n; ++r) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        dist[r] = 0;
        std::queue<Vertex> queue;
        queue.push(r);
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop();
            for (auto y : g.neighbours(x)) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                }
                else if (y != parent[x] && x < y && dist[x] + dist[y] + 1 == *target) {
                    std::vector<Vertex> left, right;
                    for (Vertex a = x; a != -1; a = parent[a])
                        left.push_back(a);
                    for (Vertex b = y; b != -1; b = parent[b])
                        right.push_back(b);
                    if (left.back() != right.back())
                        continue;
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    auto sorted = left;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                        return left;
                }
            }
        }
    }
    throw internal_error("no cycle of girth length reconstructed");
}

struct State {
    VertexSet h;
    EdgeColouring col;

    int slack() const { return col.num_colours() - half_up(h.size()); }
};

// Colours every uncoloured edge inside h with an existing colour. Extra edges
// only add paths, so any colour will do.
void fill_chords(const Graph &g, State &s)
{
    auto palette = s.col.palette();
    const Colour filler = palette.empty() ? 0 : palette.front();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto &ed = g.edge(e);
        if (!s.col.is_coloured(e) && s.h.contains(ed.u) && s.h.contains(ed.v))
            s.col.set(e, filler);
    }
}

State attach(const Graph &g, const State &from, EdgeColouring col, std::initializer_list<const Ear *> ears)
{
    State next{from.h, std::move(col)};
    for (auto e : ears)
        for (auto v : e->internals())
            next.h.insert(v);
    fill_chords(g, next);
    return next;
}

bool tip_reaches_all(const Graph &g, const State &s, Vertex tip)
{
    auto cert = verify_rainbow_subgraph(g, s.col, s.h, [tip](Vertex a, Vertex b) { return a != tip && b != tip; });
    return cert.complete();
}

class EarGrowth {
public:
    EarGrowth(const Graph &g, const TwoConnectedOptions &options) : g_(g), options_(options) {}

    std::optional<EdgeColouring> run(State start)
    {
        if (search(start))
            return result_;
        return std::nullopt;
    }

    std::int64_t states() const { return states_; }

private:
    bool search(const State &s)
    {
        if (s.h.size() == g_.num_vertices()) {
            if (s.slack() > 1)
                return false;
            result_ = s.col;
            return true;
        }
        if (++states_ > options_.max_states)
            return false;

        auto list = enumerate_ears(g_, s.h, options_.ears);
        std::vector<const Ear *> odd, even;
        for (const auto &e : list.ears)
            (e.is_odd() ? odd : even).push_back(&e);

        std::vector<State> next;
        auto palette = s.col.palette();
        const Colour fresh = s.col.next_fresh();
        const auto width = static_cast<std::size_t>(options_.branching);

        for (std::size_t i = 0; i < odd.size() && i < width; ++i)
            next.push_back(attach(g_, s, colour_odd_ear(g_, s.col, *odd[i], {}), {odd[i]}));

        // Two old tip colours: the lemma leaves only the tip to check.
        std::size_t accepted = 0;
        for (std::size_t i = 0; i < even.size() && accepted < width; ++i) {
            auto tip = *even[i]->tip();
            bool found = false;
            for (auto t1 : palette) {
                for (auto t2 : palette) {
                    if (t1 == t2)
                        continue;
                    BalancedColouringSpec spec;
                    spec.t1 = t1;
                    spec.t2 = t2;
                    auto cand = attach(g_, s, colour_even_ear(g_, s.col, *even[i], spec), {even[i]});
                    if (tip_reaches_all(g_, cand, tip)) {
                        next.push_back(std::move(cand));
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            accepted += found ? 1 : 0;
        }

        // One fresh tip colour: the tip reaches H through it.
        if (!palette.empty())
            for (std::size_t i = 0; i < even.size() && i < width; ++i) {
                BalancedColouringSpec spec;
                spec.t1 = fresh;
                spec.t2 = palette.front();
                next.push_back(attach(g_, s, colour_even_ear(g_, s.col, *even[i], spec), {even[i]}));
            }

        // Internally disjoint even ears sharing two fresh tip colours.
        for (std::size_t want : {4u, 3u, 2u}) {
            std::vector<const Ear *> group;
            VertexSet used(g_.num_vertices());
            for (auto e : even) {
                auto inner = e->internals();
                if (std::any_of(inner.begin(), inner.end(), [&](Vertex v) { return used.contains(v); }))
                    continue;
                for (auto v : inner)
                    used.insert(v);
                group.push_back(e);
                if (group.size() == want)
                    break;
            }
            if (group.size() != want)
                continue;
            EdgeColouring col = s.col;
            for (auto e : group) {
                BalancedColouringSpec spec;
                spec.t1 = fresh;
                spec.t2 = fresh + 1;
                col = colour_even_ear(g_, col, *e, spec);
            }
            State cand{s.h, std::move(col)};
            for (auto e : group)
                for (auto v : e->internals())
                    cand.h.insert(v);
            fill_chords(g_, cand);
            next.push_back(std::move(cand));
        }

        std::stable_sort(next.begin(), next.end(), [](const State &a, const State &b) { return a.slack() < b.slack(); });
        for (const auto &n : next) {
            if (n.slack() > 1)
                break;
            if (search(n))
                return true;
            if (states_ > options_.max_states)
                return false;
        }
        return false;
    }

    const Graph &g_;
    const TwoConnectedOptions &options_;
    std::int64_t states_ = 0;
    EdgeColouring result_;
};

EdgeColouring grow_from_cycle(const Graph &g, const TwoConnectedOptions &options)
{
    auto cycle = shortest_cycle(g);
    const int len = static_cast<int>(cycle.size());
    State start{VertexSet(g.num_vertices(), cycle), EdgeColouring(g.num_edges())};
    for (int i = 0; i < len; ++i)
        start.col.set(g.edge_between(cycle[i], cycle[(i + 1) % len]), i % half_up(len));
    fill_chords(g, start);

    EarGrowth growth(g, options);
    auto out = growth.run(std::move(start));
    if (!out)
        throw internal_error("ear growth found no colouring within ceil(n/2) + 1 colours after " +
                             std::to_string(growth.states()) + " states");
    return *out;
}

EdgeColouring colour_recursive(const Graph &g, const TwoConnectedOptions &options)
{
    auto ear = find_removable_odd_ear(g, options.ears);
    if (!ear)
        return grow_from_cycle(g, options);

    VertexSet keep = VertexSet::all(g.num_vertices());
    for (auto v : ear->internals())
        keep.erase(v);
    std::vector<bool> edge_kept(static_cast<std::size_t>(g.num_edges()), true);
    if (ear->length() == 1)
        edge_kept[g.edge_between(ear->path[0], ear->path[1])] = false;
    auto sub = edge_subgraph(g, keep, edge_kept);
    auto inner = colour_recursive(sub.graph, options);

    EdgeColouring col(g.num_edges());
    for (EdgeId e = 0; e < sub.graph.num_edges(); ++e)
        col.set(sub.to_parent_edge[e], inner[e]);
    col = colour_odd_ear(g, col, *ear, {});
    const Colour filler = col.palette().front();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!col.is_coloured(e))
            col.set(e, filler);
    return col;
}

} // namespace

EdgeColouring colour_two_connected(const Graph &g, const TwoConnectedOptions &options)
{
    if (!is_biconnected(g))
        throw precondition_error("graph is not 2-connected");
    auto col = colour_recursive(g, options).compacted();
    const int n = g.num_vertices();
    if (col.num_colours() > half_up(n) + 1)
        throw internal_error("two-connected colouring used " + std::to_string(col.num_colours()) +
                             " colours, above ceil(n/2) + 1 = " + std::to_string(half_up(n) + 1));
    auto cert = verify_rainbow_connected(g, col);
    if (!cert.complete())
        throw internal_error("two-connected colouring fails for pair (" + std::to_string(cert.failing.front().first) +
                             ", " + std::to_string(cert.failing.front().second) + ")");
    return col;
}

} // namespace rainbow
