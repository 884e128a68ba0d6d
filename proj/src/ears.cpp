#include <rainbow/ears.hpp>
#include <rainbow/metrics.hpp>

#include <algorithm>

namespace rainbow {

std::span<const Vertex> Ear::internals() const
{
    if (path.size() < 2)
        return {};
    return std::span<const Vertex>(path).subspan(1, path.size() - 2);
}

std::optional<Vertex> Ear::tip() const
{
    if (length() < 2 || is_odd())
        return std::nullopt;
    return path[static_cast<std::size_t>(length() / 2)];
}

EarList enumerate_ears(const Graph &g, const VertexSet &h, const EarSearchOptions &options)
{
    const int n = g.num_vertices();
    EarList out;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> path;
    std::int64_t nodes = 0;

    auto walk = [&](auto &&self, Vertex x) -> void {
        if (out.truncated)
            return;
        if (++nodes > options.max_nodes) {
            out.truncated = true;
            return;
        }
        for (auto y : g.neighbours(x)) {
            if (h.contains(y)) {
                if (y > path.front()) {
                    path.push_back(y);
                    out.ears.push_back({path});
                    path.pop_back();
                }
                continue;
            }
            if (on_path[y])
                continue;
            on_path[y] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            on_path[y] = 0;
        }
    };

    for (auto a : h.members())
        for (auto y : g.neighbours(a)) {
            if (h.contains(y))
                continue;
            path = {a, y};
            on_path[y] = 1;
            walk(walk, y);
            on_path[y] = 0;
        }

    std::sort(out.ears.begin(), out.ears.end(), [](const Ear &a, const Ear &b) {
        if (a.length() != b.length())
            return a.length() > b.length();
        return a.path < b.path;
    });
    return out;
}

Ear find_largest_ear(const Graph &g, const VertexSet &h, const std::optional<VertexSet> &anchor,
                     const EarSearchOptions &options)
{
    if (h.size() == g.num_vertices())
        throw precondition_error("host spans graph");
    if (h.size() < 2 || !is_connected_subset(g, h))
        throw precondition_error("host must be connected with at least two vertices");
    auto list = enumerate_ears(g, h, options);
    for (auto &e : list.ears) {
        if (anchor && !anchor->contains(e.path.front()) && !anchor->contains(e.path.back()))
            continue;
        return e;
    }
    throw precondition_error(anchor ? "no ear has a foot in the anchor set" : "no ear on the host");
}

void validate_ear(const Graph &g, const VertexSet &h, const Ear &e)
{
    if (e.length() < 1)
        throw precondition_error("ear needs at least one edge");
    if (e.path.front() == e.path.back())
        throw precondition_error("ear foots coincide");
    if (!h.contains(e.path.front()) || !h.contains(e.path.back()))
        throw precondition_error("ear foot outside the host");
    std::vector<Vertex> inner(e.internals().begin(), e.internals().end());
    std::sort(inner.begin(), inner.end());
    if (std::adjacent_find(inner.begin(), inner.end()) != inner.end())
        throw precondition_error("ear repeats a vertex");
    for (auto v : inner)
        if (h.contains(v))
            throw precondition_error("internal vertex " + std::to_string(v) + " lies in the host");
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i)
        if (!g.adjacent(e.path[i], e.path[i + 1]))
            throw precondition_error("ear hop " + std::to_string(e.path[i]) + "-" + std::to_string(e.path[i + 1]) +
                                     " is not an edge");
}

EarClassification classify_ear(const Graph &g, const Ear &e)
{
    VertexSet keep = VertexSet::all(g.num_vertices());
    for (auto v : e.internals())
        keep.erase(v);
    std::vector<bool> edge_kept(static_cast<std::size_t>(g.num_edges()), true);
    if (e.length() == 1)
        edge_kept[g.edge_between(e.path[0], e.path[1])] = false;
    auto rest = edge_subgraph(g, keep, edge_kept);

    EarClassification out;
    out.removable = is_biconnected(rest.graph);
    out.clean_removable =
        out.removable && std::all_of(e.internals().begin(), e.internals().end(), [&](Vertex v) { return g.degree(v) == 2; });
    return out;
}

std::optional<Ear> find_removable_odd_ear(const Graph &g, const EarSearchOptions &options)
{
    const int n = g.num_vertices();
    std::int64_t nodes = 0;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> path;

    for (int m = 1; m <= n - 2; m += 2) {
        std::optional<Ear> hit;
        auto walk = [&](auto &&self, Vertex x) -> void {
            if (hit || ++nodes > options.max_nodes)
                return;
            if (static_cast<int>(path.size()) == m + 1) {
                if (path.back() > path.front()) {
                    Ear e{path};
                    if (classify_ear(g, e).removable)
                        hit = std::move(e);
                }
                return;
            }
            for (auto y : g.neighbours(x)) {
                if (on_path[y])
                    continue;
                on_path[y] = 1;
                path.push_back(y);
                self(self, y);
                path.pop_back();
                on_path[y] = 0;
                if (hit)
                    return;
            }
        };
        for (Vertex s = 0; s < n && !hit; ++s) {
            path = {s};
            on_path[s] = 1;
            walk(walk, s);
            on_path[s] = 0;
        }
        if (hit)
            return hit;
        if (nodes > options.max_nodes)
            break;
    }
    return std::nullopt;
}

namespace {

VertexSet host_vertices(const Graph &g, const EdgeColouring &h)
{
    VertexSet out(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (h.is_coloured(e)) {
            out.insert(g.edge(e).u);
            out.insert(g.edge(e).v);
        }
    return out;
}

std::vector<EdgeId> ear_edges(const Graph &g, const EdgeColouring &h, const Ear &e)
{
    if (h.num_edges() != g.num_edges())
        throw precondition_error("colouring size does not match graph");
    auto host = host_vertices(g, h);
    validate_ear(g, host, e);
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i + 1 < e.path.size(); ++i) {
        auto id = g.edge_between(e.path[i], e.path[i + 1]);
        if (h.is_coloured(id))
            throw precondition_error("ear edge " + describe_edge(g.edge(id)) + " is already coloured");
        out.push_back(id);
    }
    return out;
}

} // namespace

EdgeColouring colour_odd_ear(const Graph &g, const EdgeColouring &h, const Ear &e, const BalancedColouringSpec &spec)
{
    if (!e.is_odd())
        throw precondition_error("odd ear expected");
    auto edges = ear_edges(g, h, e);
    auto palette = h.palette();
    Colour c_old = uncoloured;
    if (spec.c_old) {
        if (!std::binary_search(palette.begin(), palette.end(), *spec.c_old))
            throw precondition_error("c_old " + std::to_string(*spec.c_old) + " is not a colour of the host");
        c_old = *spec.c_old;
    }
    else {
        for (auto c : palette)
            if (std::find(spec.excluded_old.begin(), spec.excluded_old.end(), c) == spec.excluded_old.end()) {
                c_old = c;
                break;
            }
        if (c_old == uncoloured)
            throw precondition_error("host has no admissible old colour");
    }
    const Colour base = spec.fresh_base.value_or(h.next_fresh());
    if (base < h.next_fresh())
        throw precondition_error("fresh colours overlap the host palette");

    const int k = e.length() / 2;
    EdgeColouring out = h;
    for (int j = 0; j < k; ++j) {
        out.set(edges[static_cast<std::size_t>(j)], base + j);
        out.set(edges[static_cast<std::size_t>(j + k + 1)], base + j);
    }
    out.set(edges[static_cast<std::size_t>(k)], c_old);
    return out;
}

EdgeColouring colour_even_ear(const Graph &g, const EdgeColouring &h, const Ear &e, const BalancedColouringSpec &spec)
{
    if (e.is_odd())
        throw precondition_error("even ear expected");
    auto edges = ear_edges(g, h, e);
    if (spec.t1 < 0 || spec.t2 < 0)
        throw precondition_error("tip colours must be given");
    if (spec.t1 == spec.t2)
        throw precondition_error("tip colours must differ");
    const int k = e.length() / 2;
    const Colour base = spec.fresh_base.value_or(std::max({h.next_fresh(), spec.t1 + 1, spec.t2 + 1}));
    if (base < h.next_fresh())
        throw precondition_error("fresh colours overlap the host palette");
    for (auto t : {spec.t1, spec.t2})
        if (t >= base && t < base + k - 1)
            throw precondition_error("tip colour " + std::to_string(t) + " collides with a balanced colour");

    EdgeColouring out = h;
    for (int j = 0; j + 2 <= k; ++j) {
        out.set(edges[static_cast<std::size_t>(j)], base + j);
        out.set(edges[static_cast<std::size_t>(j + k + 1)], base + j);
    }
    out.set(edges[static_cast<std::size_t>(k - 1)], spec.t1);
    out.set(edges[static_cast<std::size_t>(k)], spec.t2);
    return out;
}

} // namespace rainbow
