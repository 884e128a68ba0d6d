#include <rainbow/generators.hpp>
#include <rainbow/metrics.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>

namespace rainbow {

namespace {

class EdgeBuilder {
public:
    explicit EdgeBuilder(int n) : n_(n) {}

    void add(Vertex a, Vertex b)
    {
        if (a == b)
            return;
        if (seen_.insert({std::min(a, b), std::max(a, b)}).second)
            edges_.push_back({a, b});
    }
    bool has(Vertex a, Vertex b) const { return seen_.count({std::min(a, b), std::max(a, b)}) > 0; }
    Graph build() const { return Graph(n_, edges_); }

private:
    int n_;
    std::vector<Edge> edges_;
    std::set<std::pair<Vertex, Vertex>> seen_;
};

std::int64_t need(const FamilySpec &spec, const std::string &key)
{
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw precondition_error("family " + spec.family + " needs parameter " + key);
    return it->second;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

Graph gen_layered_tight(int k, int d)
{
    if (k < 3)
        throw precondition_error("layered family needs k >= 3 (edge connectivity 3k - 1 >= 8)");
    if (d < 1)
        throw precondition_error("layered family needs d >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(d + 1), k);
    sizes[1] = 2 * k;
    sizes[d] = 2 * k;
    if (d == 1)
        sizes[0] = 2 * k;
    std::vector<int> first(sizes.size() + 1, 0);
    std::partial_sum(sizes.begin(), sizes.end(), first.begin() + 1);
    EdgeBuilder b(first.back());
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int x = first[i]; x < first[i + 1]; ++x) {
            for (int y = x + 1; y < first[i + 1]; ++y)
                b.add(x, y);
            if (i + 1 < sizes.size())
                for (int y = first[i + 1]; y < first[i + 2]; ++y)
                    b.add(x, y);
        }
    return b.build();
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw precondition_error("cycle needs n >= 3");
    EdgeBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add(i, (i + 1) % n);
    return b.build();
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw precondition_error("complete graph needs n >= 1");
    EdgeBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add(i, j);
    return b.build();
}

Graph path_graph(int n)
{
    if (n < 1)
        throw precondition_error("path needs n >= 1");
    EdgeBuilder b(n);
    for (int i = 0; i + 1 < n; ++i)
        b.add(i, i + 1);
    return b.build();
}

Graph star_graph(int leaves)
{
    if (leaves < 1)
        throw precondition_error("star needs at least one leaf");
    EdgeBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        b.add(0, i);
    return b.build();
}

Graph theta_graph(int a, int b, int c)
{
    if (a < 1 || b < 1 || c < 1 || (a == 1) + (b == 1) + (c == 1) > 1)
        throw precondition_error("theta graph needs lengths >= 1 with at most one equal to 1");
    const int n = 2 + (a - 1) + (b - 1) + (c - 1);
    EdgeBuilder out(n);
    Vertex next = 2;
    for (int len : {a, b, c}) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
            out.add(prev, next);
            prev = next++;
        }
        out.add(prev, 1);
    }
    return out.build();
}

Graph hypercube_graph(int dim)
{
    if (dim < 1 || dim > 16)
        throw precondition_error("hypercube dimension must lie in 1..16");
    const int n = 1 << dim;
    EdgeBuilder b(n);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < dim; ++i)
            b.add(x, x ^ (1 << i));
    return b.build();
}

Graph lcf_graph(int n, std::initializer_list<int> shifts)
{
    EdgeBuilder b(n);
    for (int i = 0; i < n; ++i)
        b.add(i, (i + 1) % n);
    std::vector<int> s(shifts);
    for (int i = 0; i < n; ++i)
        b.add(i, ((i + s[static_cast<std::size_t>(i) % s.size()]) % n + n) % n);
    return b.build();
}

Graph petersen_graph()
{
    EdgeBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add(i, (i + 1) % 5);
        b.add(i, i + 5);
        b.add(i + 5, (i + 2) % 5 + 5);
    }
    return b.build();
}

Graph heawood_graph() { return lcf_graph(14, {5, -5}); }

Graph mcgee_graph() { return lcf_graph(24, {12, 7, -7}); }

Graph cage55_graph()
{
    // Pentagon h is 5h..5h+4, pentagram i is 15+5i..15+5i+4.
    EdgeBuilder b(30);
    for (int h = 0; h < 3; ++h)
        for (int j = 0; j < 5; ++j) {
            b.add(5 * h + j, 5 * h + (j + 1) % 5);
            b.add(15 + 5 * h + j, 15 + 5 * h + (j + 2) % 5);
        }
    for (int h = 0; h < 3; ++h)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j)
                b.add(5 * h + j, 15 + 5 * i + (h * i + j) % 5);
    return b.build();
}

Graph named_graph(const std::string &name)
{
    auto key = lower(name);
    if (key == "petersen")
        return petersen_graph();
    if (key == "heawood")
        return heawood_graph();
    if (key == "mcgee")
        return mcgee_graph();
    if (key == "cage55" || key == "foster" || key == "foster-cage")
        return cage55_graph();
    throw precondition_error("unknown catalogue graph '" + name + "'");
}

Graph random_k_connected(int n, int kappa, std::uint64_t seed, int extra_edges)
{
    if (kappa < 1 || n < kappa + 1)
        throw precondition_error("need n >= kappa + 1 and kappa >= 1");
    if (n < 3)
        return complete_graph(n);
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    EdgeBuilder b(n);
    int placed = pick(3, std::min(n, 6));
    for (int i = 0; i < placed; ++i)
        b.add(order[i], order[(i + 1) % placed]);
    while (placed < n) {
        // Open ear with 1..3 new vertices between two distinct placed vertices.
        int fresh = std::min(n - placed, pick(1, 3));
        Vertex a = order[static_cast<std::size_t>(pick(0, placed - 1))];
        Vertex z = a;
        while (z == a)
            z = order[static_cast<std::size_t>(pick(0, placed - 1))];
        Vertex prev = a;
        for (int i = 0; i < fresh; ++i) {
            b.add(prev, order[placed + i]);
            prev = order[placed + i];
        }
        b.add(prev, z);
        placed += fresh;
    }
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (int i = 0, tries = 0; i < extra_edges && tries < 50 * (extra_edges + 1); ++tries) {
        Vertex x = pick(0, n - 1), y = pick(0, n - 1);
        if (x != y && !b.has(x, y)) {
            b.add(x, y);
            ++i;
        }
    }

    Graph g = b.build();
    while (!is_k_connected(g, kappa)) {
        if (g.num_edges() == max_edges)
            throw internal_error("complete graph still below the requested connectivity");
        const int low = min_degree(g);
        std::vector<Vertex> lows;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == low)
                lows.push_back(v);
        Vertex x = lows[static_cast<std::size_t>(pick(0, static_cast<int>(lows.size()) - 1))];
        if (g.degree(x) == n - 1)
            x = pick(0, n - 1);
        std::vector<Vertex> options;
        for (Vertex y = 0; y < n; ++y)
            if (y != x && !b.has(x, y))
                options.push_back(y);
        if (options.empty())
            continue;
        b.add(x, options[static_cast<std::size_t>(pick(0, static_cast<int>(options.size()) - 1))]);
        g = b.build();
    }
    return g;
}

Graph random_k_tree(int k, int n, std::uint64_t seed)
{
    if (k < 1 || n < k + 1)
        throw precondition_error("k-tree needs k >= 1 and n >= k + 1");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    EdgeBuilder b(n);
    std::vector<std::vector<Vertex>> cliques;
    for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j)
            b.add(label[i], label[j]);
        std::vector<Vertex> c;
        for (int j = 0; j <= k; ++j)
            if (j != i)
                c.push_back(j);
        cliques.push_back(std::move(c));
    }
    for (int v = k + 1; v < n; ++v) {
        auto base = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
        for (auto u : base)
            b.add(label[u], label[v]);
        for (std::size_t drop = 0; drop < base.size(); ++drop) {
            auto c = base;
            c[drop] = v;
            cliques.push_back(std::move(c));
        }
    }
    return b.build();
}

std::string FamilySpec::label() const
{
    std::string out = family + "(";
    bool first = true;
    if (!name.empty()) {
        out += "name=" + name;
        first = false;
    }
    for (const auto &[key, value] : params) {
        out += (first ? "" : ",") + key + "=" + std::to_string(value);
        first = false;
    }
    if (family == "random-k-connected" || family == "k-tree")
        out += (first ? "" : ",") + std::string("seed=") + std::to_string(seed);
    return out + ")";
}

Graph gen_family(const FamilySpec &spec)
{
    auto as_int = [&](const std::string &key) { return static_cast<int>(need(spec, key)); };
    const auto &f = spec.family;
    if (f == "layered-tight")
        return gen_layered_tight(as_int("k"), as_int("d"));
    if (f == "cycle")
        return cycle_graph(as_int("n"));
    if (f == "complete")
        return complete_graph(as_int("n"));
    if (f == "path")
        return path_graph(as_int("n"));
    if (f == "star")
        return star_graph(as_int("leaves"));
    if (f == "theta")
        return theta_graph(as_int("a"), as_int("b"), as_int("c"));
    if (f == "hypercube")
        return hypercube_graph(as_int("dim"));
    if (f == "random-k-connected") {
        auto extra = spec.params.count("extra") ? as_int("extra") : 0;
        return random_k_connected(as_int("n"), as_int("kappa"), spec.seed, extra);
    }
    if (f == "k-tree")
        return random_k_tree(as_int("k"), as_int("n"), spec.seed);
    if (f == "named-cage")
        return named_graph(spec.name);
    throw precondition_error("unknown family '" + f + "'");
}

} // namespace rainbow
