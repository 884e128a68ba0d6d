#pragma once

#include <rainbow/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

using Colour = int;
inline constexpr Colour uncoloured = -1;

/// Edge id -> colour id. Entries may be `uncoloured` while a colouring is
/// under construction; a partial colouring describes the subgraph formed by
/// its coloured edges.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(int num_edges);
    explicit EdgeColouring(std::vector<Colour> colour_of);

    int num_edges() const { return static_cast<int>(colour_of_.size()); }
    Colour operator[](EdgeId e) const { return colour_of_[e]; }
    bool is_coloured(EdgeId e) const { return colour_of_[e] != uncoloured; }
    void set(EdgeId e, Colour c);

    bool is_total() const { return !first_uncoloured().has_value(); }
    std::optional<EdgeId> first_uncoloured() const;

    /// Number of distinct colours in use.
    int num_colours() const;
    /// Sorted distinct colours in use, i.e. colours(H) of the coloured subgraph.
    std::vector<Colour> palette() const;
    bool uses(Colour c) const;
    /// Smallest id above every colour in use.
    Colour next_fresh() const;

    /// Relabels colours to 0..k-1 in order of first appearance by edge id.
    EdgeColouring compacted() const;

    std::span<const Colour> raw() const { return colour_of_; }
    bool operator==(const EdgeColouring &) const = default;

private:
    std::vector<Colour> colour_of_;
};

/// Witness paths (or failures) for every unordered vertex pair.
struct RainbowCertificate {
    struct Witness {
        Vertex u;
        Vertex v;
        std::vector<Vertex> path;
    };
    std::vector<Witness> witnesses;
    std::vector<std::pair<Vertex, Vertex>> failing;

    bool complete() const { return failing.empty(); }
    /// Witness path for {u, v}, oriented from u to v; nullopt if none recorded.
    std::optional<std::vector<Vertex>> path_between(Vertex u, Vertex v) const;
};

struct VerifyOptions {
    /// Longest path explored; 0 means the number of colours, which is already
    /// an upper bound on any rainbow path.
    int max_path_length = 0;
};

/// Exact rainbow-connectivity check of a total colouring. Throws
/// precondition_error naming the first uncoloured edge.
RainbowCertificate verify_rainbow_connected(const Graph &g, const EdgeColouring &c, VerifyOptions options = {});

/// Pair filter for the subgraph variant: return true to skip the pair.
using PairFilter = std::function<bool(Vertex, Vertex)>;

/// Treats uncoloured edges as absent and checks only pairs inside `members`,
/// with paths restricted to `members`.
RainbowCertificate verify_rainbow_subgraph(const Graph &g, const EdgeColouring &c, const VertexSet &members,
                                           const PairFilter &skip = {}, VerifyOptions options = {});

/// True when every colour along `path` is distinct and every hop is an edge
/// coloured in c.
bool is_rainbow_path(const Graph &g, const EdgeColouring &c, std::span<const Vertex> path);

struct RcBudget {
    int max_edges = 14;
    std::int64_t max_nodes = 200'000'000;
};

struct RcResult {
    enum class Status { exact, inconclusive };
    Status status = Status::exact;
    /// Exact value when status is exact; otherwise the smallest k not yet refuted.
    int rc_value = 0;
    EdgeColouring witness;
    int lower_bound_used = 0;

    bool is_exact() const { return status == Status::exact; }
};

/// Exact rainbow connection number by exhaustive search, from the diameter
/// upward. Budget exhaustion yields an inconclusive result, never a wrong one.
RcResult rc_exact(const Graph &g, RcBudget budget = {});

struct RcBounds {
    int lower;
    int upper;
};

/// (diameter, n - 1).
RcBounds rc_bounds(const Graph &g);

/// Colours a spanning tree of G[members] with distinct colours starting at
/// `first_colour`; other edges of G[members] reuse `first_colour`.
EdgeColouring spanning_tree_colouring(const Graph &g, const VertexSet &members, Colour first_colour = 0);

} // namespace rainbow
