#pragma once

#include <rainbow/colouring.hpp>
#include <rainbow/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

/// Open ear (x_0, ..., x_m) on a host: distinct foots x_0 and x_m in the
/// host, internal vertices outside it.
struct Ear {
    std::vector<Vertex> path;

    int length() const { return static_cast<int>(path.size()) - 1; }
    bool is_odd() const { return length() % 2 == 1; }
    /// Number of vertices the ear adds to its host.
    int new_vertices() const { return length() - 1; }
    std::span<const Vertex> internals() const;
    /// x_{m/2} for even ears.
    std::optional<Vertex> tip() const;
    bool operator==(const Ear &) const = default;
};

struct EarClassification {
    bool removable = false;
    bool clean_removable = false;
};

struct EarSearchOptions {
    /// DFS steps before the search gives up and returns what it has.
    std::int64_t max_nodes = 2'000'000;
};

struct EarList {
    std::vector<Ear> ears; // longest first, then lexicographic
    bool truncated = false;
};

/// Every ear on G[h] with at least one internal vertex, oriented so that
/// x_0 < x_m.
EarList enumerate_ears(const Graph &g, const VertexSet &h, const EarSearchOptions &options = {});

/// Longest ear on G[h]. With `anchor`, only ears having a foot in `anchor`
/// qualify. Throws precondition_error("host spans graph") when h = V(g).
Ear find_largest_ear(const Graph &g, const VertexSet &h, const std::optional<VertexSet> &anchor = std::nullopt,
                     const EarSearchOptions &options = {});

/// Throws precondition_error when `e` is not an ear on G[h].
void validate_ear(const Graph &g, const VertexSet &h, const Ear &e);

/// Removable: G minus the internal vertices (minus the edge itself for a
/// chord) is still 2-connected. Clean: additionally every internal vertex has
/// degree 2.
EarClassification classify_ear(const Graph &g, const Ear &e);

/// Shortest odd path whose removal leaves g 2-connected, chords first.
std::optional<Ear> find_removable_odd_ear(const Graph &g, const EarSearchOptions &options = {});

struct BalancedColouringSpec {
    /// Middle edge of an odd ear; defaults to the smallest colour of H not
    /// listed in `excluded_old`.
    std::optional<Colour> c_old;
    /// Tip colours of an even ear.
    Colour t1 = uncoloured;
    Colour t2 = uncoloured;
    /// First balanced colour; defaults to the smallest id above colours(H)
    /// and the tip colours.
    std::optional<Colour> fresh_base;
    std::vector<Colour> excluded_old;
};

/// Balanced colouring of an odd ear (x_0, ..., x_{2k+1}): edges j and j+k+1
/// share fresh colour c_j and the middle edge gets c_old. `h` colours exactly
/// the edges of H; the ear's edges must be uncoloured.
EdgeColouring colour_odd_ear(const Graph &g, const EdgeColouring &h, const Ear &e,
                             const BalancedColouringSpec &spec = {});

/// Balanced colouring of an even ear (x_0, ..., x_{2k}): edges j and j+k+1
/// share fresh colour c_j for j <= k-2 and the tip edges get t1, t2.
EdgeColouring colour_even_ear(const Graph &g, const EdgeColouring &h, const Ear &e, const BalancedColouringSpec &spec);

} // namespace rainbow
