#pragma once

#include <rainbow/graph.hpp>

#include <limits>
#include <optional>
#include <vector>

namespace rainbow {

/// Distance marker for vertices that cannot be reached.
inline constexpr int unreachable = std::numeric_limits<int>::max();

/// Multi-source BFS. Members of `source` are at distance 0; vertices in other
/// components get `unreachable`.
std::vector<int> distances_from(const Graph &g, const VertexSet &source);
std::vector<int> distances_from(const Graph &g, Vertex source);

/// N^i(S): vertices at distance exactly i from s.
VertexSet neighbourhood_shell(const Graph &g, const VertexSet &s, int i);
/// Closed variant: vertices at distance at most i from s.
VertexSet closed_neighbourhood(const Graph &g, const VertexSet &s, int i);
/// N_G(S), the vertices at distance exactly one.
VertexSet open_neighbourhood(const Graph &g, const VertexSet &s);

bool is_connected(const Graph &g);
/// True when G[s] is connected (the empty set counts as disconnected).
bool is_connected_subset(const Graph &g, const VertexSet &s);
/// Connected component labels; -1 for vertices outside `alive`.
std::vector<int> components(const Graph &g, const VertexSet &alive);

/// 2-vertex-connected: connected, at least three vertices, no cut vertex.
bool is_biconnected(const Graph &g);
std::vector<Vertex> articulation_points(const Graph &g);
std::vector<EdgeId> bridges(const Graph &g);

int min_degree(const Graph &g);
int max_degree(const Graph &g);
/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph &g);
int eccentricity(const Graph &g, Vertex v);
int diameter(const Graph &g);

/// Exact vertex connectivity (n - 1 for complete graphs, 0 when disconnected).
int vertex_connectivity(const Graph &g);
/// Exact edge connectivity (0 when disconnected).
int edge_connectivity(const Graph &g);
/// Cheaper test for "vertex connectivity >= k".
bool is_k_connected(const Graph &g, int k);

struct GraphMetrics {
    int diameter = 0;
    int radius = 0;
    std::optional<int> girth; // nullopt means infinite
    int min_degree = 0;
    int vertex_connectivity = 0;
    int edge_connectivity = 0;
};

/// All six metrics, exactly. Throws precondition_error("graph not connected")
/// for disconnected input and for graphs with fewer than two vertices.
GraphMetrics compute_metrics(const Graph &g);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering when chordal, empty otherwise.
    std::vector<Vertex> elimination_order;
};

/// Maximum cardinality search followed by a PEO check.
ChordalityResult is_chordal(const Graph &g);

/// True when `order` is a perfect elimination ordering of g.
bool is_perfect_elimination_ordering(const Graph &g, const std::vector<Vertex> &order);

/// A minimal separator contained in N(D), separating D from the component of
/// G - N(D) holding the lowest-id vertex at distance >= 2 from D.
/// Throws precondition_error when D already dominates g in one step.
VertexSet minimal_separator_in_neighbourhood(const Graph &g, const VertexSet &d);

bool is_clique(const Graph &g, const VertexSet &s);

} // namespace rainbow
