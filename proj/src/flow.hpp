#pragma once

#include <rainbow/graph.hpp>

#include <vector>

namespace rainbow::detail {

// Unit-capacity augmenting-path max flow. Small and exact; meant for the
// desk-scale graphs this library targets.
class UnitFlow {
public:
    explicit UnitFlow(int nodes);

    void add_arc(int from, int to, int capacity);
    /// Two opposite arcs sharing residual capacity, i.e. an undirected edge.
    void add_undirected(int a, int b, int capacity);

    /// Pushes flow until `limit` is reached or no augmenting path remains.
    int max_flow(int source, int sink, int limit);

    /// Decomposes the current flow into source-sink node sequences.
    std::vector<std::vector<int>> flow_paths(int source, int sink) const;

private:
    struct Arc {
        int to;
        int rev;
        int cap;
        int original;
    };
    std::vector<std::vector<Arc>> adj_;
};

/// Local edge connectivity between s and t, capped at `limit`.
int local_edge_connectivity(const Graph &g, Vertex s, Vertex t, int limit);

/// Number of internally vertex-disjoint s-t paths (s, t non-adjacent), capped at `limit`.
int local_vertex_connectivity(const Graph &g, Vertex s, Vertex t, int limit);

} // namespace rainbow::detail
