#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = int;
using EdgeId = int;

/// Raised when an input violates an operation's documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm breaks one of its own guarantees (a budget
/// overrun or a structural claim that failed at runtime). Never caught
/// internally.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool operator==(const Edge &) const = default;
};

/// Membership set over the vertex ids 0..universe-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet all(int universe);

    int universe() const { return static_cast<int>(bits_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const { return v >= 0 && v < universe() && bits_[v]; }
    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> members() const;
    VertexSet complement() const;
    bool is_subset_of(const VertexSet &other) const;

    VertexSet &operator|=(const VertexSet &other);
    bool operator==(const VertexSet &other) const = default;

private:
    std::vector<bool> bits_;
    int count_ = 0;
};

/// Immutable simple undirected graph. Vertices are 0..n-1, edge ids follow
/// the order edges were supplied in.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(EdgeId e) const { return edges_[e]; }

    /// Sorted neighbour list of v.
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    /// Edge ids parallel to neighbours(v).
    std::span<const EdgeId> incident_edges(Vertex v) const { return adj_edges_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
    /// As edge_id, but throws precondition_error when a and b are not adjacent.
    EdgeId edge_between(Vertex a, Vertex b) const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> adj_edges_;
};

/// A subgraph extracted from a parent graph, with id translations both ways.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent_vertex;
    std::vector<EdgeId> to_parent_edge;
    std::vector<Vertex> from_parent_vertex; // -1 for vertices not kept
};

Subgraph induced_subgraph(const Graph &g, const VertexSet &keep);

/// Keeps the vertices in `keep` and only the edges whose flag is set.
Subgraph edge_subgraph(const Graph &g, const VertexSet &keep, const std::vector<bool> &edge_kept);

std::string describe_edge(const Edge &e);

} // namespace rainbow
