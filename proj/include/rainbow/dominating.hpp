#pragma once

#include <rainbow/colouring.hpp>
#include <rainbow/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace rainbow {

/// One iteration of the growth loop: the picked far vertex followed by its
/// shortest path back into the set, (v, x_{2l}, ..., x_0).
struct GrowthStep {
    Vertex picked;
    std::vector<Vertex> path;
};

/// A connected set whose every vertex lies within `step_radius` of it.
struct DominatingSet {
    VertexSet vertices;
    int step_radius = 0;
    std::vector<GrowthStep> trace;
};

struct GrowthParams {
    int l = 1;     // step parameter
    int kappa = 1; // assumed vertex connectivity
    int g = 1;     // girth half-parameter: girth >= 2g + 1
    int delta = 3; // minimum degree for the girth variant
};

/// Greedy connected 2l-step dominating set. The start vertex is the
/// maximum-degree vertex (lowest id on ties) and each round picks the
/// lowest-id vertex at distance 2l + 1.
///
/// Every round checks the ball-size bound |N̄^l(v)| >= kappa*l + 1 the
/// size guarantee rests on; a violation means the graph is not
/// kappa-connected and raises precondition_error naming the vertex.
DominatingSet grow_2l_step_dominating(const Graph &g, const GrowthParams &p);

/// Minimum ball size of radius g in a graph of minimum degree delta and
/// girth at least 2g + 1: (delta (delta - 1)^g - 2) / (delta - 2).
std::int64_t girth_ball_size(int delta, int g);

/// Same loop with l = p.g and the ball bound girth_ball_size(p.delta, p.g).
/// Requires min degree >= p.delta >= 3 and girth >= 2 p.g + 1.
DominatingSet grow_girth_dominating(const Graph &g, const GrowthParams &p);

/// Checks the set is non-empty, induces a connected subgraph and dominates g
/// within `radius` steps.
bool is_connected_step_dominating(const Graph &g, const VertexSet &d, int radius);

struct DominationStep {
    DominatingSet set;        // D^{l-1}
    EdgeColouring colouring;  // rainbow on G[D^{l-1}]
    int fresh_colours = 0;    // colours added this step, at most 2l + 1
};

/// One shrink of the step radius on a bridgeless graph: D^{l-1} contains D^l
/// and N(D^l), and the colouring of G[D^l] is extended using at most 2l + 1
/// fresh colours.
///
/// The vertices of N(D^l) are covered by ears through the BFS forest grown
/// from D^l. Fresh colours are indexed 1..2l+1 and every covered vertex owns
/// a position p such that it reaches D^l by one rainbow route using indices
/// <= p and by another using indices > p; any two covered vertices can then
/// be joined through G[D^l] without repeating a colour.
DominationStep extend_colouring_one_step(const Graph &g, const DominatingSet &d, const EdgeColouring &c);

/// Repeats extend_colouring_one_step from d.step_radius down to 0. Without a
/// starting colouring, G[D] receives a spanning-tree colouring with |D| - 1
/// colours.
EdgeColouring dominate_and_colour(const Graph &g, const DominatingSet &d,
                                  const std::optional<EdgeColouring> &c = std::nullopt);

} // namespace rainbow
