#pragma once

#include <rainbow/graph.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace rainbow {

/// Layered extremal graph with edge connectivity 3k - 1. Layers V_0..V_d are
/// cliques, consecutive layers are completely joined; |V_1| = |V_d| = 2k and
/// the other layers have k vertices, numbered layer by layer. For d = 1 both
/// layers have 2k vertices. Requires k >= 3 and d >= 1; n = k(d + 3).
Graph gen_layered_tight(int k, int d);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
/// Two hubs (0 and 1) joined by three internally disjoint paths of the given
/// lengths; at most one length may be 1.
Graph theta_graph(int a, int b, int c);
Graph hypercube_graph(int dim);

/// Cubic graph from LCF notation: a Hamiltonian cycle plus chords i ~ i + s.
Graph lcf_graph(int n, std::initializer_list<int> shifts);

Graph petersen_graph();
Graph heawood_graph();
Graph mcgee_graph();
/// 5-regular graph of girth 5 on 30 vertices: three pentagons and three
/// pentagrams of the Hoffman-Singleton construction.
Graph cage55_graph();

/// Catalogue lookup, case-insensitive: petersen, heawood, mcgee, cage55
/// (alias foster).
Graph named_graph(const std::string &name);

/// Random ear decomposition on n vertices, then extra random chords, then
/// edges at minimum-degree vertices until the graph is kappa-connected.
Graph random_k_connected(int n, int kappa, std::uint64_t seed, int extra_edges = 0);

/// k-tree on n vertices: a (k+1)-clique and repeated attachment of a new
/// vertex to a random k-clique; labels shuffled.
Graph random_k_tree(int k, int n, std::uint64_t seed);

struct FamilySpec {
    /// layered-tight, cycle, complete, path, star, theta, hypercube,
    /// random-k-connected, k-tree, named-cage
    std::string family;
    std::map<std::string, std::int64_t> params;
    std::string name; // named-cage only
    std::uint64_t seed = 0;

    /// Stable identifier such as "cycle(n=6)" or "k-tree(k=2,n=12,seed=7)".
    std::string label() const;
};

Graph gen_family(const FamilySpec &spec);

} // namespace rainbow
