#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "socialnet.hpp"

namespace d2d {

// Transform applied to influence weights before they are summed as path
// distances (sensitivity hook; identity is the literal definition).
enum class DistanceTransform { identity, one_minus, reciprocal };

// Which influence value enters the coverage products of d_influence: the
// weight toward the focal node n (literal equation) or toward the covered
// neighbor j (prose interpretation).
enum class InnerTerm { toward_focal, toward_neighbor };

// Directed graph over UEs whose edge weights are one-hop influences, plus the
// cached neighborhood structure used by downstream scoring.
struct InfluenceGraph {
    Graph g;                                       // same edge set as the D2D graph, both directions
    std::vector<std::vector<NodeId>> one_hop;      // C_n: D2D neighbors of n
    double d_value = 0.0;                          // absolute distance threshold
    std::vector<std::vector<NodeId>> d_neighbors;  // C_{n,d}: {m : dist(m -> n) <= d}, contains n

    std::size_t ue_count() const { return one_hop.size(); }
    double weight(NodeId m, NodeId n) const { return g.edge_weight_or(m, n, 0.0); }
};

// Influence of m on its D2D neighbor n: over every community containing m and
// every tied peer m' there, add tie_weight / hop_count(m -> m') whenever n is
// the first hop of the tie-broken hop-shortest path from m to m'. Rejects
// non-adjacent (m, n).
double one_hop_influence(NodeId m, NodeId n, const Graph& d2d, const SocialLayer& social);

// Weighs every directed D2D edge with one_hop_influence, then computes
// d_value = d_fraction * weighted diameter of the result (under the given
// transform) and the d-neighborhoods from directed distances m -> n.
InfluenceGraph build_influence_graph(const Graph& d2d, const SocialLayer& social, double d_fraction,
                                     DistanceTransform transform = DistanceTransform::identity);

// Assembles the structure from explicit parts (influence weights need not sit
// on D2D edges here); used to realize literal-equation instances in tests.
InfluenceGraph assemble_influence_graph(Graph weights, std::vector<std::vector<NodeId>> one_hop,
                                        double d_value, DistanceTransform transform = DistanceTransform::identity);

// Expected covered count: sum over j in C_{n,d} of 1 - prod over m in
// (C_j intersect S) of (1 - I), I clamped to [0,1]. `in_s` is a UE mask.
double d_influence(const InfluenceGraph& ig, NodeId n, const std::vector<char>& in_s,
                   InnerTerm inner = InnerTerm::toward_focal);
double d_influence(const InfluenceGraph& ig, NodeId n, const std::vector<NodeId>& s,
                   InnerTerm inner = InnerTerm::toward_focal);

// Marginal share of member k: d_influence(n, S) - d_influence(n, S \ {k}).
// Rejects k outside S.
double exclusive_influence(const InfluenceGraph& ig, NodeId n, NodeId k, const std::vector<char>& in_s,
                           InnerTerm inner = InnerTerm::toward_focal);

// Coalition worth: 0 for the empty set, else sum over n outside S of
// alpha[n] * d_influence(n, S).
double coalition_value(const InfluenceGraph& ig, const std::vector<char>& in_s, const std::vector<double>& alpha,
                       InnerTerm inner = InnerTerm::toward_focal);

double clamp01(double v);
double transform_weight(double w, DistanceTransform t);

} // namespace d2d
