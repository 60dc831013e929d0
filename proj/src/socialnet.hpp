#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace d2d {

// Community structure over the UEs. Communities may overlap; every UE belongs
// to at least one. Each community carries its own weighted tie graph, stored
// over the full UE id space so lookups use global ids.
struct SocialLayer {
    std::vector<std::vector<NodeId>> members;               // per community, sorted unique
    std::vector<Graph> tie_graphs;                          // per community, undirected, ties only
    std::vector<std::vector<std::uint32_t>> communities_of; // per UE, sorted

    std::size_t ue_count() const { return communities_of.size(); }
    std::uint32_t community_count() const { return static_cast<std::uint32_t>(members.size()); }
    bool is_member(std::uint32_t community, NodeId ue) const;
};

struct TieRecord {
    std::uint32_t community;
    NodeId a, b;     // a < b
    double weight;
};

// Assembles the layer from memberships and explicit ties; throws on oversized
// ids. Invariant breaches (uncovered UEs, out-of-range weights, ties between
// non-members) are left to validate_social_layer so files can be inspected.
SocialLayer make_social_layer(std::size_t ue_count, std::vector<std::vector<NodeId>> memberships,
                              const std::vector<TieRecord>& ties);

// Draws each intra-community pair as a tie with probability tie_density and a
// weight uniform on (0,1]. Pair order (by community, then lexicographic) fixes
// the stream layout.
SocialLayer sample_social_layer(std::size_t ue_count, std::vector<std::vector<NodeId>> memberships,
                                double tie_density, std::uint64_t rng_seed);

// Empty when every invariant holds; otherwise one message per breach.
std::vector<std::string> validate_social_layer(const SocialLayer& layer);

enum class LineKind { influence, connectivity };

// Directed weighted graph over community indices built from member-pair
// shortest paths through the D2D graph.
struct LineGraph {
    Graph graph;
    LineKind kind = LineKind::influence;
};

// For each ordered community pair (u,v): enumerate unordered member pairs
// {m,m'} of u with a finite hop-shortest D2D path (walked from min id to max
// id, lexicographic tie-break) whose source-excluded node set P meets
// community v. influence kind sums tie_weight * |P ∩ members(v)| (untied
// pairs contribute 0); connectivity kind counts qualifying pairs. Zero-weight
// edges are omitted.
LineGraph build_line_graph(const SocialLayer& social, const Graph& d2d, LineKind kind);

// Membership CSV `ue_id,community_id`, one row per membership.
void write_membership_csv(const SocialLayer& layer, const std::string& path);
std::vector<std::vector<NodeId>> read_membership_csv(const std::string& path);

// Ties CSV `community_id,ue_a,ue_b,weight`, each tie once with ue_a < ue_b.
void write_ties_csv(const SocialLayer& layer, const std::string& path);
std::vector<TieRecord> read_ties_csv(const std::string& path);

} // namespace d2d
