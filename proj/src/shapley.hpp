#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"
#include "influence.hpp"
#include "socialnet.hpp"

namespace d2d {

// Coalition game over players 0..player_count-1; value(0) must be 0.
struct CharacteristicGame {
    std::size_t player_count = 0;
    std::function<double(std::uint32_t mask)> value;
};

inline constexpr std::size_t kMaxExactPlayers = 12;

// Exact Shapley values by subset enumeration. Rejects games with more than
// kMaxExactPlayers players.
std::vector<double> exact_shapley(const CharacteristicGame& game);

// One-hop sets plus d-neighborhoods of one graph instance; the scope the
// closed-form value is evaluated against. Works for the influence graph, a
// community tie graph, or a line graph alike.
struct NeighborhoodModel {
    std::vector<std::vector<NodeId>> one_hop;      // C_k, no self
    std::vector<std::vector<NodeId>> d_neighbors;  // C_{n,d}, sorted, contains n
    double d_value = 0.0;

    std::size_t node_count() const { return one_hop.size(); }
};

NeighborhoodModel neighborhood_model(const InfluenceGraph& ig);
// One-hop sets are out-neighbors; d-neighborhoods use directed weighted
// distances m -> n under the transform, with d = d_fraction * weighted
// diameter of this graph.
NeighborhoodModel make_neighborhood_model(const Graph& g, double d_fraction,
                                          DistanceTransform transform = DistanceTransform::identity);

// Closed-form value: phi_k = sum over n != k with C_k meeting C_{n,d} of
// alpha[n] / (1 + |C_{n,d}|).
std::vector<double> closed_form_sv(const NeighborhoodModel& model, const std::vector<double>& alpha);

// Coverage indicator game over the model's nodes: v(S) = sum over n outside S
// of alpha[n] * [some k in S has C_k meeting C_{n,d}].
CharacteristicGame indicator_surrogate_game(const NeighborhoodModel& model, const std::vector<double>& alpha);

// Same coverage game summed over every n (n in S included); its exact Shapley
// value has the closed form alpha[n] / |{j : C_j meets C_{n,d}}| summed over
// the n that k covers, which exact_shapley must reproduce.
CharacteristicGame indicator_coverage_game(const NeighborhoodModel& model, const std::vector<double>& alpha);
std::vector<double> coverage_game_sv(const NeighborhoodModel& model, const std::vector<double>& alpha);

// The probabilistic coalition game (coalition_value) as a CharacteristicGame.
CharacteristicGame probabilistic_game(const InfluenceGraph& ig, const std::vector<double>& alpha,
                                      InnerTerm inner = InnerTerm::toward_focal);

enum class SeedMethod { sv, sv_influence, sv_connectivity, degree, betweenness, closeness };
const char* seed_method_name(SeedMethod m);
bool parse_seed_method(const std::string& name, SeedMethod& out);

// Per-UE offloading power: the UE's share of its community's social value
// times the community's line-graph value; zero-sum communities split
// uniformly; overlapping membership takes the best community.
struct OffloadingPower {
    std::vector<std::vector<double>> per_member;  // [community][member index]
    std::vector<double> per_ue;                   // max over the UE's communities
};
OffloadingPower offloading_power(const SocialLayer& social,
                                 const std::vector<std::vector<double>>& community_sv,
                                 const std::vector<double>& line_sv);

// Scores driving seed selection for one method, per community member.
struct CentralityReport {
    SeedMethod method = SeedMethod::sv;
    std::vector<std::vector<double>> member_score;  // [community][member index]
    std::vector<double> score;                      // per UE, best over its communities
    std::vector<double> sv_d2d;                     // closed form on the influence graph
    std::vector<double> sv_social;                  // closed form on the UE's community graph
    std::vector<double> community_sv;               // line-graph value of the scoring community
    std::vector<double> offloading_power;           // per UE
};

// One seed per community: the member with the highest score, smallest id on
// ties. When a line-graph method degenerates (every member scores 0) the
// ranking falls back to sv_social.
std::vector<NodeId> select_seeds(const CentralityReport& report, const SocialLayer& social);

} // namespace d2d
