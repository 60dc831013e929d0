#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "influence.hpp"
#include "rng.hpp"
#include "socialnet.hpp"

namespace d2d {

struct DiffusionOptions {
    std::uint32_t max_slots = 0;         // 0 resolves to 10 * UE count
    std::uint32_t quiescence_window = 5; // stop after this many slots without a new holder
    bool attempt_all = false;            // independent-cascade variant: try every eligible neighbor
    bool relay_members_only = false;     // restrict each content to its community's members
    // Optional per-slot graph supplier (fading refresh); null result falls
    // back to the run's base graph.
    std::function<const InfluenceGraph*(std::uint32_t slot)> refresh;
};

// Holder sets per content; content c is community c's item.
struct DiffusionState {
    std::vector<std::vector<char>> holds;  // [community][ue]
    std::uint32_t slot = 0;
};

struct NewHolder {
    std::uint32_t community;
    NodeId ue;
};

// One slot: every slot-start holder picks at most one eligible neighbor
// (eligibility against the slot-start snapshot) with probability proportional
// to its clamped influence and succeeds with that influence; holders with no
// eligible neighbor or all-zero weights stay idle and draw nothing. Returns
// the holders added this slot.
std::vector<NewHolder> step(DiffusionState& state, const InfluenceGraph& ig, const SocialLayer& social,
                            const DiffusionOptions& opts, RngStream& rng);

struct DiffusionTrace {
    // A UE is counted once it holds the content of one of its own
    // communities; relays carrying foreign content are not counted.
    std::vector<std::uint32_t> counts;                      // per slot, slot 0 = seeds
    std::vector<std::vector<std::uint32_t>> per_community;  // [slot][community]: members holding own content
    std::vector<std::int64_t> delay;                        // per UE, first counted slot, -1 if never
    std::uint32_t initial_count = 0;
    std::uint32_t last_change_slot = 0;                     // last slot the counted total grew
};

// Runs step until max_slots or quiescence_window slots without new holders.
DiffusionTrace run_diffusion(const std::vector<NodeId>& seeds, const InfluenceGraph& ig,
                             const SocialLayer& social, const DiffusionOptions& opts, std::uint64_t rng_seed);

struct DiffusionMetrics {
    std::uint32_t final_count = 0;
    double mean_speed = 0.0;  // (final - initial) / last_change_slot, 0 for a flat trace
    std::map<std::uint32_t, std::uint32_t> delay_histogram;
};

DiffusionMetrics compute_metrics(const DiffusionTrace& trace);

void write_trace_csv(const std::vector<DiffusionTrace>& traces, const std::string& path);
void write_delay_csv(const std::vector<DiffusionTrace>& traces, const std::string& path);

} // namespace d2d
