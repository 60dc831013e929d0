#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "config.hpp"
#include "diffusion.hpp"
#include "influence.hpp"
#include "radio.hpp"
#include "shapley.hpp"
#include "socialnet.hpp"

namespace d2d {

// Tags for derive_seed; every random stream in a run hangs off
// master_seed -> (axis, point index) -> scenario realization -> purpose.
namespace seedtag {
inline constexpr std::uint64_t scenario_base = 1000;
inline constexpr std::uint64_t topology = 1;
inline constexpr std::uint64_t assignment = 2;
inline constexpr std::uint64_t social = 3;
inline constexpr std::uint64_t fading = 4;
inline constexpr std::uint64_t alpha = 5;
inline constexpr std::uint64_t run_base = 10000;
// Mobility runs derive walk/fading/diffusion streams per epoch e as
// 3e, 3e+1, 3e+2 off the run's own seed.
inline constexpr std::uint64_t mobility_diffusion = 100000;
inline constexpr std::uint64_t slot_fading = 700000;
} // namespace seedtag

// Scenario streams are keyed by (master seed, axis, scenario index) and shared
// across sweep points, so points differ only through the axis value: sweeps
// compare treatments on matched random worlds instead of re-rolling topology
// per point.
std::uint64_t scenario_seed(const ScenarioConfig& cfg, std::uint32_t scenario_index);

// Everything derived from one (topology, social layer, fading) realization.
struct ScenarioGraphs {
    LinkTable links;
    Graph d2d;
    InfluenceGraph ig;
    LineGraph line_influence;
    LineGraph line_connectivity;
    std::vector<double> sv_d2d;                    // closed form on the influence graph
    std::vector<std::vector<double>> social_sv;    // [community][member index], closed form per tie graph
    std::vector<double> line_sv_influence;         // closed form per community on each line graph
    std::vector<double> line_sv_connectivity;
    OffloadingPower power_influence;
    OffloadingPower power_connectivity;
    std::vector<double> degree_c, betweenness_c, closeness_c;  // on the D2D graph
};

struct BuiltScenario {
    Topology topo;
    SocialLayer social;
    std::vector<double> alpha;
    ScenarioGraphs graphs;
    std::vector<std::string> warnings;
};

// Returns cfg with the sweep-axis value applied.
ScenarioConfig apply_point(const ScenarioConfig& cfg, SweepAxis axis, double value);

ScenarioGraphs build_graphs(const ScenarioConfig& cfg, const Topology& topo, const SocialLayer& social,
                            const std::vector<double>& alpha, std::uint64_t fading_seed,
                            std::vector<std::string>* warnings);

// Topology + social layer + alpha + graphs for one realization; scen_seed
// comes from scenario_seed().
BuiltScenario build_scenario(const ScenarioConfig& cfg, std::uint64_t scen_seed);

CentralityReport build_report(const SocialLayer& social, const ScenarioGraphs& graphs, SeedMethod method);

// `ue_id,community_id,method,score,is_seed` for every configured method.
void write_centrality_csv(const BuiltScenario& built, const std::vector<SeedMethod>& methods,
                          const std::string& path);
void write_seeds_csv(const BuiltScenario& built, const std::vector<SeedMethod>& methods, const std::string& path);

DiffusionOptions diffusion_options(const ScenarioConfig& cfg);

struct MobilityRunResult {
    std::vector<DiffusionTrace> traces;          // per epoch, the requested policy
    std::vector<std::uint32_t> final_keep;       // per epoch
    std::vector<std::uint32_t> final_reselect;
};

// Random-walk epochs: displace every UE by speed * epoch duration with
// directions correlated through shared community drift (mixing weight =
// sqrt of the UE's mean tie weight), rebuild the radio/influence stack, then
// run one paired diffusion per policy (same stream). Policy A keeps
// initial_seeds; policy B reselects with `method` on the epoch's graphs.
// With all speeds zero, base_graphs is reused unchanged every epoch, so the
// two policies coincide.
MobilityRunResult mobility_run(const ScenarioConfig& cfg, const Topology& start, const SocialLayer& social,
                               const std::vector<double>& alpha, const ScenarioGraphs& base_graphs,
                               const std::vector<double>& speeds, const std::vector<NodeId>& initial_seeds,
                               SeedMethod method, MobilityPolicy requested, std::uint64_t rng_seed);

struct RunRow {
    std::uint32_t point_index = 0;
    double point_value = 0.0;
    std::uint32_t scenario_index = 0;
    std::uint32_t run_index = 0;
    SeedMethod method = SeedMethod::sv;
    std::uint32_t final_count = 0;
    double mean_speed = 0.0;
    std::uint32_t last_change_slot = 0;
    std::map<std::uint32_t, std::uint32_t> delay_histogram;
};

struct MobilityRow {
    std::uint32_t point_index = 0;
    double point_value = 0.0;
    std::uint32_t scenario_index = 0;
    std::uint32_t run_index = 0;
    std::uint32_t epoch = 0;
    std::uint32_t final_keep = 0;
    std::uint32_t final_reselect = 0;
};

struct ScoreRow {
    std::uint32_t point_index = 0;
    double point_value = 0.0;
    std::uint32_t scenario_index = 0;
    NodeId ue = 0;
    double sv_d2d = 0.0;
    double power_influence = 0.0;
    double power_connectivity = 0.0;
};

struct ExperimentResult {
    ScenarioConfig cfg;
    SweepAxis axis = SweepAxis::d_fraction;
    std::vector<double> points;
    std::vector<RunRow> rows;                  // (point, scenario, method, run) order
    std::vector<MobilityRow> mobility_rows;    // (point, scenario, run, epoch) order
    std::vector<ScoreRow> score_rows;          // (point, scenario, ue) order
    std::vector<DiffusionTrace> traces;        // point 0 only, (scenario, method, run) order
    std::vector<std::string> warnings;
};

// Single scenario point; equals a one-point sweep byte for byte.
ExperimentResult run_scenario(const ScenarioConfig& cfg, int threads, bool keep_traces = false);
// Sweeps cfg.sweep_axis over cfg.sweep_points.
ExperimentResult run_sweep(const ScenarioConfig& cfg, int threads);

void emit_csv(const ExperimentResult& result, const std::string& out_dir);
void emit_plot_data(const ExperimentResult& result, const std::string& out_dir);

// Writes topology/membership/ties/D2D/influence edge CSVs for realization 0.
void generate_artifacts(const ScenarioConfig& cfg, const std::string& out_dir);

} // namespace d2d
