#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffusion.hpp"
#include "influence.hpp"
#include "radio.hpp"
#include "shapley.hpp"

namespace d2d {

enum class AssignmentMode { random, from_file };
enum class AlphaMode { uniform, random };
enum class CascadeMode { one_attempt, attempt_all };
enum class RelayMode { any, members_only };
enum class FadingRefresh { build, slot };
enum class MobilityPolicy { keep_initial_seeds, reselect_each_epoch };
enum class SweepAxis { d_fraction, n_ues, mobility_speed };

// Everything a scenario run depends on; one flat `key = value` file.
struct ScenarioConfig {
    RadioParams radio;

    std::uint32_t n_clusters = 10;
    double mean_ues_per_cluster = 10.0;
    double area_radius = 1000.0;
    double cluster_spread = 60.0;

    std::uint32_t community_count = 10;
    AssignmentMode assignment_mode = AssignmentMode::random;
    std::string membership_file;
    std::string ties_file;
    double tie_density = 1.0;

    double d_fraction = 0.4;
    DistanceTransform distance_transform = DistanceTransform::identity;
    InnerTerm inner_term = InnerTerm::toward_focal;
    AlphaMode alpha_mode = AlphaMode::uniform;

    std::vector<SeedMethod> methods = {SeedMethod::sv,         SeedMethod::sv_influence,
                                       SeedMethod::sv_connectivity, SeedMethod::degree,
                                       SeedMethod::betweenness, SeedMethod::closeness};

    std::uint32_t scenarios = 5;          // independent topology/social realizations
    std::uint32_t runs_per_scenario = 60; // diffusion repetitions per realization
    std::uint64_t master_seed = 0;
    bool has_master_seed = false;         // wall-clock seeding is not allowed

    std::uint32_t max_slots = 0;          // 0: 10 * UE count
    std::uint32_t quiescence_window = 5;
    CascadeMode cascade = CascadeMode::one_attempt;
    RelayMode relay = RelayMode::any;
    FadingRefresh fading_refresh = FadingRefresh::build;

    bool mobility_enabled = false;
    double mobility_speed = 1.0;          // m/s, applied to every UE
    std::uint32_t epoch_slots = 20000;    // 20 s per epoch at the 1 ms slot
    std::uint32_t n_epochs = 4;
    MobilityPolicy mobility_policy = MobilityPolicy::reselect_each_epoch;

    SweepAxis sweep_axis = SweepAxis::d_fraction;
    std::vector<double> sweep_points;

    bool operator==(const ScenarioConfig&) const = default;
};

struct ParsedConfig {
    ScenarioConfig cfg;
    std::vector<std::string> errors;  // syntax, unknown keys, unparsable values
};

ParsedConfig parse_config(const std::string& text);
ParsedConfig load_config_file(const std::string& path);

// Canonical form: every key once, fixed order; parse(serialize(c)) == c.
std::string serialize_config(const ScenarioConfig& cfg);
void save_config_file(const ScenarioConfig& cfg, const std::string& path);

// Single-key access for programmatic overrides; returns false (set) or empty
// optional-style flag (get) on unknown keys.
bool set_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value,
                      std::string& error);
bool get_config_value(const ScenarioConfig& cfg, const std::string& key, std::string& value);

// Empty when runnable; otherwise one message per violated constraint.
std::vector<std::string> validate_config(const ScenarioConfig& cfg);

const char* sweep_axis_name(SweepAxis axis);
std::string method_slug(SeedMethod m);  // filesystem-safe variant of the method name

} // namespace d2d
