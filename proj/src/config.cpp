#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"

namespace d2d {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double_value(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

template <typename T>
bool parse_uint_value(const std::string& s, T& out) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return false;
    if (v > std::numeric_limits<T>::max()) return false;
    out = static_cast<T>(v);
    return true;
}

bool parse_bool_value(const std::string& s, bool& out) {
    if (s == "true") {
        out = true;
        return true;
    }
    if (s == "false") {
        out = false;
        return true;
    }
    return false;
}

struct EnumName {
    int value;
    const char* name;
};

template <typename E>
std::string enum_to_string(E v, const std::vector<EnumName>& table) {
    for (const EnumName& e : table) {
        if (e.value == static_cast<int>(v)) return e.name;
    }
    return "?";
}

template <typename E>
bool enum_from_string(const std::string& s, E& out, const std::vector<EnumName>& table) {
    for (const EnumName& e : table) {
        if (s == e.name) {
            out = static_cast<E>(e.value);
            return true;
        }
    }
    return false;
}

const std::vector<EnumName>& assignment_names() {
    static const std::vector<EnumName> t = {{0, "random"}, {1, "from-file"}};
    return t;
}
const std::vector<EnumName>& transform_names() {
    static const std::vector<EnumName> t = {{0, "identity"}, {1, "one-minus"}, {2, "reciprocal"}};
    return t;
}
const std::vector<EnumName>& inner_term_names() {
    static const std::vector<EnumName> t = {{0, "toward-focal"}, {1, "toward-neighbor"}};
    return t;
}
const std::vector<EnumName>& alpha_names() {
    static const std::vector<EnumName> t = {{0, "uniform"}, {1, "random"}};
    return t;
}
const std::vector<EnumName>& cascade_names() {
    static const std::vector<EnumName> t = {{0, "one-attempt"}, {1, "attempt-all"}};
    return t;
}
const std::vector<EnumName>& relay_names() {
    static const std::vector<EnumName> t = {{0, "any"}, {1, "members-only"}};
    return t;
}
const std::vector<EnumName>& fading_names() {
    static const std::vector<EnumName> t = {{0, "build"}, {1, "slot"}};
    return t;
}
const std::vector<EnumName>& policy_names() {
    static const std::vector<EnumName> t = {{0, "keep-initial-seeds"}, {1, "reselect-each-epoch"}};
    return t;
}
const std::vector<EnumName>& axis_names() {
    static const std::vector<EnumName> t = {{0, "d_fraction"}, {1, "n_ues"}, {2, "mobility_speed"}};
    return t;
}

struct KeyDef {
    const char* name;
    std::function<std::string(const ScenarioConfig&)> get;
    std::function<bool(ScenarioConfig&, const std::string&)> set;
};

KeyDef double_key(const char* name, double ScenarioConfig::* field) {
    return {name, [field](const ScenarioConfig& c) { return format_double(c.*field); },
            [field](ScenarioConfig& c, const std::string& v) { return parse_double_value(v, c.*field); }};
}
KeyDef radio_double_key(const char* name, double RadioParams::* field) {
    return {name, [field](const ScenarioConfig& c) { return format_double(c.radio.*field); },
            [field](ScenarioConfig& c, const std::string& v) { return parse_double_value(v, c.radio.*field); }};
}
KeyDef u32_key(const char* name, std::uint32_t ScenarioConfig::* field) {
    return {name, [field](const ScenarioConfig& c) { return std::to_string(c.*field); },
            [field](ScenarioConfig& c, const std::string& v) { return parse_uint_value(v, c.*field); }};
}
KeyDef string_key(const char* name, std::string ScenarioConfig::* field) {
    return {name, [field](const ScenarioConfig& c) { return c.*field; },
            [field](ScenarioConfig& c, const std::string& v) {
                c.*field = v;
                return true;
            }};
}
template <typename E>
KeyDef enum_key(const char* name, E ScenarioConfig::* field, const std::vector<EnumName>& (*table)()) {
    return {name, [field, table](const ScenarioConfig& c) { return enum_to_string(c.*field, table()); },
            [field, table](ScenarioConfig& c, const std::string& v) { return enum_from_string(v, c.*field, table()); }};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

const std::vector<KeyDef>& key_table() {
    static const std::vector<KeyDef> table = [] {
        std::vector<KeyDef> t;
        t.push_back(radio_double_key("bandwidth_per_rb", &RadioParams::bandwidth_per_rb));
        t.push_back(radio_double_key("carrier_freq", &RadioParams::carrier_freq));
        t.push_back(radio_double_key("tx_power", &RadioParams::tx_power));
        t.push_back(radio_double_key("noise_psd", &RadioParams::noise_psd));
        t.push_back(radio_double_key("pathloss_exponent", &RadioParams::pathloss_exponent));
        t.push_back(radio_double_key("target_ber", &RadioParams::target_ber));
        t.push_back(radio_double_key("packet_bits", &RadioParams::packet_bits));
        t.push_back(radio_double_key("slot_duration", &RadioParams::slot_duration));
        t.push_back({"rb_count", [](const ScenarioConfig& c) { return std::to_string(c.radio.rb_count); },
                     [](ScenarioConfig& c, const std::string& v) { return parse_uint_value(v, c.radio.rb_count); }});
        t.push_back({"log_base", [](const ScenarioConfig& c) { return std::to_string(c.radio.log_base); },
                     [](ScenarioConfig& c, const std::string& v) { return parse_uint_value(v, c.radio.log_base); }});
        t.push_back(u32_key("n_clusters", &ScenarioConfig::n_clusters));
        t.push_back(double_key("mean_ues_per_cluster", &ScenarioConfig::mean_ues_per_cluster));
        t.push_back(double_key("area_radius", &ScenarioConfig::area_radius));
        t.push_back(double_key("cluster_spread", &ScenarioConfig::cluster_spread));
        t.push_back(u32_key("community_count", &ScenarioConfig::community_count));
        t.push_back(enum_key("assignment_mode", &ScenarioConfig::assignment_mode, assignment_names));
        t.push_back(string_key("membership_file", &ScenarioConfig::membership_file));
        t.push_back(string_key("ties_file", &ScenarioConfig::ties_file));
        t.push_back(double_key("tie_density", &ScenarioConfig::tie_density));
        t.push_back(double_key("d_fraction", &ScenarioConfig::d_fraction));
        t.push_back(enum_key("distance_transform", &ScenarioConfig::distance_transform, transform_names));
        t.push_back(enum_key("inner_term", &ScenarioConfig::inner_term, inner_term_names));
        t.push_back(enum_key("alpha_mode", &ScenarioConfig::alpha_mode, alpha_names));
        t.push_back({"methods",
                     [](const ScenarioConfig& c) {
                         std::string out;
                         for (std::size_t i = 0; i < c.methods.size(); ++i) {
                             if (i) out += ',';
                             out += seed_method_name(c.methods[i]);
                         }
                         return out;
                     },
                     [](ScenarioConfig& c, const std::string& v) {
                         std::vector<SeedMethod> methods;
                         for (const std::string& item : split_list(v)) {
                             SeedMethod m;
                             if (!parse_seed_method(item, m)) return false;
                             methods.push_back(m);
                         }
                         c.methods = std::move(methods);
                         return true;
                     }});
        t.push_back(u32_key("scenarios", &ScenarioConfig::scenarios));
        t.push_back(u32_key("runs_per_scenario", &ScenarioConfig::runs_per_scenario));
        t.push_back({"master_seed",
                     [](const ScenarioConfig& c) {
                         return c.has_master_seed ? std::to_string(c.master_seed) : std::string();
                     },
                     [](ScenarioConfig& c, const std::string& v) {
                         if (!parse_uint_value(v, c.master_seed)) return false;
                         c.has_master_seed = true;
                         return true;
                     }});
        t.push_back(u32_key("max_slots", &ScenarioConfig::max_slots));
        t.push_back(u32_key("quiescence_window", &ScenarioConfig::quiescence_window));
        t.push_back(enum_key("cascade", &ScenarioConfig::cascade, cascade_names));
        t.push_back(enum_key("relay", &ScenarioConfig::relay, relay_names));
        t.push_back(enum_key("fading_refresh", &ScenarioConfig::fading_refresh, fading_names));
        t.push_back({"mobility_enabled",
                     [](const ScenarioConfig& c) { return std::string(c.mobility_enabled ? "true" : "false"); },
                     [](ScenarioConfig& c, const std::string& v) { return parse_bool_value(v, c.mobility_enabled); }});
        t.push_back(double_key("mobility_speed", &ScenarioConfig::mobility_speed));
        t.push_back(u32_key("epoch_slots", &ScenarioConfig::epoch_slots));
        t.push_back(u32_key("n_epochs", &ScenarioConfig::n_epochs));
        t.push_back(enum_key("mobility_policy", &ScenarioConfig::mobility_policy, policy_names));
        t.push_back(enum_key("sweep_axis", &ScenarioConfig::sweep_axis, axis_names));
        t.push_back({"sweep_points",
                     [](const ScenarioConfig& c) {
                         std::string out;
                         for (std::size_t i = 0; i < c.sweep_points.size(); ++i) {
                             if (i) out += ',';
                             out += format_double(c.sweep_points[i]);
                         }
                         return out;
                     },
                     [](ScenarioConfig& c, const std::string& v) {
                         std::vector<double> points;
                         if (!trim(v).empty()) {
                             for (const std::string& item : split_list(v)) {
                                 double d = 0.0;
                                 if (!parse_double_value(item, d)) return false;
                                 points.push_back(d);
                             }
                         }
                         c.sweep_points = std::move(points);
                         return true;
                     }});
        return t;
    }();
    return table;
}

const KeyDef* find_key(const std::string& name) {
    for (const KeyDef& k : key_table()) {
        if (name == k.name) return &k;
    }
    return nullptr;
}

} // namespace

ParsedConfig parse_config(const std::string& text) {
    ParsedConfig out;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            out.errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        std::string err;
        if (!set_config_value(out.cfg, key, value, err))
            out.errors.push_back("line " + std::to_string(lineno) + ": " + err);
    }
    return out;
}

ParsedConfig load_config_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::string out;
    for (const KeyDef& k : key_table()) {
        if (std::string(k.name) == "master_seed" && !cfg.has_master_seed) continue;
        out += k.name;
        out += " = ";
        out += k.get(cfg);
        out += '\n';
    }
    return out;
}

void save_config_file(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out = open_output(path);
    out << serialize_config(cfg);
}

bool set_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value, std::string& error) {
    const KeyDef* def = find_key(key);
    if (!def) {
        error = "unknown key '" + key + "'";
        return false;
    }
    if (!def->set(cfg, value)) {
        error = "bad value '" + value + "' for key '" + key + "'";
        return false;
    }
    return true;
}

bool get_config_value(const ScenarioConfig& cfg, const std::string& key, std::string& value) {
    const KeyDef* def = find_key(key);
    if (!def) return false;
    value = def->get(cfg);
    return true;
}

std::vector<std::string> validate_config(const ScenarioConfig& cfg) {
    std::vector<std::string> out = validate_radio_params(cfg.radio);
    auto check = [&](bool ok, const char* msg) {
        if (!ok) out.push_back(msg);
    };
    check(cfg.n_clusters >= 1, "n_clusters must be at least 1");
    check(cfg.mean_ues_per_cluster >= 1.0, "mean_ues_per_cluster must be at least 1");
    check(cfg.area_radius > 0.0, "area_radius must be positive");
    check(cfg.cluster_spread >= 0.0, "cluster_spread must be non-negative");
    check(cfg.community_count >= 1, "community_count must be at least 1");
    check(cfg.tie_density >= 0.0 && cfg.tie_density <= 1.0, "tie_density must lie in [0, 1]");
    check(cfg.d_fraction > 0.0 && cfg.d_fraction <= 10.0, "d_fraction must lie in (0, 10]");
    check(!cfg.methods.empty(), "methods must not be empty");
    check(cfg.scenarios >= 1, "scenarios must be at least 1");
    check(cfg.runs_per_scenario >= 1, "runs_per_scenario must be at least 1");
    check(cfg.has_master_seed, "master_seed is required (wall-clock seeding is not supported)");
    check(cfg.quiescence_window >= 1, "quiescence_window must be at least 1");
    if (cfg.assignment_mode == AssignmentMode::from_file) {
        check(!cfg.membership_file.empty(), "membership_file is required with assignment_mode = from-file");
    }
    if (cfg.mobility_enabled || cfg.sweep_axis == SweepAxis::mobility_speed) {
        check(cfg.mobility_speed >= 0.0, "mobility_speed must be non-negative");
        check(cfg.epoch_slots >= 1, "epoch_slots must be at least 1");
        check(cfg.n_epochs >= 1, "n_epochs must be at least 1");
    }
    if (!cfg.sweep_points.empty()) {
        check(std::is_sorted(cfg.sweep_points.begin(), cfg.sweep_points.end()),
              "sweep_points must be sorted ascending");
        for (double p : cfg.sweep_points) {
            switch (cfg.sweep_axis) {
            case SweepAxis::d_fraction:
                check(p > 0.0 && p <= 10.0, "d_fraction sweep points must lie in (0, 10]");
                break;
            case SweepAxis::n_ues:
                check(p >= static_cast<double>(cfg.n_clusters) && p >= 2.0,
                      "n_ues sweep points must give each cluster a mean of at least one UE");
                break;
            case SweepAxis::mobility_speed:
                check(p >= 0.0, "mobility_speed sweep points must be non-negative");
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const char* sweep_axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::d_fraction: return "d_fraction";
    case SweepAxis::n_ues: return "n_ues";
    case SweepAxis::mobility_speed: return "mobility_speed";
    }
    return "?";
}

std::string method_slug(SeedMethod m) {
    std::string s = seed_method_name(m);
    for (char& c : s) {
        if (c == ':') c = '_';
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

} // namespace d2d
