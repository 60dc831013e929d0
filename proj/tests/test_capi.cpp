#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the shared library strictly through its C surface.
#include <d2dcache/d2dcache.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Config {
    d2dc_config* h = nullptr;
    Config() { REQUIRE(d2dc_config_create(&h) == D2DC_OK); }
    ~Config() { d2dc_config_free(h); }
    Config(const Config&) = delete;
    Config& operator=(const Config&) = delete;
};

void set(d2dc_config* h, const char* key, const char* value) {
    REQUIRE_MESSAGE(d2dc_config_set(h, key, value) == D2DC_OK, d2dc_last_error());
}

std::string get(d2dc_config* h, const char* key) {
    char* value = nullptr;
    REQUIRE(d2dc_config_get(h, key, &value) == D2DC_OK);
    std::string out = value ? value : "";
    d2dc_string_free(value);
    return out;
}

// Small, fast, valid configuration.
void make_tiny(d2dc_config* h) {
    set(h, "n_clusters", "3");
    set(h, "mean_ues_per_cluster", "4");
    set(h, "area_radius", "300");
    set(h, "community_count", "3");
    set(h, "methods", "SV,degree");
    set(h, "scenarios", "1");
    set(h, "runs_per_scenario", "2");
    set(h, "master_seed", "4242");
    set(h, "max_slots", "40");
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("d2dcapi_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("version and last_error are always strings") {
    CHECK(d2dc_version() != nullptr);
    CHECK(std::strlen(d2dc_version()) > 0);
    CHECK(d2dc_last_error() != nullptr);
}

TEST_CASE("null arguments are EINVAL, not crashes") {
    CHECK(d2dc_config_create(nullptr) == D2DC_EINVAL);
    CHECK(d2dc_config_load(nullptr, nullptr) == D2DC_EINVAL);
    CHECK(d2dc_config_save(nullptr, "x") == D2DC_EINVAL);
    CHECK(d2dc_config_set(nullptr, "a", "b") == D2DC_EINVAL);
    CHECK(d2dc_config_get(nullptr, "a", nullptr) == D2DC_EINVAL);
    CHECK(d2dc_config_validate(nullptr, nullptr) == D2DC_EINVAL);
    CHECK(d2dc_run_scenario(nullptr, 1, 0, nullptr) == D2DC_EINVAL);
    CHECK(d2dc_run_sweep(nullptr, 1, nullptr) == D2DC_EINVAL);
    CHECK(d2dc_result_emit_csv(nullptr, "x") == D2DC_EINVAL);
    CHECK(d2dc_generate_artifacts(nullptr, "x") == D2DC_EINVAL);
    CHECK(std::strlen(d2dc_last_error()) > 0);
    d2dc_config_free(nullptr);
    d2dc_result_free(nullptr);
    d2dc_string_free(nullptr);
}

TEST_CASE("set and get round-trip through the key table") {
    Config cfg;
    set(cfg.h, "d_fraction", "0.35");
    CHECK(get(cfg.h, "d_fraction") == "0.35");
    set(cfg.h, "methods", "SV:influence,betweenness");
    CHECK(get(cfg.h, "methods") == "SV:influence,betweenness");
    CHECK(d2dc_config_set(cfg.h, "no_such_key", "1") == D2DC_EINVAL);
    CHECK(d2dc_config_set(cfg.h, "d_fraction", "banana") == D2DC_EINVAL);
    char* value = nullptr;
    CHECK(d2dc_config_get(cfg.h, "no_such_key", &value) == D2DC_EINVAL);
}

TEST_CASE("validation reports every problem joined by newlines") {
    Config cfg;
    // Default config misses master_seed.
    char* problems = nullptr;
    CHECK(d2dc_config_validate(cfg.h, &problems) == D2DC_EVALIDATION);
    REQUIRE(problems != nullptr);
    CHECK(std::string(problems).find("master_seed") != std::string::npos);
    d2dc_string_free(problems);
    set(cfg.h, "master_seed", "1");
    CHECK(d2dc_config_validate(cfg.h, nullptr) == D2DC_OK);
    set(cfg.h, "tie_density", "0.5");
    set(cfg.h, "d_fraction", "0.2");
    CHECK(d2dc_config_validate(cfg.h, nullptr) == D2DC_OK);
}

TEST_CASE("config files round-trip through the C surface") {
    Config cfg;
    make_tiny(cfg.h);
    const fs::path dir = fresh_dir("cfg");
    const std::string path = (dir / "a.cfg").string();
    REQUIRE(d2dc_config_save(cfg.h, path.c_str()) == D2DC_OK);
    d2dc_config* back = nullptr;
    REQUIRE(d2dc_config_load(path.c_str(), &back) == D2DC_OK);
    CHECK(get(back, "master_seed") == "4242");
    CHECK(get(back, "methods") == "SV,degree");
    d2dc_config_free(back);
    CHECK(d2dc_config_load((dir / "missing.cfg").string().c_str(), &back) == D2DC_EIO);
    std::ofstream(dir / "broken.cfg") << "n_clusters = banana\n";
    CHECK(d2dc_config_load((dir / "broken.cfg").string().c_str(), &back) == D2DC_EINVAL);
    fs::remove_all(dir);
}

TEST_CASE("a scenario runs and emits through the C surface") {
    Config cfg;
    make_tiny(cfg.h);
    d2dc_result* result = nullptr;
    REQUIRE_MESSAGE(d2dc_run_scenario(cfg.h, 2, 1, &result) == D2DC_OK, d2dc_last_error());
    const fs::path dir = fresh_dir("run");
    CHECK(d2dc_result_emit_csv(result, dir.string().c_str()) == D2DC_OK);
    CHECK(d2dc_result_emit_plot_data(result, dir.string().c_str()) == D2DC_OK);
    CHECK(fs::exists(dir / "raw_runs.csv"));
    CHECK(fs::exists(dir / "aggregate.csv"));
    CHECK(fs::exists(dir / "scores.csv"));
    CHECK(fs::exists(dir / "traces.csv"));
    CHECK(fs::exists(dir / "fig3.dat"));
    d2dc_result_free(result);
    fs::remove_all(dir);
}

TEST_CASE("unvalidated configs are rejected before running") {
    Config cfg;  // no master_seed
    d2dc_result* result = nullptr;
    CHECK(d2dc_run_scenario(cfg.h, 1, 0, &result) == D2DC_EVALIDATION);
    CHECK(result == nullptr);
    CHECK(std::strlen(d2dc_last_error()) > 0);
}

TEST_CASE("sweeps demand sweep points") {
    Config cfg;
    make_tiny(cfg.h);
    d2dc_result* result = nullptr;
    CHECK(d2dc_run_sweep(cfg.h, 1, &result) != D2DC_OK);
    set(cfg.h, "sweep_points", "0.2,0.5");
    REQUIRE_MESSAGE(d2dc_run_sweep(cfg.h, 1, &result) == D2DC_OK, d2dc_last_error());
    const fs::path dir = fresh_dir("sweep");
    CHECK(d2dc_result_emit_plot_data(result, dir.string().c_str()) == D2DC_OK);
    CHECK(fs::exists(dir / "fig2.dat"));
    d2dc_result_free(result);
    fs::remove_all(dir);
}

TEST_CASE("artifact and selection writers work via paths") {
    Config cfg;
    make_tiny(cfg.h);
    const fs::path dir = fresh_dir("arts");
    REQUIRE_MESSAGE(d2dc_generate_artifacts(cfg.h, dir.string().c_str()) == D2DC_OK, d2dc_last_error());
    CHECK(fs::exists(dir / "topology.csv"));
    CHECK(fs::exists(dir / "membership.csv"));
    CHECK(fs::exists(dir / "ties.csv"));
    CHECK(d2dc_write_centrality_csv(cfg.h, (dir / "centrality.csv").string().c_str()) == D2DC_OK);
    CHECK(d2dc_write_seeds_csv(cfg.h, (dir / "seeds.csv").string().c_str()) == D2DC_OK);
    CHECK(fs::exists(dir / "centrality.csv"));
    CHECK(fs::exists(dir / "seeds.csv"));
    fs::remove_all(dir);
}
