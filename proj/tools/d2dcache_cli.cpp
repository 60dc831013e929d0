// Command-line front end; everything goes through the public C API.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d2dcache/d2dcache.h"

namespace {

struct ConfigGuard {
    d2dc_config* cfg = nullptr;
    ~ConfigGuard() { d2dc_config_free(cfg); }
};

struct ResultGuard {
    d2dc_result* res = nullptr;
    ~ResultGuard() { d2dc_result_free(res); }
};

int exit_code(int status) { return status == D2DC_EVALIDATION ? 2 : 1; }

int report_failure(int status) {
    std::cerr << "error: " << d2dc_last_error() << '\n';
    return exit_code(status);
}

int load_config(const std::string& path, const std::vector<std::string>& overrides, ConfigGuard& guard) {
    int rc = path.empty() ? d2dc_config_create(&guard.cfg) : d2dc_config_load(path.c_str(), &guard.cfg);
    if (rc != D2DC_OK) {
        std::cerr << "error: " << d2dc_last_error() << '\n';
        return rc;
    }
    for (const std::string& kv : overrides) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
            return D2DC_EINVAL;
        }
        rc = d2dc_config_set(guard.cfg, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
        if (rc != D2DC_OK) {
            std::cerr << "error: " << d2dc_last_error() << '\n';
            return rc;
        }
    }
    return D2DC_OK;
}

// Returns 0 when valid, otherwise prints every problem and returns 2.
int check_valid(d2dc_config* cfg) {
    char* problems = nullptr;
    const int rc = d2dc_config_validate(cfg, &problems);
    if (rc == D2DC_OK) return 0;
    if (problems) {
        std::cerr << problems << '\n';
        d2dc_string_free(problems);
    } else {
        std::cerr << d2dc_last_error() << '\n';
    }
    return 2;
}

int emit_result(d2dc_result* res, const std::string& out_dir) {
    int rc = d2dc_result_emit_csv(res, out_dir.c_str());
    if (rc != D2DC_OK) return report_failure(rc);
    rc = d2dc_result_emit_plot_data(res, out_dir.c_str());
    if (rc != D2DC_OK) return report_failure(rc);
    std::cout << "wrote results to " << out_dir << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"social-community-aware D2D cache seeding simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out;
    int threads = 0;
    bool keep_traces = false;

    auto add_common = [&](CLI::App* cmd, bool needs_out) {
        cmd->add_option("--config", config_path, "config file (key = value lines)");
        cmd->add_option("--set", overrides, "override one config key, key=value")->take_all();
        if (needs_out) cmd->add_option("--out", out, "output path")->required();
    };

    CLI::App* validate = app.add_subcommand("validate-config", "parse and validate a config");
    add_common(validate, false);
    CLI::App* generate = app.add_subcommand("generate", "write realization 0 topology/social/link CSVs");
    add_common(generate, true);
    CLI::App* centrality = app.add_subcommand("centrality", "write per-method member scores for realization 0");
    add_common(centrality, true);
    CLI::App* seeds = app.add_subcommand("select-seeds", "write chosen seeds per method for realization 0");
    add_common(seeds, true);
    CLI::App* simulate = app.add_subcommand("simulate", "run the configured scenario point");
    add_common(simulate, true);
    simulate->add_option("--threads", threads, "worker threads, 0 = hardware");
    simulate->add_flag("--keep-traces", keep_traces, "emit per-run diffusion traces");
    CLI::App* sweep = app.add_subcommand("sweep", "sweep the configured axis over sweep_points");
    add_common(sweep, true);
    sweep->add_option("--threads", threads, "worker threads, 0 = hardware");

    CLI11_PARSE(app, argc, argv);

    ConfigGuard guard;
    int rc = load_config(config_path, overrides, guard);
    if (rc != D2DC_OK) return exit_code(rc);

    if (validate->parsed()) {
        const int bad = check_valid(guard.cfg);
        if (bad) return bad;
        std::cout << "config ok\n";
        return 0;
    }
    if (generate->parsed()) {
        rc = d2dc_generate_artifacts(guard.cfg, out.c_str());
        if (rc != D2DC_OK) return report_failure(rc);
        std::cout << "wrote artifacts to " << out << '\n';
        return 0;
    }
    if (centrality->parsed()) {
        rc = d2dc_write_centrality_csv(guard.cfg, out.c_str());
        if (rc != D2DC_OK) return report_failure(rc);
        std::cout << "wrote centrality table to " << out << '\n';
        return 0;
    }
    if (seeds->parsed()) {
        rc = d2dc_write_seeds_csv(guard.cfg, out.c_str());
        if (rc != D2DC_OK) return report_failure(rc);
        std::cout << "wrote seed table to " << out << '\n';
        return 0;
    }
    if (simulate->parsed()) {
        const int bad = check_valid(guard.cfg);
        if (bad) return bad;
        ResultGuard result;
        rc = d2dc_run_scenario(guard.cfg, threads, keep_traces ? 1 : 0, &result.res);
        if (rc != D2DC_OK) return report_failure(rc);
        return emit_result(result.res, out);
    }
    if (sweep->parsed()) {
        const int bad = check_valid(guard.cfg);
        if (bad) return bad;
        ResultGuard result;
        rc = d2dc_run_sweep(guard.cfg, threads, &result.res);
        if (rc != D2DC_OK) return report_failure(rc);
        return emit_result(result.res, out);
    }
    return 1;
}
