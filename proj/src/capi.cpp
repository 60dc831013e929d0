#include "d2dcache/d2dcache.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "config.hpp"
#include "scenario.hpp"

struct d2dc_config {
    d2d::ScenarioConfig cfg;
};

struct d2dc_result {
    d2d::ExperimentResult res;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, std::string message) {
    g_last_error = std::move(message);
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps C++ failures onto status codes; io errors carry EIO via errno checks
// upstream, everything filesystem-ish lands in runtime_error here.
template <typename Fn>
int guarded(int io_hint, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(D2DC_EINVAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(D2DC_EINTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(io_hint, e.what());
    } catch (...) {
        return fail(D2DC_EINTERNAL, "unknown failure");
    }
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        out += lines[i];
    }
    return out;
}

int write_selection_csv(const d2dc_config* cfg, const char* path, bool seeds_only) {
    if (!cfg || !path) return fail(D2DC_EINVAL, "cfg and path must be non-null");
    return guarded(D2DC_EIO, [&]() -> int {
        const std::vector<std::string> problems = d2d::validate_config(cfg->cfg);
        if (!problems.empty()) return fail(D2DC_EVALIDATION, problems.front());
        const d2d::BuiltScenario built = d2d::build_scenario(cfg->cfg, d2d::scenario_seed(cfg->cfg, 0));
        if (seeds_only) {
            d2d::write_seeds_csv(built, cfg->cfg.methods, path);
        } else {
            d2d::write_centrality_csv(built, cfg->cfg.methods, path);
        }
        return D2DC_OK;
    });
}

} // namespace

extern "C" {

const char* d2dc_last_error(void) { return g_last_error.c_str(); }

const char* d2dc_version(void) { return "1.0.0"; }

void d2dc_string_free(char* s) { std::free(s); }

int d2dc_config_create(d2dc_config** out) {
    if (!out) return fail(D2DC_EINVAL, "out is null");
    return guarded(D2DC_EINTERNAL, [&] {
        *out = new d2dc_config{};
        return D2DC_OK;
    });
}

int d2dc_config_load(const char* path, d2dc_config** out) {
    if (!path || !out) return fail(D2DC_EINVAL, "path and out must be non-null");
    return guarded(D2DC_EIO, [&]() -> int {
        d2d::ParsedConfig parsed = d2d::load_config_file(path);
        if (!parsed.errors.empty()) return fail(D2DC_EINVAL, join_lines(parsed.errors));
        *out = new d2dc_config{std::move(parsed.cfg)};
        return D2DC_OK;
    });
}

int d2dc_config_save(const d2dc_config* cfg, const char* path) {
    if (!cfg || !path) return fail(D2DC_EINVAL, "cfg and path must be non-null");
    return guarded(D2DC_EIO, [&] {
        d2d::save_config_file(cfg->cfg, path);
        return D2DC_OK;
    });
}

int d2dc_config_set(d2dc_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(D2DC_EINVAL, "cfg, key and value must be non-null");
    return guarded(D2DC_EINTERNAL, [&]() -> int {
        std::string error;
        if (!d2d::set_config_value(cfg->cfg, key, value, error)) return fail(D2DC_EINVAL, error);
        return D2DC_OK;
    });
}

int d2dc_config_get(const d2dc_config* cfg, const char* key, char** value) {
    if (!cfg || !key || !value) return fail(D2DC_EINVAL, "cfg, key and value must be non-null");
    return guarded(D2DC_EINTERNAL, [&]() -> int {
        std::string text;
        if (!d2d::get_config_value(cfg->cfg, key, text))
            return fail(D2DC_EINVAL, std::string("unknown config key: ") + key);
        *value = dup_string(text);
        if (!*value) return fail(D2DC_EINTERNAL, "out of memory");
        return D2DC_OK;
    });
}

int d2dc_config_validate(const d2dc_config* cfg, char** problems) {
    if (!cfg) return fail(D2DC_EINVAL, "cfg is null");
    return guarded(D2DC_EINTERNAL, [&]() -> int {
        const std::vector<std::string> found = d2d::validate_config(cfg->cfg);
        if (found.empty()) {
            if (problems) *problems = nullptr;
            return D2DC_OK;
        }
        if (problems) {
            *problems = dup_string(join_lines(found));
            if (!*problems) return fail(D2DC_EINTERNAL, "out of memory");
        }
        return fail(D2DC_EVALIDATION, found.front());
    });
}

void d2dc_config_free(d2dc_config* cfg) { delete cfg; }

int d2dc_run_scenario(const d2dc_config* cfg, int threads, int keep_traces, d2dc_result** out) {
    if (!cfg || !out) return fail(D2DC_EINVAL, "cfg and out must be non-null");
    return guarded(D2DC_EINTERNAL, [&]() -> int {
        const std::vector<std::string> problems = d2d::validate_config(cfg->cfg);
        if (!problems.empty()) return fail(D2DC_EVALIDATION, problems.front());
        *out = new d2dc_result{d2d::run_scenario(cfg->cfg, threads, keep_traces != 0)};
        return D2DC_OK;
    });
}

int d2dc_run_sweep(const d2dc_config* cfg, int threads, d2dc_result** out) {
    if (!cfg || !out) return fail(D2DC_EINVAL, "cfg and out must be non-null");
    return guarded(D2DC_EINTERNAL, [&]() -> int {
        const std::vector<std::string> problems = d2d::validate_config(cfg->cfg);
        if (!problems.empty()) return fail(D2DC_EVALIDATION, problems.front());
        *out = new d2dc_result{d2d::run_sweep(cfg->cfg, threads)};
        return D2DC_OK;
    });
}

int d2dc_result_emit_csv(const d2dc_result* result, const char* out_dir) {
    if (!result || !out_dir) return fail(D2DC_EINVAL, "result and out_dir must be non-null");
    return guarded(D2DC_EIO, [&] {
        d2d::emit_csv(result->res, out_dir);
        return D2DC_OK;
    });
}

int d2dc_result_emit_plot_data(const d2dc_result* result, const char* out_dir) {
    if (!result || !out_dir) return fail(D2DC_EINVAL, "result and out_dir must be non-null");
    return guarded(D2DC_EIO, [&] {
        d2d::emit_plot_data(result->res, out_dir);
        return D2DC_OK;
    });
}

void d2dc_result_free(d2dc_result* result) { delete result; }

int d2dc_generate_artifacts(const d2dc_config* cfg, const char* out_dir) {
    if (!cfg || !out_dir) return fail(D2DC_EINVAL, "cfg and out_dir must be non-null");
    return guarded(D2DC_EIO, [&] {
        d2d::generate_artifacts(cfg->cfg, out_dir);
        return D2DC_OK;
    });
}

int d2dc_write_centrality_csv(const d2dc_config* cfg, const char* path) {
    return write_selection_csv(cfg, path, false);
}

int d2dc_write_seeds_csv(const d2dc_config* cfg, const char* path) {
    return write_selection_csv(cfg, path, true);
}

} // extern "C"
