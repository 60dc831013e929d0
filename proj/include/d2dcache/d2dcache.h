#ifndef D2DCACHE_H
#define D2DCACHE_H

/* C interface to the D2D cache-seeding simulator.
 *
 * All functions return a status code; D2DC_OK is 0. On failure,
 * d2dc_last_error() returns a thread-local message describing what went
 * wrong. Strings returned through char** are owned by the caller and must
 * be released with d2dc_string_free(). Handles are opaque and must be
 * released with their matching *_free(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define D2DC_OK 0
#define D2DC_EINVAL 1      /* bad argument (null handle, unknown key, bad value) */
#define D2DC_EVALIDATION 2 /* config failed validation */
#define D2DC_EIO 3         /* file could not be read or written */
#define D2DC_EINTERNAL 4   /* unexpected failure */

typedef struct d2dc_config d2dc_config;
typedef struct d2dc_result d2dc_result;

/* Message for the most recent failure on this thread; never NULL. */
const char* d2dc_last_error(void);

const char* d2dc_version(void);

void d2dc_string_free(char* s);

/* --- configuration ----------------------------------------------------- */

/* Fresh config with built-in defaults (master_seed unset). */
int d2dc_config_create(d2dc_config** out);

/* Parse a key = value file; parse errors are reported via d2dc_last_error. */
int d2dc_config_load(const char* path, d2dc_config** out);

int d2dc_config_save(const d2dc_config* cfg, const char* path);

/* Set/get one key using the same names as the config file. */
int d2dc_config_set(d2dc_config* cfg, const char* key, const char* value);
int d2dc_config_get(const d2dc_config* cfg, const char* key, char** value);

/* D2DC_OK when valid; otherwise D2DC_EVALIDATION with the first problem in
 * d2dc_last_error and all problems joined by newlines in *problems when
 * problems is non-NULL. */
int d2dc_config_validate(const d2dc_config* cfg, char** problems);

void d2dc_config_free(d2dc_config* cfg);

/* --- experiments -------------------------------------------------------- */

/* Runs the configured scenario at the current parameter point.
 * threads <= 0 picks the hardware concurrency. keep_traces != 0 retains
 * per-run diffusion traces for trace/delay CSV emission. */
int d2dc_run_scenario(const d2dc_config* cfg, int threads, int keep_traces, d2dc_result** out);

/* Sweeps sweep_axis over sweep_points. */
int d2dc_run_sweep(const d2dc_config* cfg, int threads, d2dc_result** out);

/* Raw rows, aggregates, delay PDFs, scores (and mobility/trace files when
 * present) as CSVs under out_dir. */
int d2dc_result_emit_csv(const d2dc_result* result, const char* out_dir);

/* Figure-ready .dat tables under out_dir. */
int d2dc_result_emit_plot_data(const d2dc_result* result, const char* out_dir);

void d2dc_result_free(d2dc_result* result);

/* --- single-realization artifacts ---------------------------------------- */

/* Topology, membership, ties, link table and edge CSVs for realization 0. */
int d2dc_generate_artifacts(const d2dc_config* cfg, const char* out_dir);

/* Per-method member scores / chosen seeds for realization 0. */
int d2dc_write_centrality_csv(const d2dc_config* cfg, const char* path);
int d2dc_write_seeds_csv(const d2dc_config* cfg, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* D2DCACHE_H */
