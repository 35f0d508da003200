/* C API for the gridsq library: grid homology Sq^2 pipeline.
 *
 * Usage: create a context from a grid description (JSON {"n":..,"X":[..],
 * "O":[..]} or the line form "n / X .. / O .."), call the subcommand
 * functions with an options JSON string (may be NULL or ""), free returned
 * strings with gridsq_free_string. All outputs are JSON with "schema": 1.
 */
#ifndef GRIDSQ_H
#define GRIDSQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gridsq_ctx gridsq_ctx;

/* error codes */
enum {
  GRIDSQ_OK = 0,
  GRIDSQ_EINVAL = 1,    /* bad input: grid, options, pins, budget */
  GRIDSQ_EINTERNAL = 2  /* internal inconsistency (theorem-violating state) */
};

/* Parse a grid; returns NULL on failure (see gridsq_global_error). */
gridsq_ctx* gridsq_ctx_new(const char* grid_text);
void gridsq_ctx_free(gridsq_ctx* ctx);

/* Last error message for a context (empty string if none). The returned
 * pointer is owned by the context and valid until the next call on it. */
const char* gridsq_last_error(const gridsq_ctx* ctx);
/* Error message for the last failed gridsq_ctx_new or gridsq_eval_loop. */
const char* gridsq_global_error(void);

/* Options JSON (every field optional):
 *   {"pins": {"<rect-id or R#>": 0|1, ...},
 *    "block_o": [..], "block_x": false, "truncate": 4,
 *    "variant": 0|1|"both", "budget": 1000000}
 * On success *out_json is a malloc'd string owned by the caller. */
int gridsq_info(gridsq_ctx* ctx, const char* options_json, char** out_json);
int gridsq_sign(gridsq_ctx* ctx, const char* options_json, char** out_json);
int gridsq_frame(gridsq_ctx* ctx, const char* options_json, char** out_json);
int gridsq_sq2(gridsq_ctx* ctx, const char* options_json, char** out_json);
int gridsq_verify(gridsq_ctx* ctx, const char* options_json, char** out_json);

/* Evaluate a Pin loop script (no grid needed):
 * [{"short":[i,j]} | {"long":[n,m,orient]} | {"E":[i,j,k]}, ...] */
int gridsq_eval_loop(const char* script_json, char** out_json);

void gridsq_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GRIDSQ_H */
