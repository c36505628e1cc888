/*
 * permrange - exact permanent ranges of sign matrices.
 *
 * C interface to the permrange shared library. All functions are
 * thread-safe; handles and returned strings are owned by the caller and
 * released with pr_matrix_free / pr_string_free. Numeric results are decimal
 * strings because permanents outgrow every fixed-width integer type.
 */
#ifndef PERMRANGE_H
#define PERMRANGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pr_status {
  PR_OK = 0,
  PR_VERIFY_FAILED = 1, /* a verification suite reported FAIL rows */
  PR_ERR_INPUT = 2,     /* malformed input or parameter out of range */
  PR_ERR_BUDGET = 3,    /* refused: work budget exceeded */
  PR_ERR_INTERNAL = 4
} pr_status;

/* Opaque handle to an immutable sign matrix. */
typedef struct pr_matrix pr_matrix;

const char* pr_version(void);

/* Message for the most recent failure on this thread; empty when the last
 * call succeeded. The pointer stays valid until the next library call on the
 * same thread. */
const char* pr_last_error(void);

void pr_string_free(char* s);
void pr_matrix_free(pr_matrix* m);

/* Text format: "k n\n" then k rows of exactly n characters from {+,-}, each
 * newline-terminated. */
pr_status pr_matrix_parse(const char* text, pr_matrix** out);
pr_status pr_matrix_render(const pr_matrix* m, char** out_text);

/* Block matrix: column i gets at most one -1; row i carries counts[i] of
 * them, laid out left to right after the all-plus columns. */
pr_status pr_matrix_block(int32_t k, int64_t n, const int64_t* counts, pr_matrix** out);

pr_status pr_matrix_concat(const pr_matrix* top, const pr_matrix* bottom, pr_matrix** out);

int32_t pr_matrix_rows(const pr_matrix* m);
int64_t pr_matrix_cols(const pr_matrix* m);

/* engine: NULL or "auto" for dispatch, else "injection" | "bitmask" |
 * "ryser". budget 0 selects per-engine defaults. out_engine_used (optional)
 * receives the engine that actually ran. */
pr_status pr_permanent(const pr_matrix* m, const char* engine, uint64_t budget, char** out_value,
                       char** out_engine_used);

/* The runners below fill a JSON document (schema "permrange/1"). Integers are
 * encoded as decimal strings throughout. */

/* suite: "lemma" | "mobius" | "laplace" | "transform" | "recursion".
 * k_max / n_max of 0 select per-suite defaults. Returns PR_VERIFY_FAILED when
 * any row fails; the document is still written. */
pr_status pr_verify_json(const char* suite, int32_t k_max, int64_t n_max, uint64_t budget,
                         uint64_t seed, char** out_json);

/* mode: NULL or "canonical" | "naive". */
pr_status pr_range_json(int32_t k, int64_t n, const char* mode, uint64_t budget, int32_t workers,
                        char** out_json);

/* Renders the derived block matrix for (k, n) in the text format.
 * n0_override >= 0 replaces the derived residue; it must keep the counts
 * integral. Pass -1 to derive it from n. */
pr_status pr_construct(int32_t k, int64_t n, int64_t n0_override, char** out_text);

/* Constants pipeline for k; when n > 0 also the plug-in rule report at eps. */
pr_status pr_bounds_json(int32_t k, int64_t n, double eps, char** out_json);

/* Lower-bound certificate at (k, n); side -1 selects floor(delta_k n). */
pr_status pr_report_json(int32_t k, int64_t n, int64_t side, uint64_t budget, int32_t workers,
                         char** out_json);

/* name: "krauter" | "upper-triangular" | "monotonicity" | "subset". */
pr_status pr_experiment_json(const char* name, int32_t k, int64_t n, int32_t allow_long,
                             uint64_t budget, uint64_t seed, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PERMRANGE_H */
