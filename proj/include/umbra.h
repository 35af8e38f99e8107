/* C interface to the umbra library: Bernoulli-operator calculus, the zeta/xi
 * special-function stack, the identity catalogue, and the explicit formula.
 *
 * All numeric inputs and outputs are decimal strings so callers never depend
 * on the library's internal precision. Every function returns UMB_OK (0) on
 * success; on failure, umb_last_error(ctx) describes the problem. Returned
 * strings are heap-allocated; release them with umb_free().
 */
#ifndef UMBRA_H
#define UMBRA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct umb_ctx umb_ctx;

enum umb_status {
    UMB_OK = 0,
    UMB_EDOMAIN = 1,      /* argument outside an operation's domain */
    UMB_ENOCONV = 2,      /* budget exhausted / series not summable */
    UMB_ECAP = 3,         /* table index above configured cap */
    UMB_ESYMBOL = 4,      /* umbral symbol not tabled */
    UMB_ELATTICE = 5,     /* oracle singular on the summation lattice */
    UMB_EBADINPUT = 6,    /* malformed file or argument */
    UMB_ENOTFOUND = 7,    /* unknown identity or oracle name */
    UMB_EINTERNAL = 8
};

/* precision_digits is clamped to [15, 100]; pass 0 for the default (30). */
umb_ctx* umb_ctx_new(int precision_digits);
void umb_ctx_free(umb_ctx* ctx);

int umb_ctx_precision(const umb_ctx* ctx);
const char* umb_last_error(const umb_ctx* ctx);

/* engine overrides; pass -1 to keep automatic selection */
void umb_ctx_set_engine(umb_ctx* ctx, int shift_n, int trunc_m);

void umb_free(char* s);
const char* umb_version(void);

/* ---- special-function evaluation; s given as "re" and "im" strings -------- */
int umb_eval_zeta(umb_ctx* ctx, const char* re, const char* im, int order, char** out);
int umb_eval_hurwitz(umb_ctx* ctx, const char* re, const char* im, const char* alpha, char** out);
/* chi_table: comma-separated values chi(1..k), each "a" or "a+bi" */
int umb_eval_lfunc(umb_ctx* ctx, const char* re, const char* im, int modulus, const char* chi_table,
                   char** out);
int umb_eval_gammapi(umb_ctx* ctx, const char* re, const char* im, char** out); /* log Pi(s) */
int umb_eval_xi(umb_ctx* ctx, const char* re, const char* im, char** out);      /* completed xi(s) */

/* ---- umbral engine --------------------------------------------------------
 * params: comma-separated key=value pairs (e.g. "alpha=-2,c=0"); may be NULL.
 * Result is a JSON object {value, error_estimate, method, class, shift_n,
 * trunc_m}. */
int umb_ramanujan_sum(umb_ctx* ctx, const char* oracle, const char* params, const char* shift_re,
                      const char* shift_im, char** out_json);

/* table of the named closed-form constants with computed counterparts */
int umb_constants(umb_ctx* ctx, char** out_json);

/* ---- identity catalogue ---------------------------------------------------
 * ids: comma-separated identity ids, or NULL for the full registry.
 * format: "json" or "csv". with_timestamp=0 yields byte-stable output. */
int umb_identity_list(umb_ctx* ctx, char** out_json);
int umb_verify(umb_ctx* ctx, const char* ids, const char* format, int with_timestamp, char** out_report,
               int* out_failures);

/* ---- xi operator ----------------------------------------------------------
 * Scans t -> xi(B+it) on (0, t_max]; JSON array of refined ordinates. */
int umb_xi_scan(umb_ctx* ctx, const char* t_max, const char* step, int sin_weighted, char** out_json);

/* ---- explicit formula ------------------------------------------------------ */
/* count <= 200 internally computed ordinates, rendered in the zeros file
 * format (one ascending decimal per line, '#' comments allowed) */
int umb_zeros_compute(umb_ctx* ctx, int count, char** out_text);
/* validates a zeros file; on success reports {count, first, last} */
int umb_zeros_check(umb_ctx* ctx, const char* path, char** out_json);
/* zeros_path may be NULL to compute `compute_count` ordinates internally;
 * num_zeros = K terms of the zero sum (0 = all available) */
int umb_explicit_formula(umb_ctx* ctx, const char* x, const char* zeros_path, int compute_count,
                         int num_zeros, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* UMBRA_H */
