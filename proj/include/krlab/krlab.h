/* krlab.h - C interface to the partition identity laboratory.
 *
 * All functions returning pointers yield NULL on failure; all functions
 * returning int yield a krlab_status. krlab_last_error() describes the most
 * recent failure on the calling thread. Strings returned as char* are heap
 * allocated and must be released with krlab_string_free().
 */
#ifndef KRLAB_H
#define KRLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum krlab_status {
    KRLAB_OK = 0,
    KRLAB_EINVAL = 1,   /* bad arguments, unknown names, precondition failures */
    KRLAB_EVERIFY = 2,  /* a verification suite reported failures */
    KRLAB_EINTERNAL = 3 /* invariant breakage; always a bug */
} krlab_status;

typedef struct krlab_table krlab_table;   /* (n, m) -> exact count */
typedef struct krlab_series krlab_series; /* truncated bivariate q,x series */

const char* krlab_version(void);
const char* krlab_last_error(void);
void krlab_string_free(char* s);

/* ------------------------------------------------------------------ */
/* enumeration                                                        */

/* Known variant names: kr1 kr2 kr3 kr4 kr3-1 krb1 krb4-2 krb1-1 kr5 kr6
 * krc1-2 krc2-2 krc2-1 cong1..cong6. Returns 1 if known. */
int krlab_variant_known(const char* name);

krlab_table* krlab_enumerate(const char* variant, int max_n);
krlab_table* krlab_enumerate_congruence(int modulus, const int* residues, int n_residues,
                                        int max_n);
void krlab_table_free(krlab_table* t);
long long krlab_table_count(const krlab_table* t, int n, int m);
long long krlab_table_total(const krlab_table* t, int n);
char* krlab_table_csv(const krlab_table* t);
char* krlab_table_json(const krlab_table* t);

/* ------------------------------------------------------------------ */
/* series                                                             */

/* Recipe ids: the variant names above plus kr5-alt kr6-alt krc1-2-alt
 * krc2-2-alt krc2-1-alt krc1-2-laurent krc2-2-laurent krb1-1-alt gg1-lhs
 * gg1-rhs. */
krlab_series* krlab_build_sum_series(const char* recipe_id, int max_q, int max_x);
krlab_series* krlab_build_conjecture_product(int id, int max_q);
void krlab_series_free(krlab_series* s);
long long krlab_series_coeff(const krlab_series* s, int n, int m);
char* krlab_series_json(const krlab_series* s);
/* 1 equal, 0 not equal (detail describes the first difference), -1 error */
int krlab_series_equal(const krlab_series* a, const krlab_series* b, int up_to_q,
                       char** detail);

/* ------------------------------------------------------------------ */
/* bijections                                                         */

/* Decode a family member into its move tuple. Returns a JSON object
 * {"variant":..., "beta":[...], "beta_weight":..., "mu":[...], "eta":[...],
 *  "nu":[...], "extra_move":..., "counts":[n1,n2,n3], "weight":...,
 *  "reencoded_ok":...} and, when with_trace is nonzero, "trace":[...] with
 * one entry per move/adjustment. */
char* krlab_bijection_decode(const char* variant, const int* parts, int n_parts,
                             int with_trace);

/* The same decoding as a step log: one JSON object per line, each with the
 * move kind, the acted-on cluster's rank and anchor, the weight delta, and
 * (for completed moves) the partition reached. */
char* krlab_bijection_trace_lines(const char* variant, const int* parts, int n_parts);

/* ------------------------------------------------------------------ */
/* verification                                                       */

/* Suites: theorems | conjectures | roundtrip | section5 | all.
 * max_n <= 0 selects the suite's default order. threads <= 0 selects
 * KRLAB_THREADS or hardware concurrency. Returns the JSON report; *status
 * is KRLAB_OK when every check passed, KRLAB_EVERIFY otherwise. */
char* krlab_verify(const char* suite, int max_n, int threads, int* status);

#ifdef __cplusplus
}
#endif

#endif /* KRLAB_H */
