/*
 * postulation — C interface to the postulation verification library.
 *
 * The library decides, by exact rank computation over a prime field plus
 * closed-form expected-dimension counting, whether generic configurations of
 * lines, fat points, fat linear spaces, collinear points, and sundials in
 * projective n-space impose independent conditions on degree-d forms.
 *
 * Usage pattern: build a configuration with pst_config_* calls, then ask for
 * expected counts (pst_expected) or run randomized rank trials (pst_verify).
 * All functions return a pst_status; results come back through out
 * parameters or opaque handles. Handles must be released with the matching
 * *_free call. On any failure, pst_last_error() returns a human-readable
 * message for the calling thread.
 *
 * Determinism: everything randomized is a pure function of (configuration,
 * seed, prime). The same seed reproduces the same geometry and ranks on any
 * platform.
 *
 * Thread safety: configurations and verdicts are not synchronized; do not
 * share one handle across threads without external locking. Distinct handles
 * may be used concurrently.
 */
#ifndef POSTULATION_H
#define POSTULATION_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---------- status codes ---------- */

typedef enum pst_status {
  PST_OK = 0,
  PST_ERR_INVALID_ARGUMENT = 1, /* null handle / out pointer, bad enum value */
  PST_ERR_RANGE = 2,            /* parameters outside a documented domain */
  PST_ERR_OVERFLOW = 3,         /* exact integer arithmetic left 64 bits */
  PST_ERR_SAMPLING = 4,         /* genericity unreachable (enlarge the prime) */
  PST_ERR_UNSUPPORTED = 5,      /* component/placement pair outside the split table */
  PST_ERR_INTERNAL = 6,         /* invariant violation; please report */
} pst_status;

/* Stable name for a status code, e.g. "PST_ERR_RANGE". */
const char* pst_status_name(pst_status status);

/* Message describing the last failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the thread's next
 * library call. */
const char* pst_last_error(void);

/* Library version as "major.minor.patch". */
const char* pst_version(void);

/* Default prime modulus (2^31 - 1). */
uint64_t pst_default_prime(void);

/* Counter-based seed split: the seed for sub-stream `index` of `base`.
 * This is the same derivation the library applies internally per trial, so
 * callers can give batch entries independent, reproducible seeds. */
uint64_t pst_derive_seed(uint64_t base, uint64_t index);

/* ---------- configuration builder ---------- */

/* Where a component sits relative to the fixed auxiliary surfaces. The
 * hyperplane is available in any ambient dimension; the quadric surface and
 * its two rulings only in P^3. Surfaces must be enabled on the configuration
 * before use. */
typedef enum pst_placement {
  PST_FREE = 0,
  PST_IN_HYPERPLANE = 1,
  PST_ON_FIRST_RULING = 2,
  PST_ON_SECOND_RULING = 3,
  PST_SUPPORT_ON_QUADRIC = 4,
} pst_placement;

typedef struct pst_config pst_config;

/* Creates a configuration in P^n for degree-d forms. Returns NULL when
 * n < 2 or d < 1 or on allocation failure; pst_last_error() explains. */
pst_config* pst_config_new(int32_t n, int32_t d);
void pst_config_free(pst_config* cfg);

/* Enables the fixed hyperplane / the fixed quadric surface (the quadric
 * exists in P^3 only). Enable a surface before adding components placed on
 * it. Every builder call validates eagerly and leaves the configuration
 * unchanged when it reports an error. */
pst_status pst_config_with_hyperplane(pst_config* cfg);
pst_status pst_config_with_quadric(pst_config* cfg);

/* Appends `count` copies of a component. Counting data per kind:
 *   line              d+1 conditions each
 *   fat space (r, m)  the m-fold structure on an r-dimensional subspace
 *   fat point (m)     same as fat space with r = 0
 *   collinear (q)     q simple points on one shared line (q is the block
 *                     size; `count` adds that many blocks)
 *   sundial           two meeting lines with an embedded double point;
 *                     2(d+1) conditions each
 */
pst_status pst_config_add_lines(pst_config* cfg, int64_t count, pst_placement placement);
pst_status pst_config_add_fat_space(pst_config* cfg, int32_t space_dim, int32_t multiplicity,
                                    int64_t count, pst_placement placement);
pst_status pst_config_add_fat_points(pst_config* cfg, int32_t multiplicity, int64_t count,
                                     pst_placement placement);
pst_status pst_config_add_collinear(pst_config* cfg, int64_t points_on_line, int64_t count,
                                    pst_placement placement);
pst_status pst_config_add_sundials(pst_config* cfg, int64_t count, pst_placement placement);

/* ---------- closed-form counting ---------- */

typedef struct pst_expected_counts {
  int64_t ambient;     /* dimension of the degree-d form space, C(n+d, n) */
  int64_t conditions;  /* sum of per-component condition counts */
  int64_t expected_h0; /* max(ambient - conditions, 0) */
  int64_t expected_h1; /* max(conditions - ambient, 0) */
  int64_t virtual_h0;  /* ambient - conditions, may be negative */
} pst_expected_counts;

pst_status pst_expected(const pst_config* cfg, pst_expected_counts* out);

/* Classifier for the known defective family: an m-fold r-dimensional linear
 * space plus s generic lines at degree d is defective exactly when
 * n = r + 3, m = d, and 2 <= s <= d, with virtual defect C(s, 2).
 * Requires n >= r + 2 >= 3, m >= 1, s >= 0. */
pst_status pst_classify_exception(int32_t n, int32_t d, int32_t space_dim, int32_t multiplicity,
                                  int64_t lines, int32_t* exceptional, int64_t* virtual_defect);

/* ---------- randomized rank verdicts ---------- */

typedef struct pst_verdict pst_verdict;

/* Runs `trials` independent samplings over GF(prime) (prime = 0 selects the
 * default) with per-trial seeds derived from `seed`, and aggregates on the
 * best rank achieved. A certified verdict (best rank equals
 * min(ambient, conditions)) proves maximal rank for the generic
 * configuration over that field; a non-certified verdict is evidence of a
 * defect, never a proof, because a defect over GF(p) does not transfer to
 * characteristic zero. */
pst_status pst_verify(const pst_config* cfg, int32_t trials, uint64_t seed, uint64_t prime,
                      pst_verdict** out);
void pst_verdict_free(pst_verdict* v);

int64_t pst_verdict_best_rank(const pst_verdict* v);
int64_t pst_verdict_observed_h0(const pst_verdict* v);
int64_t pst_verdict_observed_h1(const pst_verdict* v);
int64_t pst_verdict_defect(const pst_verdict* v);
int64_t pst_verdict_virtual_defect(const pst_verdict* v);
int32_t pst_verdict_certified(const pst_verdict* v);
int32_t pst_verdict_trials(const pst_verdict* v);
/* Rank achieved by trial `index` in [0, pst_verdict_trials). Returns -1 on a
 * bad index. */
int64_t pst_verdict_trial_rank(const pst_verdict* v, int32_t index);

/* ---------- induction schedules ---------- */

#define PST_SCHEDULE_MAX_CHECKS 8
#define PST_SCHEDULE_NAME_LEN 48

typedef struct pst_schedule_check {
  char name[PST_SCHEDULE_NAME_LEN];
  int32_t holds;
} pst_schedule_check;

/* The derived line/point budgets that make the degree-d induction step work
 * in P^n, plus the feasibility checklist. Valid for n = 4 with d >= 5 and
 * for n >= 5 with d >= 3. */
typedef struct pst_schedule_report {
  int32_t n;
  int32_t d;
  int64_t lines;             /* line budget of the square system */
  int64_t collinear_points;  /* leftover collinear points */
  int64_t kept_lines;        /* lines left transverse to the hyperplane */
  int64_t sundial_pairs;     /* line pairs degenerated into sundials */
  int64_t specialized_lines; /* lines moved into the hyperplane */
  int32_t has_trace;         /* n >= 5: hyperplane trace budget below */
  int64_t trace_lines;
  int64_t trace_points;
  int32_t has_ruling; /* n = 4: quadric budget below */
  int64_t ruling_lines;
  int64_t surface_points;
  int32_t num_checks;
  pst_schedule_check checks[PST_SCHEDULE_MAX_CHECKS];
  int32_t all_hold;
} pst_schedule_report;

pst_status pst_schedule(int32_t n, int32_t d, pst_schedule_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POSTULATION_H */
