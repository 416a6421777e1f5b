#ifndef NILHECKE_H
#define NILHECKE_H

/*
 * C interface to the nilhecke library: exact intersection-form entries
 * for light-leaves pairings, computed by coefficient extraction in the
 * nil Hecke ring of a Coxeter system, plus the supporting
 * combinatorics (Demazure products, subexpression enumeration, Hecke
 * cross-checks) and integer torsion diagnostics.
 *
 * All computations return freshly allocated JSON strings; release them
 * with nh_string_free. Systems are opaque handles; release them with
 * nh_system_free. On failure every function returns a status code and
 * leaves a human-readable detail in nh_last_error() (thread local).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nh_system nh_system;

typedef enum nh_status {
  NH_OK = 0,
  NH_ERR_PARSE,
  NH_ERR_DIAGONAL_NOT_TWO,
  NH_ERR_POSITIVE_OFF_DIAGONAL,
  NH_ERR_ASYMMETRIC_ZERO,
  NH_ERR_ORDER_MISMATCH,
  NH_ERR_BAD_GENERATOR,
  NH_ERR_LENGTH_MISMATCH,
  NH_ERR_ENDPOINT_MISMATCH,
  NH_ERR_HAS_D1,
  NH_ERR_NOT_LINEAR,
  NH_ERR_INEXACT_DIVISION,
  NH_ERR_ORACLE_BOUND_EXCEEDED,
  NH_ERR_NON_CONSTANT_ENTRIES,
  NH_ERR_SYSTEM_MISMATCH,
  NH_ERR_OVERFLOW,
  NH_ERR_INVALID_ARGUMENT,
  NH_ERR_EXAMPLE_MISMATCH,
  NH_ERR_INTERNAL
} nh_status;

/* Stable name of a status code, e.g. "EndpointMismatch". */
const char* nh_status_name(nh_status status);

/* Detail message of the most recent failure on this thread. */
const char* nh_last_error(void);

void nh_string_free(char* s);

/* Builds a system from a JSON definition:
 * {"name": ..., "generators": [...], "cartan": [[...]],
 *  "coxeter_matrix": [[...]]}   (coxeter_matrix optional; entries are
 * integers >= 1 or the string "inf"). */
nh_status nh_system_from_json(const char* json_text, nh_system** out);

/* Bundled systems: A1..A11, B2, G2, D4, A1~. */
nh_status nh_system_builtin(const char* name, nh_system** out);

/* JSON array of the bundled system names. */
nh_status nh_builtin_names(char** out_json);

void nh_system_free(nh_system* sys);
int nh_system_rank(const nh_system* sys);

/* Words are space- or comma-separated generator names; bit strings are
 * {0,1}-strings whose length matches the word. */

/* Demazure (star) product of a word: canonical word and length. */
nh_status nh_demazure(const nh_system* sys, const char* word, char** out_json);

/* Subexpressions of `word` with endpoint `target`, in lexicographic
 * bits order. defect/max_defect may be NULL (no constraint). */
nh_status nh_enumerate(const nh_system* sys, const char* word, const char* target, int no_d1,
                       const long long* defect, const long long* max_defect, char** out_json);

/* Intersection-form entry d(e1, e2), optionally cross-checked against
 * the delta-basis oracle. oracle_bound 0 selects the default (12). */
nh_status nh_pair(const nh_system* sys, const char* word, const char* bits1, const char* bits2,
                  int with_oracle, unsigned oracle_bound, char** out_json);

/* Gram matrix of all no-D1 subexpressions for `target` (optionally of
 * one exact defect), with integer specialization, determinant,
 * elementary divisors and torsion primes when all entries are
 * constant. */
nh_status nh_gram(const nh_system* sys, const char* word, const char* target,
                  const long long* defect, char** out_json);

/* Compares Bott-Samelson coefficients with defect generating
 * functions over the full support of the product. */
nh_status nh_deodhar(const nh_system* sys, const char* word, char** out_json);

/* Bundled worked examples: ks-s8, braden-s8, braden-d4, s12,
 * dihedral-sts. Recomputes the result and diffs it against the stored
 * value; returns NH_ERR_EXAMPLE_MISMATCH when the diff is nonempty. */
nh_status nh_example(const char* name, char** out_json);
nh_status nh_example_names(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* NILHECKE_H */
