#ifndef CPT_H
#define CPT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by every function.
 */
typedef enum CptStatus {
  CPT_STATUS_OK = 0,
  CPT_STATUS_NULL_POINTER = 1,
  CPT_STATUS_INVALID_UTF8 = 2,
  CPT_STATUS_PARSE = 3,
  CPT_STATUS_UNSUPPORTED = 4,
  CPT_STATUS_LIMIT_EXCEEDED = 5,
  CPT_STATUS_OUT_OF_RANGE = 6,
  CPT_STATUS_INTERNAL = 7,
  CPT_STATUS_PANIC = 8,
} CptStatus;

/**
 * Classification of one field: septet, sign vector, group type and table.
 */
typedef struct CptClassification CptClassification;

/**
 * Outcome of replaying the embedded reference tables.
 */
typedef struct CptVerifyReport CptVerifyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`). Returns the full message length in bytes.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t cpt_last_error(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cpt_version(void);

/**
 * Classifies `field` (`l=3/2`, `k=3,r=2`, ...) and stores a new handle in `out`.
 * `dim_cap` bounds the matrix dimension; 0 selects the default.
 *
 * # Safety
 * `field` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CptStatus cpt_classify(const char *field, size_t dim_cap, struct CptClassification **out);

/**
 * Releases a handle from [`cpt_classify`]. Null is ignored.
 *
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void cpt_classification_free(struct CptClassification *h);

/**
 * Group type name (`D4xZ2`, `Q4xZ2`, ...), valid while the handle lives.
 *
 * # Safety
 * `h` must be a live handle.
 */
const char *cpt_classification_group_type(const struct CptClassification *h);

/**
 * Number of Clifford generators and the matrix dimension.
 *
 * # Safety
 * `h` must be a live handle; outputs must be valid pointers.
 */
enum CptStatus cpt_classification_dims(const struct CptClassification *h,
                                       size_t *generators,
                                       size_t *matrix_dim);

/**
 * Writes the seven squares `W², E², C², Π², K², S², F²` (each +1 or -1).
 *
 * # Safety
 * `h` must be a live handle and `signs` point to 7 writable `int8_t`.
 */
enum CptStatus cpt_classification_sign_vector(const struct CptClassification *h, int8_t *signs);

/**
 * Septet member `index` (0..7 for W, E, C, Π, K, S, F) as a sign and a
 * generator bitmask (bit `j-1` set when `ℰ_j` occurs).
 *
 * # Safety
 * `h` must be a live handle; outputs must be valid pointers.
 */
enum CptStatus cpt_classification_member(const struct CptClassification *h,
                                         size_t index,
                                         int8_t *sign,
                                         uint32_t *mask);

/**
 * Cell `(row, col)` of the signed multiplication table, rows and columns
 * ordered 1, W, E, C, Π, K, S, F.
 *
 * # Safety
 * `h` must be a live handle; outputs must be valid pointers.
 */
enum CptStatus cpt_classification_cell(const struct CptClassification *h,
                                       size_t row,
                                       size_t col,
                                       int8_t *sign,
                                       uint32_t *mask);

/**
 * Copies the canonical field name into `buf` (NUL-terminated, truncated to
 * `len`). Returns the full name length in bytes.
 *
 * # Safety
 * `h` must be a live handle; `buf` must be null or point to `len` writable bytes.
 */
size_t cpt_classification_field(const struct CptClassification *h, char *buf, size_t len);

/**
 * Regenerates the embedded reference tables and stores the report in `out`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CptStatus cpt_verify(struct CptVerifyReport **out);

/**
 * Comparison, difference and unexplained-difference counts.
 *
 * # Safety
 * `h` must be a live handle; outputs must be valid pointers.
 */
enum CptStatus cpt_verify_counts(const struct CptVerifyReport *h,
                                 size_t *comparisons,
                                 size_t *diffs,
                                 size_t *unexplained);

/**
 * True when every difference is covered by a proven erratum.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
bool cpt_verify_passed(const struct CptVerifyReport *h);

/**
 * Releases a handle from [`cpt_verify`]. Null is ignored.
 *
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void cpt_verify_free(struct CptVerifyReport *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CPT_H */
