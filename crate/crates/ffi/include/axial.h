#ifndef AXIAL_H
#define AXIAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  AXIAL_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  AXIAL_STATUS_NULL_POINTER = 1,
  /**
   * Well-formed input the operation cannot accept.
   */
  AXIAL_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Malformed JSON, rational literal or UTF-8.
   */
  AXIAL_STATUS_PARSE_ERROR = 3,
  AXIAL_STATUS_DIMENSION_MISMATCH = 4,
  AXIAL_STATUS_NOT_IDEMPOTENT = 5,
  AXIAL_STATUS_NOT_AN_AXIS = 6,
  /**
   * The requested value does not exist, e.g. an absent eigenvalue.
   */
  AXIAL_STATUS_NOT_FOUND = 7,
  /**
   * An internal invariant failed; the library state is still usable.
   */
  AXIAL_STATUS_PANIC = 99,
} AxialStatus;

/**
 * A finite-dimensional algebra given by rational structure constants.
 */
typedef struct AxialAlgebra AxialAlgebra;

/**
 * Classification of one idempotent.
 */
typedef struct AxialProfile AxialProfile;

/**
 * Entries of a verification run.
 */
typedef struct AxialReport AxialReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string.
 */
const char *axial_version(void);

/**
 * Message for the last failed call on this thread, or null when the last
 * status-returning call succeeded. Valid until the next status-returning
 * call on the same thread.
 */
const char *axial_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void axial_string_free(char *s);

/**
 * Parses an algebra from its JSON file format.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
AxialStatus axial_algebra_from_json(const char *json, AxialAlgebra **out);

/**
 * The two-dimensional algebra with axes of type `(lambda, 1 - lambda)`.
 *
 * # Safety
 * `lambda` must be a nul-terminated string; `out` must be writable.
 */
AxialStatus axial_algebra_dim2(const char *lambda, AxialAlgebra **out);

/**
 * The Matsuo algebra of a Fischer space given as JSON
 * (`{"points": [...], "lines": [[i, j, k], ...]}`).
 *
 * # Safety
 * `space_json` and `eta` must be nul-terminated strings; `out` must be
 * writable.
 */
AxialStatus axial_algebra_matsuo(const char *space_json, const char *eta, AxialAlgebra **out);

/**
 * JSON for a built-in Fischer space: `"line"` or `"s4"`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
AxialStatus axial_fischer_space_builtin(const char *name, char **out);

/**
 * # Safety
 * `algebra` must be null or a live handle from this library.
 */
void axial_algebra_free(AxialAlgebra *algebra);

/**
 * Dimension of the algebra, 0 for a null handle.
 *
 * # Safety
 * `algebra` must be null or a live handle.
 */
size_t axial_algebra_dim(const AxialAlgebra *algebra);

/**
 * # Safety
 * `algebra` must be a live handle; `out` must be writable.
 */
AxialStatus axial_algebra_to_json(const AxialAlgebra *algebra, char **out);

/**
 * Product `u * v`, written as a JSON array of rational strings.
 *
 * # Safety
 * `algebra` must be a live handle, `u` and `v` nul-terminated strings and
 * `out` writable.
 */
AxialStatus axial_algebra_multiply(const AxialAlgebra *algebra,
                                   const char *u,
                                   const char *v,
                                   char **out);

/**
 * Dimension of the subalgebra generated by a JSON array of elements.
 *
 * # Safety
 * `algebra` must be a live handle, `generators` a nul-terminated string and
 * `out` writable.
 */
AxialStatus axial_closure_dim(const AxialAlgebra *algebra, const char *generators, size_t *out);

/**
 * Classifies an idempotent. Fails with `AXIAL_STATUS_NOT_IDEMPOTENT` when
 * the element is not one; any idempotent, axis or not, yields a profile.
 *
 * # Safety
 * `algebra` must be a live handle, `axis` a nul-terminated string and `out`
 * writable.
 */
AxialStatus axial_classify(const AxialAlgebra *algebra, const char *axis, AxialProfile **out);

/**
 * # Safety
 * `profile` must be null or a live handle from this library.
 */
void axial_profile_free(AxialProfile *profile);

/**
 * False for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
bool axial_profile_is_primitive_axis(const AxialProfile *profile);

/**
 * False for a null handle.
 *
 * # Safety
 * `profile` must be null or a live handle.
 */
bool axial_profile_is_jordan_type(const AxialProfile *profile);

/**
 * Left eigenvalue `lambda`; `AXIAL_STATUS_NOT_FOUND` when absent.
 *
 * # Safety
 * `profile` must be a live handle and `out` writable.
 */
AxialStatus axial_profile_lambda(const AxialProfile *profile, char **out);

/**
 * Right eigenvalue `delta`; `AXIAL_STATUS_NOT_FOUND` when absent.
 *
 * # Safety
 * `profile` must be a live handle and `out` writable.
 */
AxialStatus axial_profile_delta(const AxialProfile *profile, char **out);

/**
 * Full classification as JSON, the same object `axial classify --json`
 * prints.
 *
 * # Safety
 * `profile` must be a live handle and `out` writable.
 */
AxialStatus axial_profile_to_json(const AxialProfile *profile, char **out);

/**
 * Runs every check for the given axes (a JSON array of elements), or for
 * all basis vectors when `axes` is null.
 *
 * # Safety
 * `algebra` must be a live handle, `axes` null or a nul-terminated string
 * and `out` writable.
 */
AxialStatus axial_verify(const AxialAlgebra *algebra, const char *axes, AxialReport **out);

/**
 * # Safety
 * `report` must be null or a live handle from this library.
 */
void axial_report_free(AxialReport *report);

/**
 * Number of entries, 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t axial_report_len(const AxialReport *report);

/**
 * Number of failed entries, 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t axial_report_failure_count(const AxialReport *report);

/**
 * True when every entry passed; false for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
bool axial_report_all_passed(const AxialReport *report);

/**
 * Entries as a JSON array of `{identity_id, passed, residual, ...}`.
 *
 * # Safety
 * `report` must be a live handle and `out` writable.
 */
AxialStatus axial_report_to_json(const AxialReport *report, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AXIAL_H */
