#ifndef HIRZEBRUCH_H
#define HIRZEBRUCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HzRing {
  HZ_RING_CLASSICAL = 0,
  HZ_RING_QH = 1,
  HZ_RING_BATYREV = 2,
} HzRing;

/**
 * Result of every fallible call.
 */
typedef enum HzStatus {
  HZ_STATUS_OK = 0,
  HZ_STATUS_NULL_ARGUMENT = 1,
  HZ_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed symbol list, class or JSON.
   */
  HZ_STATUS_PARSE = 3,
  /**
   * Odd or negative `kappa`, unsupported factors and similar.
   */
  HZ_STATUS_DOMAIN = 4,
  /**
   * Two computations that must agree did not.
   */
  HZ_STATUS_MISMATCH = 5,
  HZ_STATUS_PANIC = 6,
} HzStatus;

/**
 * Opaque completed presentation.
 */
typedef struct HzPresentation HzPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next library call on the same thread.
 */
const char *hz_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hz_string_free(char *s);

/**
 * Quantum cohomology presentation of `F_2k`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HzStatus hz_qh_presentation_new(uint32_t k, struct HzPresentation **out);

/**
 * Batyrev presentation of `F_kappa`; `kappa` must be even.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HzStatus hz_batyrev_presentation_new(uint32_t kappa, struct HzPresentation **out);

/**
 * # Safety
 * `p` must come from a `hz_*_presentation_new` call and not have been freed.
 */
void hz_presentation_free(struct HzPresentation *p);

/**
 * Number of completed rewrite rules.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
size_t hz_presentation_rule_count(const struct HzPresentation *p);

/**
 * Completed rules, one `lead -> tail` per line.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum HzStatus hz_presentation_rules(const struct HzPresentation *p, char **out);

/**
 * Normal form of an element given as a JSON term list
 * `[{"coeff": c, "z": [e1, e2, e3, e4], "q": [a, b]}, ...]`; the result uses
 * the same encoding.
 *
 * # Safety
 * `p` must be a live handle, `terms_json` a nul-terminated string and `out`
 * a valid pointer.
 */
enum HzStatus hz_presentation_normal_form(const struct HzPresentation *p,
                                          const char *terms_json,
                                          char **out);

/**
 * `Φ^{(r,s)}_{0,m}(insertions..., gamma)` on `F_2k`. `insertions` is a
 * comma-separated symbol list (`Z1`..`Z4`, `pt`, `1`, `X^n`), `gamma` is
 * `"1"` or `"pt"`.
 *
 * # Safety
 * String arguments must be nul-terminated and `out` a valid pointer.
 */
enum HzStatus hz_f2k_invariant(uint32_t k,
                               int64_t r,
                               int64_t s,
                               const char *insertions,
                               const char *gamma,
                               int64_t *out);

/**
 * Product of the comma-separated `factors` on `F_kappa`, written as JSON
 * terms. `Qh` gives the quantum product in the classical basis (the
 * monomial `Z1*Z4` is the point class) and needs at least two factors;
 * `Qh` and `Batyrev` need even `kappa`.
 *
 * # Safety
 * `factors` must be nul-terminated and `out` a valid pointer.
 */
enum HzStatus hz_product(enum HzRing ring, uint32_t kappa, const char *factors, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HIRZEBRUCH_H */
