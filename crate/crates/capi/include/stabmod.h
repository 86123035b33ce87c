/* C interface to the stable module category toolkit. */

#ifndef STABMOD_H
#define STABMOD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `Ok` means the requested value was computed and written;
 * everything else leaves outputs untouched and records a message readable
 * via `sm_last_error`.
 */
typedef enum SmStatus {
  /**
   * Computed; the out-parameter holds the result.
   */
  SmStatus_Ok = 0,
  /**
   * Input was syntactically or semantically unusable.
   */
  SmStatus_InvalidInput = 2,
  /**
   * An internal cross-check failed; the result cannot be trusted.
   */
  SmStatus_Internal = 3,
  /**
   * A required pointer argument was null.
   */
  SmStatus_NullPointer = 4,
  /**
   * An input string was not valid UTF-8.
   */
  SmStatus_BadUtf8 = 5,
} SmStatus;

/**
 * Opaque computation context holding the ground field.
 */
typedef struct SmContext SmContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Most recent error message on this thread, or null if the last call
 * succeeded. The pointer stays valid until the next failing call on the
 * same thread; do not free it.
 */
const char *sm_last_error(void);

/**
 * Library version as a static string; do not free it.
 */
const char *sm_version(void);

/**
 * Create a context over GF(prime). Writes the handle to `out`.
 *
 * # Safety
 * `out` must be a valid pointer to a pointer-sized slot.
 */
enum SmStatus sm_context_new(uint64_t prime, struct SmContext **out);

/**
 * Release a context created by `sm_context_new`. Null is a no-op.
 *
 * # Safety
 * `ctx` must be null or a pointer previously returned by `sm_context_new`
 * that has not been freed yet.
 */
void sm_context_free(struct SmContext *ctx);

/**
 * Release a string returned through any `out` parameter. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer received from this library that has not
 * been freed yet.
 */
void sm_string_free(char *s);

/**
 * Abelianness verdict for the path algebra of the quiver document.
 *
 * # Safety
 * `ctx` must be a live context; `quiver_json` a NUL-terminated string;
 * `out` a valid slot.
 */
enum SmStatus sm_classify(const struct SmContext *ctx, const char *quiver_json, char **out);

/**
 * Abelianness verdict for a line quiver given by vertex count and
 * orientation string ('<' or '>' per edge).
 *
 * # Safety
 * As for `sm_classify`; `orientation` must be NUL-terminated.
 */
enum SmStatus sm_classify_an(const struct SmContext *ctx,
                             uintptr_t n,
                             const char *orientation,
                             char **out);

/**
 * Verdicts for every orientation of the line quiver on `n` vertices, as a
 * JSON array.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_census(const struct SmContext *ctx, uintptr_t n, char **out);

/**
 * Hom-table match between the stable category of the equioriented line on
 * `n` vertices and the module category on `n - 1` vertices.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_equivalence(const struct SmContext *ctx, uintptr_t n, char **out);

/**
 * Run a named property suite; the report embeds the seed, field, and any
 * counterexamples (`passed` is false when one was found).
 *
 * # Safety
 * As for `sm_classify`; `suite` must be NUL-terminated.
 */
enum SmStatus sm_verify(const struct SmContext *ctx,
                        const char *suite,
                        uintptr_t trials,
                        uint64_t seed,
                        char **out);

/**
 * Torsion submodule of the representation document, with its inclusion.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_torsion(const struct SmContext *ctx, const char *rep_json, char **out);

/**
 * Torsion-free quotient of the representation document, with the canonical
 * projection.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_sharp(const struct SmContext *ctx, const char *rep_json, char **out);

/**
 * Does the morphism factor through a projective module?
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_is_zero(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Is the stable class of the morphism a monomorphism?
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_is_mono(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Is the stable class of the morphism an epimorphism?
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_is_epi(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Does the stable class of the morphism admit a left inverse?
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_is_split_mono(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Does the stable class of the morphism admit a right inverse?
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_is_split_epi(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Is the stable class of the morphism an isomorphism?
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_is_iso(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Is the stable class of the morphism a cokernel? The morphism must be a
 * stable epimorphism.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_normal_epi(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Dimensions of the stable hom group between the morphism's endpoints, plus
 * the class of the morphism in quotient coordinates.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_stable_hom(const struct SmContext *ctx, const char *morphism_json, char **out);

/**
 * Exhibit the stable class of the morphism as a kernel. Only available when
 * the injective envelope of the regular module is projective.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_normal_mono_cert(const struct SmContext *ctx,
                                  const char *morphism_json,
                                  char **out);

/**
 * Search the quiver for a monomorphism that is also an epimorphism but not
 * an isomorphism. Always reports; `exists` is false where none can exist.
 *
 * # Safety
 * As for `sm_classify`.
 */
enum SmStatus sm_witness(const struct SmContext *ctx, const char *quiver_json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STABMOD_H */
