#ifndef TREECERT_H
#define TREECERT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TcStatus {
  TC_STATUS_OK = 0,
  TC_STATUS_NULL_POINTER = 1,
  TC_STATUS_INVALID_UTF8 = 2,
  TC_STATUS_PARSE = 3,
  TC_STATUS_ARITHMETIC = 4,
  TC_STATUS_INVALID_ARGUMENT = 5,
  TC_STATUS_IO = 6,
  TC_STATUS_PANIC = 7,
} TcStatus;

/**
 * A 2×2 matrix over 𝔽_p(x).
 */
typedef struct TcMatrix TcMatrix;

/**
 * An element of 𝔽_p(x).
 */
typedef struct TcRational TcRational;

/**
 * A check report.
 */
typedef struct TcReport TcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on this thread.
 */
const char *tc_last_error(void);

void tc_clear_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library and not yet freed.
 */
void tc_string_free(char *s);

/**
 * Parses `text` as an element of 𝔽_p(x).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_rational_parse(uint64_t p, const char *text, struct TcRational **out);

/**
 * Canonical text form; free with [`tc_string_free`]. Null on a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
char *tc_rational_to_string(const struct TcRational *r);

/**
 * Valuation at infinity (minus the degree). `*is_infinite` is set to 1 for
 * zero, in which case `*out` is left untouched.
 *
 * # Safety
 * `r` must be a live handle; the output pointers must be writable.
 */
enum TcStatus tc_rational_valuation(const struct TcRational *r, int64_t *out, int *is_infinite);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void tc_rational_free(struct TcRational *r);

/**
 * Parses `"a;b;c;d"` (row-major) over 𝔽_p(x).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_matrix_parse(uint64_t p, const char *text, struct TcMatrix **out);

/**
 * Classifies an SL₂ matrix on the Bruhat–Tits tree. `*translation_length`
 * is 0 for elliptic elements.
 *
 * # Safety
 * `m` must be a live handle; `translation_length` must be writable.
 */
enum TcStatus tc_matrix_classify(const struct TcMatrix *m, uint64_t *translation_length);

/**
 * Minimum of `d(v, m·v)` over the ball of the given radius around the base
 * vertex.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_matrix_min_displacement(const struct TcMatrix *m, uint32_t radius, uint64_t *out);

/**
 * # Safety
 * `m` must be null or a handle not yet freed.
 */
void tc_matrix_free(struct TcMatrix *m);

/**
 * Builds the standard surface-group representation over 𝔽_p(x, y) and runs
 * the family, discreteness and relation checks.
 *
 * # Safety
 * `out` must be writable.
 */
enum TcStatus tc_surface_verify(uint64_t p, struct TcReport **out);

/**
 * Tree-count bounds for the RAAG whose defining graph is given in the edge
 * list format (`vertices n`, then `u v` per line).
 *
 * # Safety
 * `graph` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_raag_plan(const char *graph, uint64_t *lower, uint64_t *upper, int *exact);

/**
 * Coverage certificate for reduced words up to `maxlen`: `group` 0 is
 * ⟨s, x, y | [x, y], sxs⁻¹ = y⟩ on three trees, 1 the genus-2 surface
 * group on two.
 *
 * # Safety
 * `out` must be writable.
 */
enum TcStatus tc_bass_serre_certify(int group, uint32_t maxlen, struct TcReport **out);

/**
 * Runs a `treecert` command line (`argv[0]` is the program name). Writes
 * the exit code and the rendered output.
 *
 * # Safety
 * `argv` must point to `argc` nul-terminated strings; outputs must be writable.
 */
enum TcStatus tc_cli_run(int argc, const char *const *argv, int *exit_code, char **output);

/**
 * 1 if every check passed, 0 otherwise (including a null handle).
 *
 * # Safety
 * `r` must be null or a live handle.
 */
int tc_report_passed(const struct TcReport *r);

/**
 * Looks up a named counter.
 *
 * # Safety
 * `r` must be a live handle, `name` a nul-terminated string, `out` writable.
 */
enum TcStatus tc_report_counter(const struct TcReport *r, const char *name, int64_t *out);

/**
 * Plain-text rendering; free with [`tc_string_free`].
 *
 * # Safety
 * `r` must be null or a live handle.
 */
char *tc_report_text(const struct TcReport *r);

/**
 * JSON-lines rendering; free with [`tc_string_free`].
 *
 * # Safety
 * `r` must be null or a live handle.
 */
char *tc_report_json(const struct TcReport *r);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void tc_report_free(struct TcReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TREECERT_H */
