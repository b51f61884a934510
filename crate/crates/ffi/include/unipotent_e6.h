#ifndef UNIPOTENT_E6_H
#define UNIPOTENT_E6_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Ue6Case {
  UE6_CASE_UNTWISTED = 0,
  UE6_CASE_TWISTED = 1,
} Ue6Case;

typedef enum Ue6Status {
  UE6_STATUS_OK = 0,
  UE6_STATUS_NULL_POINTER = 1,
  UE6_STATUS_INVALID_ARGUMENT = 2,
  UE6_STATUS_IO = 3,
  UE6_STATUS_PARSE = 4,
  UE6_STATUS_REJECTED = 5,
  UE6_STATUS_CONSISTENCY = 6,
  UE6_STATUS_MISSING = 7,
  UE6_STATUS_PANIC = 8,
} Ue6Status;

// Opaque handle holding the data directory and per-case results.
typedef struct Ue6Context Ue6Context;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a context reading data files from `data_dir`.
//
// # Safety
// `data_dir` must be a NUL-terminated string; `out` must be writable.
enum Ue6Status ue6_context_new(const char *data_dir, struct Ue6Context **out);

// # Safety
// `ctx` must come from [`ue6_context_new`] and not be used afterwards.
void ue6_context_free(struct Ue6Context *ctx);

// Replaces the sample values of `q` used for the sign test. Each must be a
// power of 3 that is at least 3. Discards cached results.
//
// # Safety
// `samples` must point to `len` readable values.
enum Ue6Status ue6_context_set_q_samples(struct Ue6Context *ctx,
                                         const int64_t *samples,
                                         size_t len);

// Writes the determined sign `ξ` (`1` or `-1`) to `out`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum Ue6Status ue6_determine_xi(struct Ue6Context *ctx, int32_t case_, int32_t *out);

// `m(u₀, c)` as a string such as `1*q^6 + xi*(2*q^6)`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum Ue6Status ue6_m_polynomial(struct Ue6Context *ctx, int32_t case_, char **out);

// The value table at `u₀` as TSV (`label`, `value`, `value_at_q3`).
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum Ue6Status ue6_unipotent_values_tsv(struct Ue6Context *ctx, int32_t case_, char **out);

// The full verification report for both cases as JSON. A report with
// failing checks is still returned, with status
// [`Ue6Status::Consistency`].
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum Ue6Status ue6_full_report_json(struct Ue6Context *ctx, char **out);

// Fourier matrix of `M(G)` as TSV for `group` in `trivial`, `z2`, `z3`,
// `s3`.
//
// # Safety
// `group` must be a NUL-terminated string and `out` writable.
enum Ue6Status ue6_fourier_matrix_tsv(const char *group, char **out);

// # Safety
// `s` must come from this library and not be used afterwards.
void ue6_string_free(char *s);

// Message of the last failed call on this thread; empty after a success.
// Valid until the next call on the same thread.
const char *ue6_last_error(void);

// Library version, a static string.
const char *ue6_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNIPOTENT_E6_H */
