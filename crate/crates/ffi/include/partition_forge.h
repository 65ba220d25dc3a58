#ifndef PARTITION_FORGE_H
#define PARTITION_FORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  PF_STATUS_OK = 0,
  PF_STATUS_NULL_POINTER = 1,
  PF_STATUS_INVALID_ARGUMENT = 2,
  PF_STATUS_DOMAIN = 3,
  PF_STATUS_PARSE = 4,
  PF_STATUS_OUT_OF_RANGE = 5,
  PF_STATUS_PANIC = 6,
} PfStatus;

typedef enum {
  PF_FORM_P = 0,
  PF_FORM_Q = 1,
} PfForm;

typedef enum {
  /**
   * `n! [z^n] F`
   */
  PF_KIND_EGF = 0,
  /**
   * `[z^n] F`, only for `j = 0`
   */
  PF_KIND_OGF = 1,
} PfKind;

/**
 * Opaque parsed b-file.
 */
typedef struct PfBFile PfBFile;

/**
 * Opaque exact coefficient sequence.
 */
typedef struct PfSequence PfSequence;

typedef struct {
  size_t matched_prefix_length;
  size_t overlap_length;
  int64_t offset_applied;
  /**
   * Nonzero when a mismatch was found.
   */
  int32_t has_mismatch;
  int64_t mismatch_index;
} PfComparison;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *pf_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, not yet freed.
 */
void pf_string_free(char *s);

/**
 * Computes coefficients `0..=n` of `P` or `Q` for the triple `(i, j, k)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
PfStatus pf_sequence_new(uint32_t i,
                         uint32_t j,
                         uint32_t k,
                         PfForm f,
                         PfKind kind,
                         size_t n,
                         PfSequence **out);

/**
 * # Safety
 * `seq` must be null or a live handle from [`pf_sequence_new`].
 */
void pf_sequence_free(PfSequence *seq);

/**
 * Number of stored coefficients, or 0 for a null handle.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t pf_sequence_len(const PfSequence *seq);

/**
 * Decimal text of coefficient `index`.
 *
 * # Safety
 * `seq` must be a live handle and `out` valid for one write.
 */
PfStatus pf_sequence_value(const PfSequence *seq, size_t index, char **out);

/**
 * The whole sequence in b-file format.
 *
 * # Safety
 * `seq` must be a live handle and `out` valid for one write.
 */
PfStatus pf_sequence_to_bfile(const PfSequence *seq, char **out);

/**
 * Parses NUL-terminated b-file text.
 *
 * # Safety
 * `text` must be a valid C string and `out` valid for one write.
 */
PfStatus pf_bfile_parse(const char *text, PfBFile **out);

/**
 * # Safety
 * `b` must be null or a live handle from [`pf_bfile_parse`].
 */
void pf_bfile_free(PfBFile *b);

/**
 * Number of records, or 0 for a null handle.
 *
 * # Safety
 * `b` must be null or a live handle.
 */
size_t pf_bfile_len(const PfBFile *b);

/**
 * Compares `seq[n]` with the record at index `n + offset`.
 *
 * # Safety
 * Both handles must be live and `out` valid for one write.
 */
PfStatus pf_compare(const PfSequence *seq,
                    const PfBFile *reference,
                    int64_t offset,
                    PfComparison *out);

/**
 * Principal-branch Lambert W.
 *
 * # Safety
 * `out` must be valid for one write.
 */
PfStatus pf_lambert_w(double x, double *out);

/**
 * `w_n^2 / ln^2 n` with `w_n = W(e^gamma n)`, taking `ln n`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
PfStatus pf_kotesovec_ratio(double ln_n, double *out);

/**
 * First-order `log [z^n] F(z)`, taking `ln n`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
PfStatus pf_log_coeff_asymptotic(uint32_t i,
                                 uint32_t j,
                                 uint32_t k,
                                 PfForm f,
                                 double ln_n,
                                 double *out);

/**
 * Natural log of the closed-form coefficient estimate, taking `ln n`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
PfStatus pf_coeff_asymptotic_ln(uint32_t i,
                                uint32_t j,
                                uint32_t k,
                                PfForm f,
                                double ln_n,
                                double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARTITION_FORGE_H */
