/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef DEZA_H
#define DEZA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum DezaStatus {
  DEZA_STATUS_OK = 0,
  DEZA_STATUS_NULL_POINTER = 1,
  DEZA_STATUS_INVALID_PARAMETER = 2,
  DEZA_STATUS_INVALID_ARGUMENT = 3,
  DEZA_STATUS_PARSE = 4,
  DEZA_STATUS_OVERFLOW = 5,
  DEZA_STATUS_NOT_REGULAR = 6,
  DEZA_STATUS_NOT_CONNECTED = 7,
  DEZA_STATUS_MORE_THAN_TWO_VALUES = 8,
  DEZA_STATUS_CHILDREN_UNDEFINED = 9,
  DEZA_STATUS_PRECONDITION_VIOLATION = 10,
  DEZA_STATUS_CONSTRUCTION = 11,
  DEZA_STATUS_INTERNAL_INCONSISTENCY = 12,
  DEZA_STATUS_UNSUPPORTED_SIZE = 13,
  DEZA_STATUS_NOT_FOUND = 14,
  DEZA_STATUS_PANIC = 15,
  DEZA_STATUS_OTHER = 16,
} DezaStatus;

// Selects which switched matrix is returned.
typedef enum DezaVariant {
  DEZA_VARIANT_N1 = 1,
  DEZA_VARIANT_N2 = 2,
} DezaVariant;

// Selects the generalised switching block condition.
typedef enum DezaGdssMode {
  // Strongly regular parent, `P11 M12 M22 = M12 M22`.
  DEZA_GDSS_MODE_GDSS1 = 1,
  // Deza parent with strongly regular children, `P11 M11 M12 = M11 M12`.
  DEZA_GDSS_MODE_GDSS2 = 2,
} DezaGdssMode;

// A simple undirected graph.
typedef struct DezaGraph DezaGraph;

// A permutation of `{0, .., n - 1}`.
typedef struct DezaPermutation DezaPermutation;

// Distinct eigenvalues with multiplicities.
typedef struct DezaSpectrum DezaSpectrum;

typedef struct DezaParameters {
  size_t n;
  size_t k;
  size_t b;
  size_t a;
} DezaParameters;

typedef struct DezaSrgParameters {
  size_t n;
  size_t k;
  size_t lambda;
  size_t mu;
  double r;
  double s;
  size_t f;
  size_t g;
} DezaSrgParameters;

typedef struct DezaSpectrumEntry {
  double value;
  // True when `value` is an integer whose multiplicity was certified exactly.
  bool certified;
  int64_t exact;
  size_t multiplicity;
} DezaSpectrumEntry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread; empty after a
// successful call. Valid until the next call on the same thread.
const char *deza_last_error_message(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void deza_string_free(char *s);

// # Safety
// `out` must be valid for writing a pointer.
enum DezaStatus deza_graph_lattice(size_t m, struct DezaGraph **out);

// # Safety
// `out` must be valid for writing a pointer.
enum DezaStatus deza_graph_triangular(size_t n, struct DezaGraph **out);

// # Safety
// `out` must be valid for writing a pointer.
enum DezaStatus deza_graph_rook_2xm(size_t m, struct DezaGraph **out);

// The strongly regular graph `(16, 10, 6, 6)`.
//
// # Safety
// `out` must be valid for writing a pointer.
enum DezaStatus deza_graph_clebsch_16_10(struct DezaGraph **out);

// Parses a nul-terminated graph6 string.
//
// # Safety
// `text` must be a valid C string and `out` valid for writing a pointer.
enum DezaStatus deza_graph_from_graph6(const char *text, struct DezaGraph **out);

// Writes a newly allocated graph6 string; release it with `deza_string_free`.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writing a pointer.
enum DezaStatus deza_graph_to_graph6(const struct DezaGraph *g, char **out);

// # Safety
// `g` must be null or a graph handle not yet freed.
void deza_graph_free(struct DezaGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t deza_graph_order(const struct DezaGraph *g);

// False for a null handle or out-of-range vertices.
//
// # Safety
// `g` must be null or a live graph handle.
bool deza_graph_has_edge(const struct DezaGraph *g, size_t u, size_t v);

// # Safety
// `g` must be a live graph handle and `out` valid for writing a pointer.
enum DezaStatus deza_graph_complement(const struct DezaGraph *g, struct DezaGraph **out);

// Fails with a recognition status when the graph is not a Deza graph.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writing.
enum DezaStatus deza_recognize_deza(const struct DezaGraph *g, struct DezaParameters *out);

// Sets `*is_srg`; `out` is written only when the graph is strongly regular.
//
// # Safety
// `g` must be a live graph handle; `out` and `is_srg` valid for writing.
enum DezaStatus deza_recognize_srg(const struct DezaGraph *g,
                                   struct DezaSrgParameters *out,
                                   bool *is_srg);

// # Safety
// `g` must be a live graph handle and `out` valid for writing.
enum DezaStatus deza_is_strictly_deza(const struct DezaGraph *g, bool *out);

// # Safety
// `image` must point to `len` readable values and `out` be valid for writing a pointer.
enum DezaStatus deza_permutation_new(const size_t *image, size_t len, struct DezaPermutation **out);

// # Safety
// `p` must be null or a permutation handle not yet freed.
void deza_permutation_free(struct DezaPermutation *p);

// Length of the permutation, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live permutation handle.
size_t deza_permutation_len(const struct DezaPermutation *p);

// Copies the image array into `buf`, which must hold `len` entries with
// `len` equal to the permutation length.
//
// # Safety
// `p` must be a live permutation handle and `buf` valid for `len` writes.
enum DezaStatus deza_permutation_image(const struct DezaPermutation *p, size_t *buf, size_t len);

// # Safety
// `g` and `p` must be live handles and `out` valid for writing.
enum DezaStatus deza_is_seidel_automorphism(const struct DezaGraph *g,
                                            const struct DezaPermutation *p,
                                            bool require_fpf,
                                            bool *out);

// The `index`-th Seidel automorphism in search order; `DEZA_STATUS_NOT_FOUND` past the end.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writing a pointer.
enum DezaStatus deza_seidel_search(const struct DezaGraph *g,
                                   bool require_fpf,
                                   size_t index,
                                   struct DezaPermutation **out);

// Dual Seidel switching: the graph of `P M`.
//
// # Safety
// `g` and `p` must be live handles and `out` valid for writing a pointer.
enum DezaStatus deza_dual_seidel_switch(const struct DezaGraph *g,
                                        const struct DezaPermutation *p,
                                        struct DezaGraph **out);

// Generalised switching on the induced subgraph on `subset` (in that order),
// with `p11` acting on subset positions.
//
// # Safety
// `g` and `p11` must be live handles, `subset` readable for `t` entries and
// `out` valid for writing a pointer.
enum DezaStatus deza_gdss_switch(const struct DezaGraph *g,
                                 const size_t *subset,
                                 size_t t,
                                 const struct DezaPermutation *p11,
                                 enum DezaVariant variant,
                                 enum DezaGdssMode mode,
                                 struct DezaGraph **out);

// The graph of `M + P`.
//
// # Safety
// `g` and `p` must be live handles and `out` valid for writing a pointer.
enum DezaStatus deza_add_permutation(const struct DezaGraph *g,
                                     const struct DezaPermutation *p,
                                     struct DezaGraph **out);

// The graph of `P (M + I)`.
//
// # Safety
// `g` and `p` must be live handles and `out` valid for writing a pointer.
enum DezaStatus deza_permutation_shift(const struct DezaGraph *g,
                                       const struct DezaPermutation *p,
                                       struct DezaGraph **out);

// # Safety
// `g` must be a live graph handle and `out` valid for writing a pointer.
enum DezaStatus deza_spectrum(const struct DezaGraph *g, struct DezaSpectrum **out);

// Number of distinct eigenvalues, or 0 for a null handle.
//
// # Safety
// `s` must be null or a live spectrum handle.
size_t deza_spectrum_len(const struct DezaSpectrum *s);

// Entries are in decreasing order of eigenvalue.
//
// # Safety
// `s` must be a live spectrum handle and `out` valid for writing.
enum DezaStatus deza_spectrum_entry(const struct DezaSpectrum *s,
                                    size_t i,
                                    struct DezaSpectrumEntry *out);

// # Safety
// `s` must be null or a spectrum handle not yet freed.
void deza_spectrum_free(struct DezaSpectrum *s);

// Canonical graph6 string; release it with `deza_string_free`.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writing a pointer.
enum DezaStatus deza_canonical_graph6(const struct DezaGraph *g, char **out);

// # Safety
// `g1` and `g2` must be live graph handles and `out` valid for writing.
enum DezaStatus deza_is_isomorphic(const struct DezaGraph *g1,
                                   const struct DezaGraph *g2,
                                   bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEZA_H */
