#ifndef RANKMETRIC_RANKMETRIC_H
#define RANKMETRIC_RANKMETRIC_H

/* C interface to the rankmetric library. Handles are opaque; every call
 * returns an rm_status, and on failure rm_last_error() describes the cause
 * for the calling thread. Strings returned through char** are owned by the
 * caller and released with rm_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RM_API __declspec(dllexport)
#else
#define RM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rm_status {
  RM_OK = 0,
  RM_VERIFY_FAILED = 1,
  RM_INPUT_ERROR = 2,
  RM_BUDGET_EXCEEDED = 3,
  RM_INTERNAL_ERROR = 4
} rm_status;

typedef enum rm_format { RM_TEXT = 0, RM_JSON = 1 } rm_format;

typedef struct rm_field rm_field;
typedef struct rm_code rm_code;

typedef struct rm_options {
  uint64_t budget;         /* maximum elements per exhaustive scan */
  unsigned threads;        /* worker threads; never changes results */
  uint64_t census_budget;  /* maximum subspaces in a density census */
} rm_options;

RM_API void rm_options_init(rm_options* opt);

RM_API const char* rm_last_error(void);
RM_API const char* rm_status_name(rm_status status);
RM_API void rm_string_free(char* s);

/* Fields: GF(p^e) with the default modulus. */
RM_API rm_status rm_field_create(unsigned p, unsigned e, rm_field** out);
RM_API void rm_field_free(rm_field* f);
RM_API uint32_t rm_field_order(const rm_field* f);
RM_API rm_status rm_field_describe(const rm_field* f, char** out);

/* Codes. Entries are row-major, count matrices of n x m field elements
 * encoded as integers (sum of c_i p^i). */
RM_API rm_status rm_code_from_generators(const rm_field* f, size_t n, size_t m, size_t count, const uint32_t* entries, rm_code** out);
RM_API rm_status rm_code_parse(const char* text, rm_code** out);
RM_API rm_status rm_code_load(const char* path, rm_code** out);
RM_API void rm_code_free(rm_code* c);
RM_API size_t rm_code_dim(const rm_code* c);
RM_API size_t rm_code_rows(const rm_code* c);
RM_API size_t rm_code_cols(const rm_code* c);
RM_API uint32_t rm_code_field_order(const rm_code* c);
RM_API rm_status rm_code_print(const rm_code* c, char** out);
RM_API rm_status rm_code_dual(const rm_code* c, rm_code** out);
RM_API int rm_code_equal(const rm_code* a, const rm_code* b);

/* Rank distribution as decimal strings: out[i] for i = 0..n, freed with
 * rm_string_free each and the array with rm_string_array_free. */
RM_API rm_status rm_rank_distribution(const rm_code* c, const rm_options* opt, char*** out, size_t* length);
RM_API void rm_string_array_free(char** arr, size_t length);
RM_API rm_status rm_minimum_distance(const rm_code* c, const rm_options* opt, size_t* out);
RM_API rm_status rm_covering_radius(const rm_code* c, const rm_options* opt, size_t* out);

/* Reports, rendered as text or JSON. */
RM_API rm_status rm_analyze(const rm_code* c, const rm_options* opt, rm_format fmt, char** out);
RM_API rm_status rm_covering_report(const rm_code* c, const rm_options* opt, rm_format fmt, char** out);
/* distribution: comma-separated W_0..W_n. */
RM_API rm_status rm_macwilliams(const char* distribution, size_t n, size_t m, uint64_t q, rm_format fmt, char** out);
RM_API rm_status rm_density(uint64_t q, size_t n, size_t m, size_t d, int census, size_t truncation, const rm_options* opt, rm_format fmt,
                            char** out);

/* Generators write a complete code file. */
RM_API rm_status rm_mrd_generate(unsigned p, unsigned e, size_t n, size_t m, size_t d, char** out);
/* side: "column" (U <= F_q^n) or "row" (U <= F_q^m, n = m only); basis holds
 * dim_u vectors of the matching length. */
RM_API rm_status rm_anticode_generate(unsigned p, unsigned e, size_t n, size_t m, const char* side, size_t dim_u, const uint32_t* basis,
                                      char** out);

/* level: "desk" or "exhaustive". Returns RM_VERIFY_FAILED when a check
 * fails; the report is still written. dump_dir may be NULL. */
RM_API rm_status rm_verify(const char* level, int mutate_transform, const char* dump_dir, rm_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
