/*
 * C interface to libdihedral: dimensions of the isotypic components of the
 * polynomial ring under the permutation action of the dihedral group D_n,
 * their generating functions, and the printed-closed-form comparison report.
 *
 * Every call returns a dr_status. On failure a message describing the last
 * error on the calling thread is available from dr_last_error(). Handles
 * (dr_series, dr_report) are opaque, immutable once created and must be
 * released with their matching *_free function.
 */
#ifndef DIHEDRAL_DIHEDRAL_H
#define DIHEDRAL_DIHEDRAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIHEDRAL_BUILDING)
#    define DR_API __declspec(dllexport)
#  else
#    define DR_API __declspec(dllimport)
#  endif
#else
#  define DR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dr_status {
    DR_OK = 0,
    DR_ERR_INVALID_ARGUMENT = 1, /* bad n, d, order or character */
    DR_ERR_CAP_EXCEEDED = 2,     /* monomial basis larger than the rank-oracle cap */
    DR_ERR_OVERFLOW = 3,         /* exact result does not fit in int64_t */
    DR_ERR_BUFFER_TOO_SMALL = 4, /* output text buffer too short; nothing written */
    DR_ERR_INTERNAL = 5          /* inconsistent exact computation; a bug */
} dr_status;

typedef enum dr_method {
    DR_METHOD_CLOSED_FORM = 0,
    DR_METHOD_CHAR_SUM = 1,
    DR_METHOD_RANK = 2
} dr_method;

typedef enum dr_char_kind {
    DR_CHAR_LINEAR = 0, /* chi_1 .. chi_4, index = 1..4 */
    DR_CHAR_TWO_DIM = 1 /* psi_h, index = h */
} dr_char_kind;

typedef struct dr_char {
    int32_t kind; /* dr_char_kind */
    int64_t index;
} dr_char;

typedef struct dr_series dr_series;
typedef struct dr_report dr_report;

typedef struct dr_report_entry {
    const char* label;       /* owned by the report */
    const char* expression;  /* owned by the report */
    int64_t first_divergence; /* -1 when printed and expected agree */
    size_t divergence_count;
    int printed_is_integral;  /* 1 when every printed coefficient is an integer */
} dr_report_entry;

#define DR_DEFAULT_CAP 300

DR_API const char* dr_version(void);
DR_API const char* dr_status_string(dr_status status);
DR_API const char* dr_last_error(void);

/* "chi1".."chi4" or "psi:<h>", validated against n. */
DR_API dr_status dr_char_parse(int64_t n, const char* text, dr_char* out);
/* Writes the canonical name; *needed (if non-null) receives strlen + 1. */
DR_API dr_status dr_char_name(dr_char chi, char* buf, size_t capacity, size_t* needed);
DR_API int dr_char_degree(dr_char chi);
/* Irreducible characters of D_n in canonical order. With out == NULL only
 * *count is set. */
DR_API dr_status dr_irreducible_characters(int64_t n, dr_char* out, size_t capacity,
                                           size_t* count);

DR_API dr_status dr_monomial_count(int64_t n, int64_t d, int64_t* out);

/* dim H_d(D_n, chi). cap only applies to DR_METHOD_RANK (0 selects
 * DR_DEFAULT_CAP). */
DR_API dr_status dr_dim(int64_t n, int64_t d, dr_char chi, dr_method method, size_t cap,
                        int64_t* out);

/* Generating function coefficients 0..order. */
DR_API dr_status dr_series_generating(int64_t n, dr_char chi, int64_t order, dr_series** out);
DR_API int64_t dr_series_order(const dr_series* series);
/* Coefficient as "p" or "p/q". */
DR_API dr_status dr_series_coeff(const dr_series* series, int64_t degree, char* buf,
                                 size_t capacity, size_t* needed);
DR_API dr_status dr_series_coeff_int(const dr_series* series, int64_t degree, int64_t* out);
DR_API void dr_series_free(dr_series* series);

/* Printed closed forms expanded and compared against the dimensions. */
DR_API dr_status dr_report_create(int64_t n, int64_t order, dr_report** out);
DR_API size_t dr_report_size(const dr_report* report);
DR_API dr_status dr_report_get(const dr_report* report, size_t i, dr_report_entry* out);
/* Coefficient of the printed (which = 0) or expected (which = 1) series. */
DR_API dr_status dr_report_coeff(const dr_report* report, size_t i, int which, int64_t degree,
                                 char* buf, size_t capacity, size_t* needed);
DR_API void dr_report_free(dr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DIHEDRAL_DIHEDRAL_H */
