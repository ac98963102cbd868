#ifndef STERNBSD_H
#define STERNBSD_H

/*
 * C interface to libsternbsd.
 *
 * Every function returns an sbsd_status. Objects are opaque handles created by
 * a *_new / builder function and released with the matching *_free. On a
 * non-OK status, sbsd_last_error() returns a message for the calling thread
 * that stays valid until the next failing call on that thread.
 */

#include <stddef.h>
#include <stdint.h>
#include <stdio.h>

#if defined(_WIN32)
#  if defined(SBSD_BUILDING_LIBRARY)
#    define SBSD_API __declspec(dllexport)
#  else
#    define SBSD_API __declspec(dllimport)
#  endif
#else
#  define SBSD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbsd_status {
    SBSD_OK = 0,
    SBSD_ERR_INVALID_ARGUMENT = 1, /* null pointer, buffer too small, bad flag */
    SBSD_ERR_DOMAIN = 2,           /* input outside the operation's domain */
    SBSD_ERR_OVERFLOW = 3,         /* result exceeds 64-bit capacity */
    SBSD_ERR_CAPACITY = 4,         /* request exceeds the memory budget */
    SBSD_ERR_LIMIT = 5,            /* enumeration exceeded the caller's limit */
    SBSD_ERR_IO = 6,
    SBSD_ERR_FORMAT = 7,           /* malformed digit string or table file */
    SBSD_ERR_VERIFY = 8,           /* table disagrees with the Stern oracle */
    SBSD_ERR_INTERNAL = 9
} sbsd_status;

SBSD_API const char* sbsd_status_name(sbsd_status status);
SBSD_API const char* sbsd_last_error(void);

/* -- Stern polynomials ---------------------------------------------------- */

typedef struct sbsd_poly sbsd_poly;

SBSD_API sbsd_status sbsd_stern_of(uint64_t n, sbsd_poly** out);

/* sign: +1 for B_{2^a m + r}, -1 for B_{2^a m - r}. */
SBSD_API sbsd_status sbsd_schinzel_compose(unsigned a, uint64_t m, uint64_t r, int sign, sbsd_poly** out);

SBSD_API void sbsd_poly_free(sbsd_poly* p);

/* Number of stored coefficients; 0 for the zero polynomial. */
SBSD_API size_t sbsd_poly_length(const sbsd_poly* p);

/* Copies min(capacity, length) coefficients, low degree first. */
SBSD_API sbsd_status sbsd_poly_coeffs(const sbsd_poly* p, uint64_t* coeffs, size_t capacity, size_t* length);

/* SBSD_ERR_DOMAIN on the zero polynomial. */
SBSD_API sbsd_status sbsd_poly_degree(const sbsd_poly* p, size_t* degree);
SBSD_API sbsd_status sbsd_poly_leading_coefficient(const sbsd_poly* p, uint64_t* lc);

SBSD_API sbsd_status sbsd_poly_evaluate(const sbsd_poly* p, uint64_t t0, uint64_t* value);

/* -- NAF and NAF-intervals ------------------------------------------------ */

typedef struct sbsd_partition {
    unsigned k;
    uint64_t a;
    uint64_t b;
    uint64_t c;
    uint64_t midpoint;
    uint64_t upper;
    uint64_t len_outer;
    uint64_t len_mid;
} sbsd_partition;

typedef enum sbsd_block {
    SBSD_BLOCK_A = 0,
    SBSD_BLOCK_B = 1,
    SBSD_BLOCK_C = 2,
    SBSD_BLOCK_MIDPOINT = 3
} sbsd_block;

/* Digits least-significant first. A buffer of 65 digits always suffices. */
SBSD_API sbsd_status sbsd_naf_encode(uint64_t n, int8_t* digits, size_t capacity, size_t* length);
SBSD_API sbsd_status sbsd_naf_bitlength(uint64_t n, unsigned* k);
SBSD_API sbsd_status sbsd_interval(unsigned k, uint64_t* low, uint64_t* high);
SBSD_API sbsd_status sbsd_interval_length(unsigned k, uint64_t* length);
SBSD_API sbsd_status sbsd_partition_of(unsigned k, sbsd_partition* out);
SBSD_API sbsd_status sbsd_block_of(const sbsd_partition* p, uint64_t n, sbsd_block* block);
SBSD_API sbsd_status sbsd_sibling(uint64_t n, unsigned k, uint64_t* out);

/* -- Exhaustive enumeration ----------------------------------------------- */

typedef struct sbsd_reps sbsd_reps;

/* All i-digit BSD strings of n in lexicographic order (least-significant
 * digit compared first, -1 < 0 < 1). limit = 0 means the library default. */
SBSD_API sbsd_status sbsd_enumerate_bsd(int64_t n, unsigned i, uint64_t limit, sbsd_reps** out);
SBSD_API void sbsd_reps_free(sbsd_reps* reps);
SBSD_API size_t sbsd_reps_count(const sbsd_reps* reps);
SBSD_API unsigned sbsd_reps_width(const sbsd_reps* reps);
/* Copies the width() digits of representation `index`, least-significant first. */
SBSD_API sbsd_status sbsd_reps_get(const sbsd_reps* reps, size_t index, int8_t* digits, size_t capacity);

/* counts[l] = number of i-digit BSD strings of n with exactly l zeros, for
 * l = 0..i. `capacity` must be at least i + 1. */
SBSD_API sbsd_status sbsd_weight_distribution(int64_t n, unsigned i, uint64_t limit, uint64_t* counts,
                                              size_t capacity);

/* -- Interval tables ------------------------------------------------------ */

typedef struct sbsd_tables sbsd_tables;

enum {
    SBSD_COL_M = 1u << 0,
    SBSD_COL_Z = 1u << 1,
    SBSD_COL_DEG = 1u << 2,
    SBSD_COL_LC = 1u << 3,
    SBSD_COL_ALL = 0xfu
};

enum {
    SBSD_BUILD_PARALLEL = 1u << 0
};

/* Builds the requested columns for every n < a_{k_max+1}. */
SBSD_API sbsd_status sbsd_tables_build(unsigned k_max, unsigned columns, unsigned flags, sbsd_tables** out);
SBSD_API sbsd_status sbsd_tables_load_csv(const char* path, sbsd_tables** out);
SBSD_API void sbsd_tables_free(sbsd_tables* t);

SBSD_API unsigned sbsd_tables_k_max(const sbsd_tables* t);
SBSD_API unsigned sbsd_tables_columns(const sbsd_tables* t);
/* One past the largest covered n. */
SBSD_API uint64_t sbsd_tables_extent(const sbsd_tables* t);

/* Value of one column at n. SBSD_ERR_DOMAIN when the column is absent or n is
 * out of range. */
SBSD_API sbsd_status sbsd_tables_get(const sbsd_tables* t, unsigned column, uint64_t n, uint64_t* value);

/* Smallest n in I_k maximising M, and the maximum. */
SBSD_API sbsd_status sbsd_tables_interval_max_m(const sbsd_tables* t, unsigned k, uint64_t* n_star, uint64_t* m_star);

/* Writes the CSV cache for `columns` (a subset of the built columns). */
SBSD_API sbsd_status sbsd_tables_write_csv(const sbsd_tables* t, unsigned columns, FILE* stream);
/* Same, to a temporary file renamed over `path` on success. */
SBSD_API sbsd_status sbsd_tables_save_csv(const sbsd_tables* t, unsigned columns, const char* path);

/* Recomputes every built column for n < a_{depth+1} from Stern polynomials.
 * Returns SBSD_ERR_VERIFY on the first mismatch and stores its n. */
SBSD_API sbsd_status sbsd_tables_verify(const sbsd_tables* t, unsigned depth, uint64_t* mismatch_n);

/* F_1 = F_2 = 1. */
SBSD_API sbsd_status sbsd_fibonacci(unsigned index, uint64_t* value);

#ifdef __cplusplus
}
#endif

#endif /* STERNBSD_H */
