#ifndef HKCOUNT_H
#define HKCOUNT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HK_API __declspec(dllexport)
#else
#define HK_API __attribute__((visibility("default")))
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_INVALID_ARGUMENT = 1,
  HK_ERR_ORDER_EXCEEDED = 2,
  HK_ERR_NON_UNIT = 3,
  HK_ERR_UNSUPPORTED_WEIGHT = 4,
  HK_ERR_BRACKET_VALUATION = 5,
  HK_ERR_REPRESENTATIVE_RANGE = 6,
  HK_ERR_JACOBI_INDEX = 7,
  HK_ERR_NON_INTEGRAL = 8,
  HK_ERR_RANK_MISMATCH = 9,
  HK_ERR_SPACE_MISMATCH = 10,
  HK_ERR_ODD_ADJUNCTION = 11,
  HK_ERR_INVARIANT = 12,
  HK_ERR_IO = 13,
  HK_ERR_INTERNAL = 14
} hk_status;

typedef enum hk_method { HK_METHOD_JACOBI = 0, HK_METHOD_GAMMA0 = 1, HK_METHOD_BOTH = 2 } hk_method;
typedef enum hk_fano_quantity { HK_FANO_GENUS = 0, HK_FANO_DEGREE = 1 } hk_fano_quantity;
typedef enum hk_selftest_level { HK_SELFTEST_QUICK = 0, HK_SELFTEST_FULL = 1 } hk_selftest_level;

/* Result table. Every cell is a string; integers are decimal and fractions
   are "p/q". The last column is the value, earlier columns index it. */
typedef struct hk_table hk_table;

HK_API const char* hk_version(void);

/* Message of the most recent failure on the calling thread ("" if none). */
HK_API const char* hk_last_error(void);
HK_API const char* hk_status_name(hk_status status);

/* On failure *out is set to NULL, except for hk_selftest which returns
   HK_ERR_INVARIANT together with the full report when a check fails. */
HK_API hk_status hk_k3(int hmax, hk_table** out);
HK_API hk_status hk_k3two(int smax, hk_method method, hk_table** out);
HK_API hk_status hk_series(const char* name, int order, hk_table** out);
HK_API hk_status hk_jacobi(int qorder, hk_table** out);
HK_API hk_status hk_fano(hk_fano_quantity which, int via_euler, hk_table** out);
HK_API hk_status hk_selftest(hk_selftest_level level, hk_table** out);

HK_API size_t hk_table_columns(const hk_table* t);
HK_API size_t hk_table_rows(const hk_table* t);
HK_API const char* hk_table_column_name(const hk_table* t, size_t col);
/* NULL when out of range. */
HK_API const char* hk_table_cell(const hk_table* t, size_t row, size_t col);
HK_API void hk_table_free(hk_table* t);

/* Littlewood-Richardson memo persistence. A missing file is not an error;
   *loaded (may be NULL) reports whether anything was read. */
HK_API hk_status hk_lr_cache_load(const char* path, int* loaded);
HK_API hk_status hk_lr_cache_save(const char* path);

#ifdef __cplusplus
}
#endif

#endif
