/*
 * bstab: exact numerics for stability conditions on extremal contractions.
 *
 * C interface. Models are opaque handles; every computation takes its
 * inputs as strings (rationals as "p/q", classes as JSON or catalog names)
 * and returns a JSON document allocated by the library, to be released with
 * bstab_string_free. Functions return a status code; on failure the message
 * for the calling thread is available from bstab_last_error.
 */
#ifndef BSTAB_H
#define BSTAB_H

#if defined(_WIN32)
#  if defined(BSTAB_BUILDING_LIBRARY)
#    define BSTAB_API __declspec(dllexport)
#  else
#    define BSTAB_API __declspec(dllimport)
#  endif
#else
#  define BSTAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bstab_status {
  BSTAB_OK = 0,
  BSTAB_ERR_INVALID_ARGUMENT = 1,
  BSTAB_ERR_PARSE = 2,
  BSTAB_ERR_PRECONDITION = 3,
  BSTAB_ERR_NULL_POINTER = 4,
  BSTAB_ERR_INTERNAL = 5
} bstab_status;

typedef enum bstab_kind {
  BSTAB_KIND_SURFACE = 0,
  BSTAB_KIND_TI = 1,
  BSTAB_KIND_TII = 2,
  BSTAB_KIND_TIII = 3,
  BSTAB_KIND_TIV = 4,
  BSTAB_KIND_TV = 5
} bstab_kind;

typedef struct bstab_model bstab_model;

BSTAB_API const char* bstab_version(void);

/* Message of the last failed call on this thread ("" if none). */
BSTAB_API const char* bstab_last_error(void);

BSTAB_API void bstab_string_free(char* s);

/* "surface", "TI", ..., "TV" (also "I".."V"). */
BSTAB_API bstab_status bstab_kind_from_string(const char* text, bstab_kind* out);

/* w is w^2 (surface) or w^3 (3-fold), a positive rational string. */
BSTAB_API bstab_status bstab_model_create(bstab_kind kind, const char* w, bstab_model** out);
/* Type I with explicit f*w.D^2 and D^3 (either may be NULL for 0). */
BSTAB_API bstab_status bstab_model_create_type_i(const char* w, const char* omega_dd, const char* d_cube,
                                                 bstab_model** out);
BSTAB_API void bstab_model_destroy(bstab_model* model);
BSTAB_API bstab_status bstab_model_kind(const bstab_model* model, bstab_kind* out);

BSTAB_API bstab_status bstab_model_json(const bstab_model* model, char** out_json);
BSTAB_API bstab_status bstab_catalog_json(const bstab_model* model, char** out_json);

/* b-range of the twisted-ch3 positivity condition (3-folds). *discrepancy is set
 * to 1 when the derived range differs from the published one, else 0. */
BSTAB_API bstab_status bstab_brange_json(const bstab_model* model, char** out_json, int* discrepancy);

/* The class arguments below accept JSON text or a catalog name such as "O_C" or "point". */
BSTAB_API bstab_status bstab_twist_json(const bstab_model* model, const char* cls, const char* b, char** out_json);
/* b may be NULL (treated as 0). */
BSTAB_API bstab_status bstab_charge_json(const bstab_model* model, const char* cls, const char* b, char** out_json);
BSTAB_API bstab_status bstab_slope_json(const bstab_model* model, const char* cls, const char* b, char** out_json);
/* c_omega and threshold (surface strong form) may be NULL: defaults "0" and "-1". */
BSTAB_API bstab_status bstab_bg_json(const bstab_model* model, const char* cls, const char* b, const char* c_omega,
                                     const char* threshold, char** out_json);
BSTAB_API bstab_status bstab_norm_json(const bstab_model* model, const char* cls, char** out_json);
/* Surface Euler pairing chi(v, w); k_y_omega and chi_o may both be NULL when not needed. */
BSTAB_API bstab_status bstab_chi_json(const bstab_model* model, const char* v, const char* w, const char* k_y_omega,
                                      const char* chi_o, char** out_json);
/* b NULL: the simplest rational of the first b-range interval (3-folds) or 0 (surface). */
BSTAB_API bstab_status bstab_sequiv_json(const bstab_model* model, const char* target, const char* b,
                                         long bound_scale, char** out_json);
/* Wall between two surface classes; t may be NULL (no ordering reported). */
BSTAB_API bstab_status bstab_wall_json(const bstab_model* model, const char* cls_a, const char* cls_b, const char* t,
                                       char** out_json);
/* Verdicts for one moduli object, or all three when object is NULL. */
BSTAB_API bstab_status bstab_verdict_json(const bstab_model* model, const char* object, const char* t,
                                          char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BSTAB_H */
