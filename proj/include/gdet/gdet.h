#ifndef GDET_GDET_H
#define GDET_GDET_H

/*
 * C interface to the group determinant library.
 *
 * All handles are opaque. Functions return a gdet_status; on failure a
 * message is available from gdet_last_error() until the next call on the same
 * thread. Strings handed out through `char** out` parameters are owned by the
 * caller and must be released with gdet_string_free(). Integers of arbitrary
 * size cross the boundary as decimal strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(GDET_BUILDING_LIBRARY)
#define GDET_API __attribute__((visibility("default")))
#else
#define GDET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdet_status {
    GDET_OK = 0,
    GDET_ERR_INVALID_ARGUMENT = 1,
    GDET_ERR_PARSE = 2,
    GDET_ERR_UNSUPPORTED_GROUP = 3,
    GDET_ERR_NON_REAL_VALUE = 4,
    GDET_ERR_NOT_IN_SPECTRUM = 5,
    GDET_ERR_UNKNOWN_FAMILY = 6,
    GDET_ERR_BUDGET_EXCEEDED = 7,
    GDET_ERR_INTERNAL = 8
} gdet_status;

typedef enum gdet_emit { GDET_EMIT_TEXT = 0, GDET_EMIT_JSON = 1 } gdet_emit;

typedef enum gdet_search_mode { GDET_SEARCH_RANDOM = 0, GDET_SEARCH_EXHAUSTIVE = 1 } gdet_search_mode;

typedef struct gdet_group gdet_group;
typedef struct gdet_element gdet_element;
typedef struct gdet_search_config gdet_search_config;

GDET_API const char* gdet_version(void);
GDET_API const char* gdet_status_name(gdet_status status);
GDET_API const char* gdet_last_error(void);
GDET_API void gdet_string_free(char* s);

/* Groups: "g18-4", "z3xd6" or "d18". */
GDET_API gdet_status gdet_group_open(const char* name, gdet_group** out);
GDET_API void gdet_group_close(gdet_group* group);
GDET_API const char* gdet_group_name(const gdet_group* group);
GDET_API size_t gdet_group_order(const gdet_group* group);
GDET_API gdet_status gdet_group_mult(const gdet_group* group, size_t a, size_t b, size_t* out);
GDET_API gdet_status gdet_group_inverse(const gdet_group* group, size_t a, size_t* out);
/* h has one exponent per cyclic factor of H (2 for the order-18 Z3xZ3 groups, 1 for d18). */
GDET_API gdet_status gdet_group_index_of(const gdet_group* group, const unsigned* h, size_t h_len, unsigned z,
                                         size_t* out);
GDET_API gdet_status gdet_group_element_of(const gdet_group* group, size_t index, unsigned* h, size_t h_len,
                                           unsigned* z);

/* Group-ring elements; canonical text is comma-separated coefficients in flat-index order. */
GDET_API gdet_status gdet_element_parse(const gdet_group* group, const char* text, gdet_element** out);
GDET_API gdet_status gdet_element_family(const gdet_group* group, const char* family_id, const char* m,
                                         gdet_element** out);
GDET_API gdet_status gdet_element_achieve(const gdet_group* group, const char* value, gdet_element** out);
GDET_API void gdet_element_free(gdet_element* element);
GDET_API gdet_status gdet_element_format(const gdet_element* element, char** out);

/* Determinant via the H-reduction, and via the full regular-matrix oracle. */
GDET_API gdet_status gdet_det(const gdet_element* element, char** out);
GDET_API gdet_status gdet_det_regular(const gdet_element* element, char** out);
/* Record with every available path, the factor profile and an agreement flag. */
GDET_API gdet_status gdet_det_report(const gdet_element* element, gdet_emit emit, char** out, int* agree);
GDET_API gdet_status gdet_factor_profile(const gdet_element* element, gdet_emit emit, char** out);

/* Membership record {group, value, member, class, sign, m, family}; *member is set to 0 or 1. */
GDET_API gdet_status gdet_classify(const gdet_group* group, const char* value, gdet_emit emit, char** out,
                                   int* member);
/* Membership fields for `value` plus the det report of `witness`; *verified is 1 when every
 * determinant path agrees and equals `value`. */
GDET_API gdet_status gdet_witness_report(const gdet_group* group, const char* value, const gdet_element* witness,
                                         gdet_emit emit, char** out, int* verified);
GDET_API gdet_status gdet_subgroup_spectra(const char* value, gdet_emit emit, char** out);

GDET_API gdet_status gdet_search_config_create(const gdet_group* group, gdet_search_config** out);
GDET_API void gdet_search_config_free(gdet_search_config* cfg);
GDET_API gdet_status gdet_search_config_set_range(gdet_search_config* cfg, long lo, long hi);
GDET_API gdet_status gdet_search_config_set_support(gdet_search_config* cfg, uint32_t mask);
GDET_API gdet_status gdet_search_config_set_mode(gdet_search_config* cfg, gdet_search_mode mode);
GDET_API gdet_status gdet_search_config_set_samples(gdet_search_config* cfg, uint64_t samples);
GDET_API gdet_status gdet_search_config_set_seed(gdet_search_config* cfg, uint64_t seed);
GDET_API gdet_status gdet_search_config_set_budget(gdet_search_config* cfg, uint64_t budget);
GDET_API gdet_status gdet_search_config_set_threads(gdet_search_config* cfg, unsigned threads);
GDET_API gdet_status gdet_search_config_set_oracle(gdet_search_config* cfg, int enabled);
/* congruence != 0 runs the congruence-lemma checks instead of plain membership. */
GDET_API gdet_status gdet_search_run(const gdet_search_config* cfg, int congruence, gdet_emit emit, char** out,
                                     uint64_t* violations);

GDET_API gdet_status gdet_selftest(gdet_emit emit, char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* GDET_GDET_H */
