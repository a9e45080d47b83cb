/* rootsplit: splitting types of Deligne-extended logarithmic connections on
 * the projective line minus {0, 1, inf}, from monodromy pairs (M0, M1).
 *
 * All functions are thread-safe on distinct handles. The last error message
 * is thread-local. Strings returned through char** are owned by the caller
 * and released with rootsplit_string_free. */
#ifndef ROOTSPLIT_H
#define ROOTSPLIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ROOTSPLIT_API __declspec(dllexport)
#else
#define ROOTSPLIT_API __attribute__((visibility("default")))
#endif

typedef enum rootsplit_status {
  ROOTSPLIT_OK = 0,
  ROOTSPLIT_E_SINGULAR_MATRIX = 1,
  ROOTSPLIT_E_ILL_CONDITIONED = 2,
  ROOTSPLIT_E_DIMENSION = 3,
  ROOTSPLIT_E_INCONSISTENT_CERTIFICATE = 4,
  ROOTSPLIT_E_RELATION_VIOLATED = 5,
  ROOTSPLIT_E_NON_INTEGER_CHERN = 6,
  ROOTSPLIT_E_PROVEN_BOUND_VIOLATED = 7,
  ROOTSPLIT_E_ROOT_OUT_OF_PROVEN_RANGE = 8,
  ROOTSPLIT_E_EMPTY_INTERSECTION = 9,
  ROOTSPLIT_E_AMBIGUOUS_PART = 10,
  ROOTSPLIT_E_SCHEMA = 11,
  ROOTSPLIT_E_INVALID_ARGUMENT = 12,
  ROOTSPLIT_E_INTERNAL = 13
} rootsplit_status;

typedef enum rootsplit_split_status {
  ROOTSPLIT_DETERMINED = 0,
  ROOTSPLIT_CANDIDATES = 1
} rootsplit_split_status;

/* Flags for the document functions. */
#define ROOTSPLIT_FLAG_EXACT 1u
#define ROOTSPLIT_FLAG_PRETTY 2u
#define ROOTSPLIT_FLAG_KEEP_GOING 4u

typedef struct rootsplit_config rootsplit_config;
typedef struct rootsplit_rep rootsplit_rep;
typedef struct rootsplit_result rootsplit_result;

ROOTSPLIT_API const char* rootsplit_version(void);
ROOTSPLIT_API const char* rootsplit_status_name(rootsplit_status status);
/* Message of the last failure on this thread ("" when none). */
ROOTSPLIT_API const char* rootsplit_last_error(void);
ROOTSPLIT_API void rootsplit_string_free(char* s);

/* Tolerances: sing, rank, recon, cond, cluster, branch, inv, int, sigma. */
ROOTSPLIT_API rootsplit_status rootsplit_config_create(rootsplit_config** out);
ROOTSPLIT_API void rootsplit_config_destroy(rootsplit_config* config);
ROOTSPLIT_API rootsplit_status rootsplit_config_set_tolerance(rootsplit_config* config, const char* name,
                                                              double value);
ROOTSPLIT_API rootsplit_status rootsplit_config_get_tolerance(const rootsplit_config* config, const char* name,
                                                              double* value);
/* {"tolerances": {...}}; keys present override the current values. */
ROOTSPLIT_API rootsplit_status rootsplit_config_load_json(rootsplit_config* config, const char* json);

/* m0, m1: n*n complex entries, row-major, interleaved (re, im): 2*n*n
 * doubles each. config may be NULL for defaults; label may be NULL. */
ROOTSPLIT_API rootsplit_status rootsplit_rep_create(int n, const double* m0, const double* m1, const char* label,
                                                    const rootsplit_config* config, rootsplit_rep** out);
ROOTSPLIT_API void rootsplit_rep_destroy(rootsplit_rep* rep);
ROOTSPLIT_API int rootsplit_rep_dim(const rootsplit_rep* rep);

ROOTSPLIT_API rootsplit_status rootsplit_chern_class(const rootsplit_rep* rep, const rootsplit_config* config,
                                                     int* c1);
ROOTSPLIT_API rootsplit_status rootsplit_is_irreducible(const rootsplit_rep* rep, const rootsplit_config* config,
                                                        int* irreducible);
ROOTSPLIT_API rootsplit_status rootsplit_classify(const rootsplit_rep* rep, const rootsplit_config* config,
                                                  rootsplit_result** out);

ROOTSPLIT_API void rootsplit_result_destroy(rootsplit_result* result);
ROOTSPLIT_API rootsplit_split_status rootsplit_result_status(const rootsplit_result* result);
ROOTSPLIT_API int rootsplit_result_option_count(const rootsplit_result* result);
/* Copies option `index` (roots in descending order) into roots[0..capacity);
 * *dim receives the number of roots. */
ROOTSPLIT_API rootsplit_status rootsplit_result_option(const rootsplit_result* result, int index, int* roots,
                                                       int capacity, int* dim);
ROOTSPLIT_API int rootsplit_result_c1(const rootsplit_result* result);
ROOTSPLIT_API rootsplit_status rootsplit_result_to_json(const rootsplit_result* result, char** out);

/* Document level: input and output follow docs/schema. Under
 * ROOTSPLIT_FLAG_KEEP_GOING a document with failing reps is still written
 * and the first failure code is returned. */
ROOTSPLIT_API rootsplit_status rootsplit_classify_document(const char* input_json, const rootsplit_config* config,
                                                           unsigned flags, char** output);
ROOTSPLIT_API rootsplit_status rootsplit_chern_document(const char* input_json, const rootsplit_config* config,
                                                        unsigned flags, char** output);
/* c1 may be NULL. */
ROOTSPLIT_API rootsplit_status rootsplit_candidate_tree(int m, int d, const int* c1, unsigned flags, char** output);
/* spec_json may be NULL or "{}" for the default suite. *violations receives
 * the number of failed checks. */
ROOTSPLIT_API rootsplit_status rootsplit_verify(const char* spec_json, const rootsplit_config* config, unsigned flags,
                                                char** output, long* violations);
ROOTSPLIT_API rootsplit_status rootsplit_example_document(const char* name, unsigned flags, char** output);

#ifdef __cplusplus
}
#endif

#endif /* ROOTSPLIT_H */
