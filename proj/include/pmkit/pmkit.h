// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// C interface to the polymatroid toolkit.
//
// Every function returns a pmkit_status. On failure the calling thread's last
// error is set; pmkit_last_error() returns it as a JSON object
// {"error": "NotSubmodular", "status": 5, "message": "...", "detail": {...}}.
// Strings returned through char** are owned by the caller and released with
// pmkit_string_free. Handles are released with pmkit_polymatroid_free.
// Subsets and element lists are comma-joined labels ("" is the empty set).

#ifndef PMKIT_PMKIT_H_
#define PMKIT_PMKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PMKIT_BUILDING_LIBRARY)
#define PMKIT_API __attribute__((visibility("default")))
#else
#define PMKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmkit_status {
  PMKIT_OK = 0,
  PMKIT_INVALID_ARGUMENT = 1,
  PMKIT_PARSE_ERROR = 2,
  PMKIT_NOT_NORMALIZED = 3,
  PMKIT_NOT_MONOTONE = 4,
  PMKIT_NOT_SUBMODULAR = 5,
  PMKIT_EXCEEDS_K = 6,
  PMKIT_INVALID_PARAMS = 7,
  PMKIT_UNKNOWN_ELEMENT = 8,
  PMKIT_LABEL_COLLISION = 9,
  PMKIT_MIXED_K = 10,
  PMKIT_GROUND_MISMATCH = 11,
  PMKIT_OVERFLOW = 12,
  PMKIT_LIMIT_EXCEEDED = 13,
  PMKIT_LEVEL_OUT_OF_RANGE = 14,
  PMKIT_OUT_OF_GRID = 15,
  PMKIT_TOO_LARGE = 16,
  PMKIT_NOT_EXCLUDED_MINOR = 17,
  PMKIT_K_MISMATCH = 18,
  PMKIT_REGIME_VIOLATED = 19,
  PMKIT_NOT_DECOMPOSABLE = 20,
  PMKIT_UNIQUENESS_REGIME_VIOLATED = 21,
  PMKIT_LEVEL_MISMATCH = 22,
  PMKIT_RECONSTRUCTION_FAILURE = 23,
  PMKIT_MINOR_NOT_DECOMPOSABLE = 24,
  PMKIT_HYPOTHESIS_VIOLATED = 25,
  PMKIT_COLLAPSE_FAILED = 26,
  PMKIT_NOT_IN_TABLE = 27,
  PMKIT_NON_INTEGER_RESULT = 28,
  PMKIT_SEARCH_BUDGET_EXCEEDED = 29,
  PMKIT_DIMENSION_MISMATCH = 30,
  PMKIT_OVERLAPPING_SETS = 31,
  PMKIT_UNKNOWN_SUITE = 32,
  PMKIT_CLASSIFICATION_MISMATCH = 33,
  PMKIT_INTERNAL = 34
} pmkit_status;

typedef struct pmkit_polymatroid pmkit_polymatroid;

PMKIT_API const char* pmkit_version(void);
// Name of a status code, e.g. "NotSubmodular".
PMKIT_API const char* pmkit_status_name(pmkit_status status);
// Last error of the calling thread as JSON; "" after success. Valid until the
// next call on this thread.
PMKIT_API const char* pmkit_last_error(void);
PMKIT_API void pmkit_string_free(char* s);

// Limits guard the exponential paths. Defaults come from PMKIT_MAX_ELEMENTS,
// PMKIT_MAX_K and PMKIT_BUDGET, else 6, 16 and 10^7.
PMKIT_API pmkit_status pmkit_get_limits(int* max_elements, int64_t* max_k, uint64_t* budget);
PMKIT_API pmkit_status pmkit_set_limits(int max_elements, int64_t max_k, uint64_t budget);

// Polymatroid JSON: {"format":1,"ground":[...],"k":K,"ranks":{"":0,"e":..,"e,f":..}}.
PMKIT_API pmkit_status pmkit_polymatroid_from_json(const char* json, pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_polymatroid_to_json(const pmkit_polymatroid* p, char** out);
PMKIT_API void pmkit_polymatroid_free(pmkit_polymatroid* p);

PMKIT_API pmkit_status pmkit_polymatroid_size(const pmkit_polymatroid* p, int* out);
PMKIT_API pmkit_status pmkit_polymatroid_k(const pmkit_polymatroid* p, int64_t* out);
PMKIT_API pmkit_status pmkit_polymatroid_rank(const pmkit_polymatroid* p, const char* subset,
                                              int64_t* out);
PMKIT_API pmkit_status pmkit_nullity(const pmkit_polymatroid* p, int64_t* out);

PMKIT_API pmkit_status pmkit_uniform(int64_t a, int64_t b, pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_delete(const pmkit_polymatroid* p, const char* elements,
                                    pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_contract(const pmkit_polymatroid* p, const char* elements,
                                      pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_compress(const pmkit_polymatroid* p, const char* element,
                                      int64_t level, pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_k_dual(const pmkit_polymatroid* p, pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_simplify(const pmkit_polymatroid* p, pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_direct_sum(const pmkit_polymatroid* p1, const pmkit_polymatroid* p2,
                                        pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_add(const pmkit_polymatroid* p1, const pmkit_polymatroid* p2,
                                 pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_scalar_multiply(int64_t c, const pmkit_polymatroid* p,
                                             pmkit_polymatroid** out);
PMKIT_API pmkit_status pmkit_is_isomorphic(const pmkit_polymatroid* p1,
                                           const pmkit_polymatroid* p2, int* out);

// Multiset rank at a count vector with one entry per element, each in [0, k].
PMKIT_API pmkit_status pmkit_natural_rank(const pmkit_polymatroid* p, const int64_t* counts,
                                          size_t count_len, int64_t* out);
// Whole grid as CSV: one column per element, then "rank".
PMKIT_API pmkit_status pmkit_natural_grid_csv(const pmkit_polymatroid* p, char** out);

typedef enum pmkit_decompose_method {
  PMKIT_DECOMPOSE_DIRECT = 0,      // n-corner decomposition for the given n
  PMKIT_DECOMPOSE_VIA_MINORS = 1,  // glued from singleton and doubleton minors
  PMKIT_DECOMPOSE_ESSENTIAL = 2    // least n admitting a decomposition; n ignored
} pmkit_decompose_method;

// {"n":N,"tau":<polymatroid>,"coloops":[labels]}
PMKIT_API pmkit_status pmkit_decompose_json(const pmkit_polymatroid* p, int64_t n,
                                            pmkit_decompose_method method, char** out);

// With element NULL: every (element, level) with m <= level <= k - m.
// Otherwise the single pair. {"m":M,"rows":[{"element","level","collapse"}]}
PMKIT_API pmkit_status pmkit_collapse_check_json(const pmkit_polymatroid* p, const char* element,
                                                 int64_t level, char** out);

// Membership in the class excluding U_{a,b} and U_{b-a,b} from the k-natural
// matroid, k taken from the polymatroid. {"in_class":bool,"witnesses":[...]}
PMKIT_API pmkit_status pmkit_class_check_json(const pmkit_polymatroid* p, int64_t a, int64_t b,
                                              char** out);
// {"excluded_minor":bool,"in_class":bool,"in_gamma":bool|null,"tags":[...]}
PMKIT_API pmkit_status pmkit_excluded_check_json(const pmkit_polymatroid* p, int64_t a,
                                                 int64_t b, char** out);

typedef struct pmkit_enumerate_options {
  int max_elements;   // 1 or 2 classify; larger values search exhaustively
  uint64_t budget;    // node budget per enumeration run; 0 uses the configured limit
  int jobs;           // worker threads for the search
  int timestamp;      // nonzero records the current UTC time in the metadata
} pmkit_enumerate_options;

// Catalog JSON of excluded minors for the class (a, b, k).
PMKIT_API pmkit_status pmkit_enumerate_json(int64_t a, int64_t b, int64_t k,
                                            const pmkit_enumerate_options* options, char** out);

typedef enum pmkit_polytope_kind {
  PMKIT_POLYTOPE_INDEPENDENCE = 0,  // lattice points of I
  PMKIT_POLYTOPE_BASE = 1,          // lattice points of B
  PMKIT_POLYTOPE_VERTICES = 2,      // greedy vertices of B
  PMKIT_POLYTOPE_MINOR_FACE = 3     // lattice points of the minor face for (contract, del)
} pmkit_polytope_kind;

PMKIT_API pmkit_status pmkit_polytope_csv(const pmkit_polymatroid* p, pmkit_polytope_kind kind,
                                          const char* contract, const char* del, char** out);
// Independence polytope of a 2-element polymatroid.
PMKIT_API pmkit_status pmkit_polytope_svg(const pmkit_polymatroid* p, char** out);
// Membership of a rational point given as "x1,x2,..." with entries "p" or "p/q".
PMKIT_API pmkit_status pmkit_polytope_contains(const pmkit_polymatroid* p, const char* point,
                                               int base, int* out);

// Runs a suite ("paper", "properties" or "all"). *passed is 1 when every
// check passed. as_text selects the text report over JSON.
PMKIT_API pmkit_status pmkit_verify(const char* suite, int jobs, int as_text, int* passed,
                                    char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // PMKIT_PMKIT_H_
