// Copyright 2026 The fsjoin Authors
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

#ifndef FSJOIN_FSJOIN_H_
#define FSJOIN_FSJOIN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FSJOIN_BUILDING_LIBRARY)
#define FSJ_API __declspec(dllexport)
#else
#define FSJ_API __declspec(dllimport)
#endif
#else
#define FSJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fsj_status {
  FSJ_OK = 0,
  FSJ_ERR_ARGUMENT = 1, /* bad parameter or configuration */
  FSJ_ERR_IO = 2,       /* file could not be read or written */
  FSJ_ERR_INTERNAL = 3,
  FSJ_ERR_GUARANTEE = 4 /* an approximation guarantee check failed */
} fsj_status;

typedef enum fsj_matcher {
  FSJ_MATCHER_HG = 0,
  FSJ_MATCHER_EV = 1,
  FSJ_MATCHER_GD = 2,
  FSJ_MATCHER_LD = 3,
  FSJ_MATCHER_PS = 4
} fsj_matcher;

typedef enum fsj_similarity { FSJ_SIM_JAC = 0, FSJ_SIM_NEDS = 1 } fsj_similarity;

typedef struct fsj_collection fsj_collection;
typedef struct fsj_report fsj_report;

/* Message of the last failed call on this thread; never NULL. */
FSJ_API const char* fsj_last_error(void);
FSJ_API const char* fsj_status_string(fsj_status status);
FSJ_API const char* fsj_version(void);

/* Parses "hg", "ev", "gd", "ld", "ps" and "jac", "neds". */
FSJ_API fsj_status fsj_parse_matcher(const char* name, fsj_matcher* out);
FSJ_API fsj_status fsj_parse_similarity(const char* name, fsj_similarity* out);

typedef struct fsj_tokenizer_options {
  int q;            /* q-gram length, default 3 */
  int per_word;     /* tokenize each word of an element separately */
  int pretokenized; /* elements are whitespace-separated integer ids */
  char delimiter;   /* element separator in input files, default ';' */
} fsj_tokenizer_options;

FSJ_API void fsj_tokenizer_options_init(fsj_tokenizer_options* options);

/* options may be NULL for defaults. */
FSJ_API fsj_status fsj_collection_load(const char* path, const fsj_tokenizer_options* options,
                                       fsj_collection** out);

typedef struct fsj_synthetic_options {
  size_t n_sets;
  size_t avg_elems;
  size_t alphabet;
  uint64_t seed;
  double planted_rate;
  double perturb_rate;
  double swap_rate;
  size_t min_word_len;
  size_t max_word_len;
  size_t vocabulary; /* 0 picks n_sets * avg_elems / 2 */
} fsj_synthetic_options;

FSJ_API void fsj_synthetic_options_init(fsj_synthetic_options* options);
FSJ_API fsj_status fsj_collection_generate(const fsj_synthetic_options* options,
                                           const fsj_tokenizer_options* tokenizer, fsj_collection** out);

/* Uniform sample of ceil(fraction * size) sets. */
FSJ_API fsj_status fsj_collection_sample(const fsj_collection* collection, double fraction, uint64_t seed,
                                         fsj_collection** out);
FSJ_API fsj_status fsj_collection_write(const fsj_collection* collection, const char* path, char delimiter);
FSJ_API size_t fsj_collection_size(const fsj_collection* collection);
FSJ_API size_t fsj_collection_skipped(const fsj_collection* collection);
FSJ_API void fsj_collection_free(fsj_collection* collection);

typedef struct fsj_join_config {
  double delta;          /* default 0.7 */
  fsj_matcher matcher;   /* default HG */
  fsj_similarity sim;    /* default JAC */
  double epsilon;        /* PS epsilon, default 0.001 */
  int ub_variant;        /* score GD/LD/PS with their upper bound */
  int refine_filters;    /* positional and joint filters, default 1 */
} fsj_join_config;

FSJ_API void fsj_join_config_init(fsj_join_config* config);

FSJ_API fsj_status fsj_join(const fsj_collection* collection, const fsj_join_config* config, fsj_report** out);
/* All pairs, exact matching, no filtering. */
FSJ_API fsj_status fsj_oracle_join(const fsj_collection* collection, double delta, fsj_similarity sim,
                                   fsj_report** out);

typedef struct fsj_pair {
  int64_t r_id;
  int64_t s_id;
  double score;
} fsj_pair;

FSJ_API size_t fsj_report_pair_count(const fsj_report* report);
FSJ_API fsj_status fsj_report_pair(const fsj_report* report, size_t index, fsj_pair* out);
/* r_id,s_id,score CSV. */
FSJ_API fsj_status fsj_report_write_pairs(const fsj_report* report, const char* path);
/* Report JSON; release with fsj_string_free. */
FSJ_API fsj_status fsj_report_json(const fsj_report* report, char** out);
/* Matching-phase time in nanoseconds. */
FSJ_API int64_t fsj_report_matching_ns(const fsj_report* report);
FSJ_API void fsj_report_free(fsj_report* report);

/* Accuracy table of each matcher against the HG result. Fails with
 * FSJ_ERR_GUARANTEE when an approximate join breaks precision 1 (weight
 * mode) or recall 1 (ub_variant). config->matcher is ignored. */
FSJ_API fsj_status fsj_compare(const fsj_collection* collection, const fsj_join_config* config,
                               const fsj_matcher* matchers, size_t n_matchers, char** table);

typedef struct fsj_sweep_config {
  fsj_similarity sim;
  const fsj_matcher* matchers;
  size_t n_matchers;
  const double* deltas;
  size_t n_deltas;
  const double* fractions;
  size_t n_fractions;
  uint64_t seed;
  size_t repeats; /* default 3 */
  double epsilon;
  int ub_variant;
  int refine_filters;
} fsj_sweep_config;

FSJ_API void fsj_sweep_config_init(fsj_sweep_config* config);
/* Sweep CSV and performance-profile CSV; profile_csv may be NULL. */
FSJ_API fsj_status fsj_sweep(const fsj_collection* collection, const fsj_sweep_config* config, char** csv,
                             char** profile_csv);

FSJ_API void fsj_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* FSJOIN_FSJOIN_H_ */
