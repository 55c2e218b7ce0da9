/* C interface to the facet engine: build association matrices from a
 * corpus, expand seed sets, answer two-term analogies and run MAP
 * evaluations.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free / *_close function. Every fallible call returns a
 * facet_status; on failure facet_last_error() describes the problem (the
 * message is per thread and valid until the next failing call on that
 * thread). Strings returned by accessors live as long as their handle.
 * A loaded facet_model is immutable and may be queried from many threads.
 */
#ifndef FACET_FACET_H
#define FACET_FACET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FACET_API __declspec(dllexport)
#else
#define FACET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum facet_status {
  FACET_OK = 0,
  FACET_ERR_INVALID_ARGUMENT = 1,
  FACET_ERR_IO = 2,
  FACET_ERR_BAD_MAGIC = 3,
  FACET_ERR_VERSION_MISMATCH = 4,
  FACET_ERR_TRUNCATED = 5,
  FACET_ERR_CORRUPT = 6,
  FACET_ERR_MISMATCHED_MATRICES = 7,
  FACET_ERR_UNKNOWN_TERM = 8,
  FACET_ERR_NO_SEEDS = 9,
  FACET_ERR_UNKNOWN_CATEGORY = 10,
  FACET_ERR_INSUFFICIENT_SEEDS = 11,
  FACET_ERR_NO_DOMAIN = 12,
  FACET_ERR_INTERNAL = 99
} facet_status;

typedef enum facet_measure { FACET_MEASURE_PPMI = 0, FACET_MEASURE_APPMI = 1 } facet_measure;

FACET_API const char* facet_status_name(facet_status status);
FACET_API const char* facet_last_error(void);

/* ---- building ---------------------------------------------------------- */

typedef struct facet_build_options {
  const char* const* triple_paths; /* word TAB context TAB count TAB family */
  size_t triple_path_count;
  const char* const* corpus_paths; /* one sentence per line */
  size_t corpus_path_count;
  const char* lexicon_path; /* optional: term TAB tag, for untagged corpus tokens */
  const char* output_dir;
  facet_measure measure;
  double shift_k;
  uint64_t min_word_frequency;
  uint64_t min_pair_count;
  int lowercase;
  int build_domain;
  const char* const* merges; /* "a,b=merged" */
  size_t merge_count;
} facet_build_options;

typedef struct facet_build_summary {
  uint32_t vocabulary_size;
  uint32_t context_count;
  uint64_t records;
  uint64_t warnings;
  uint64_t syntactic_word_rows_nnz;
  uint64_t syntactic_context_rows_nnz;
  int has_domain;
  uint64_t domain_word_rows_nnz;
  uint64_t domain_context_rows_nnz;
} facet_build_summary;

/* Defaults: APPMI, k = 5, min word frequency 5, min pair count 2,
 * lowercase on, domain matrices on. */
FACET_API void facet_build_options_init(facet_build_options* options);
FACET_API facet_status facet_build(const facet_build_options* options, facet_build_summary* summary);

/* ---- model ------------------------------------------------------------- */

typedef struct facet_model facet_model;

typedef struct facet_model_info {
  uint32_t vocabulary_size;
  uint32_t context_count;
  facet_measure measure;
  double shift_k;
  uint64_t syntactic_nnz;
  int has_domain;
  uint64_t domain_word_rows_nnz;
} facet_model_info;

FACET_API facet_status facet_model_open(const char* dir, facet_model** out);
FACET_API void facet_model_close(facet_model* model);
FACET_API facet_status facet_model_get_info(const facet_model* model, facet_model_info* info);

/* ---- expansion --------------------------------------------------------- */

typedef struct facet_expand_params {
  double rho;        /* limited support penalty, >= 0 */
  uint32_t n;        /* context footprint, >= 1 */
  uint32_t limit;    /* maximum result terms, >= 1 */
  int include_seeds; /* keep seed terms in the result list */
} facet_expand_params;

/* rho = 3, n = 100, limit = 100, include_seeds = 0. */
FACET_API void facet_expand_params_init(facet_expand_params* params);

typedef enum facet_expansion_state {
  FACET_EXPANSION_OK = 0,
  FACET_EXPANSION_EMPTY_FOCUS = 1,
  FACET_EXPANSION_NO_CANDIDATES = 2
} facet_expansion_state;

typedef struct facet_focus_entry {
  const char* label;
  double activation;
  double support;
  double score;
  double weight;
} facet_focus_entry;

typedef struct facet_expansion facet_expansion;

/* Unknown seeds are reported via facet_expansion_unresolved; the call fails
 * with FACET_ERR_NO_SEEDS only when none resolves. */
FACET_API facet_status facet_expand(const facet_model* model, const char* const* seeds, size_t seed_count,
                                    const facet_expand_params* params, facet_expansion** out);
FACET_API void facet_expansion_free(facet_expansion* expansion);
FACET_API size_t facet_expansion_size(const facet_expansion* expansion);
FACET_API const char* facet_expansion_term(const facet_expansion* expansion, size_t index);
FACET_API double facet_expansion_score(const facet_expansion* expansion, size_t index);
FACET_API facet_expansion_state facet_expansion_get_state(const facet_expansion* expansion);
FACET_API const char* facet_expansion_reason(const facet_expansion* expansion);
FACET_API size_t facet_expansion_unresolved_count(const facet_expansion* expansion);
FACET_API const char* facet_expansion_unresolved(const facet_expansion* expansion, size_t index);
FACET_API size_t facet_expansion_focus_size(const facet_expansion* expansion);
FACET_API facet_status facet_expansion_focus_entry(const facet_expansion* expansion, size_t index,
                                                   facet_focus_entry* entry);

/* ---- analogy ----------------------------------------------------------- */

typedef struct facet_analogy_params {
  facet_expand_params like_side;
  facet_expand_params domain_side;
  uint32_t limit;
  uint32_t depth; /* per-side list depth; 0 = 10 * limit */
} facet_analogy_params;

typedef struct facet_analogy_candidate {
  const char* term;
  double combined;
  double m_score;
  double d_score;
} facet_analogy_candidate;

typedef struct facet_analogy facet_analogy;

FACET_API void facet_analogy_params_init(facet_analogy_params* params);
FACET_API double facet_squash_combine(double m, double d);
FACET_API facet_status facet_analogy_solve(const facet_model* model, const char* like, const char* of,
                                           const facet_analogy_params* params, facet_analogy** out);
FACET_API void facet_analogy_free(facet_analogy* analogy);
FACET_API size_t facet_analogy_size(const facet_analogy* analogy);
FACET_API facet_status facet_analogy_candidate_at(const facet_analogy* analogy, size_t index,
                                                  facet_analogy_candidate* candidate);
FACET_API uint32_t facet_analogy_depth(const facet_analogy* analogy);

/* ---- evaluation -------------------------------------------------------- */

typedef struct facet_eval_params {
  facet_expand_params expand;
  uint32_t trials;
  uint32_t seeds_per_trial;
  uint64_t rng_seed;
} facet_eval_params;

typedef struct facet_report facet_report;

/* 50 trials of 3 seeds, rng seed 0; expansion rho = 3, n = 100, limit 500,
 * seeds included. */
FACET_API void facet_eval_params_init(facet_eval_params* params);

/* Newline-separated category names found in gold_dir. Free with
 * facet_string_free. */
FACET_API facet_status facet_list_categories(const char* gold_dir, char** out);
FACET_API void facet_string_free(char* text);

/* Resolves `category` to gold_dir/<category>.txt; fails with
 * FACET_ERR_UNKNOWN_CATEGORY (message lists the available ones) otherwise. */
FACET_API facet_status facet_eval_run(const facet_model* model, const char* gold_dir, const char* category,
                                      const facet_eval_params* params, facet_report** out);
FACET_API facet_status facet_eval_run_file(const facet_model* model, const char* gold_path,
                                           const facet_eval_params* params, facet_report** out);
FACET_API void facet_report_free(facet_report* report);
FACET_API const char* facet_report_category(const facet_report* report);
FACET_API int facet_report_is_open(const facet_report* report);
FACET_API uint32_t facet_report_map_n(const facet_report* report);
FACET_API size_t facet_report_trial_count(const facet_report* report);
FACET_API const char* facet_report_trial_seeds(const facet_report* report, size_t index); /* comma separated */
FACET_API double facet_report_trial_map(const facet_report* report, size_t index);
FACET_API double facet_report_trial_map_n(const facet_report* report, size_t index);
FACET_API double facet_report_mean_map(const facet_report* report);
FACET_API double facet_report_mean_map_n(const facet_report* report);
/* MAP for closed categories, MAP_n for open ones. */
FACET_API double facet_report_headline(const facet_report* report);
FACET_API const char* facet_report_tsv(const facet_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FACET_FACET_H */
