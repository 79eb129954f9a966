/* C interface to the increval incremental sequence labelling evaluator.
 *
 * All objects are opaque handles created and released through this API.
 * Functions return INCREVAL_OK on success; on failure they return a status
 * code and leave a human-readable message in increval_last_error(), which is
 * thread-local and valid until the next failing call on the same thread.
 */
#ifndef INCREVAL_H
#define INCREVAL_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(INCREVAL_BUILD)
#define INCREVAL_API __declspec(dllexport)
#else
#define INCREVAL_API __declspec(dllimport)
#endif
#else
#define INCREVAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum increval_status {
  INCREVAL_OK = 0,
  INCREVAL_ERR_INVALID_ARGUMENT = 1,
  INCREVAL_ERR_VALIDATION = 2,
  INCREVAL_ERR_IO = 3,
  INCREVAL_ERR_CONFIG = 4,
  INCREVAL_ERR_INTERNAL = 5
} increval_status;

typedef struct increval_corpus increval_corpus;
typedef struct increval_report increval_report;

INCREVAL_API const char* increval_version(void);
INCREVAL_API const char* increval_last_error(void);

/* ---- corpora of incremental charts (JSONL files, one chart per line) ---- */

/* strict != 0: abort on the first malformed record; otherwise skip bad
 * records and collect warnings (see increval_corpus_warnings). */
INCREVAL_API increval_status increval_corpus_read(const char* path, int strict,
                                                  increval_corpus** out);
/* path "-" writes to stdout. */
INCREVAL_API increval_status increval_corpus_write(const increval_corpus* corpus,
                                                   const char* path);
INCREVAL_API increval_status increval_corpus_to_jsonl(const increval_corpus* corpus,
                                                      char** out);
/* The built-in example chart. */
INCREVAL_API increval_status increval_corpus_fixture(increval_corpus** out);
INCREVAL_API size_t increval_corpus_size(const increval_corpus* corpus);
/* Newline-separated warnings from the read that produced this corpus, or ""
 * if there were none. Owned by the corpus. */
INCREVAL_API const char* increval_corpus_warnings(const increval_corpus* corpus);
INCREVAL_API void increval_corpus_free(increval_corpus* corpus);

/* ---- simulation ---- */

typedef struct increval_sim_params {
  int n;                  /* sequence length, >= 1 */
  int vocab_size;         /* >= 2 */
  double ambiguity;       /* probability a position needs right context */
  int max_offset;         /* max right-context length, >= 0 */
  double noise;           /* per-emission label error probability */
  const char* policy;     /* monotonic | naive-restart | every-k | bernoulli |
                             edit-rate */
  int k;                  /* every-k */
  double q;               /* bernoulli */
  int window;             /* edit-rate */
  double threshold;       /* edit-rate */
  unsigned long long seed;
  int count;              /* number of charts, >= 1 */
} increval_sim_params;

INCREVAL_API increval_status increval_simulate(const increval_sim_params* params,
                                               increval_corpus** out);

/* ---- analysis ---- */

typedef struct increval_analyze_params {
  const char* target;      /* gold | silver | genuine */
  const char* correctness; /* exact | accuracy */
  double accuracy_threshold;
  int distance;            /* short-range horizon, >= 1 */
  int bins;                /* histogram bins, >= 1 */
  const char* cost_model;  /* quadratic | linear; NULL = quadratic */
} increval_analyze_params;

INCREVAL_API increval_status increval_analyze(const increval_corpus* corpus,
                                              const increval_analyze_params* params,
                                              increval_report** out);

/* format: structured | tabular | both. force != 0 overwrites prior files. */
INCREVAL_API increval_status increval_report_write(const increval_report* report,
                                                   const char* out_dir,
                                                   const char* format, int force);
INCREVAL_API increval_status increval_report_to_json(const increval_report* report,
                                                     char** out);
INCREVAL_API void increval_report_free(increval_report* report);

/* Per-metric deltas between two structured report files (right - left). */
INCREVAL_API increval_status increval_compare_reports(const char* left_path,
                                                      const char* right_path,
                                                      char** out);

/* Releases strings returned through char** out parameters. */
INCREVAL_API void increval_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* INCREVAL_H */
