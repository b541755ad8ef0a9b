/*
 * Copyright 2026 The optchoice Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the optchoice library.
 *
 * Objects are opaque handles created by oc_*_create/load/generate functions
 * and released with the matching oc_*_free. Every fallible call returns an
 * oc_status; on failure the message is available from oc_last_error() until
 * the next failing call on the same thread. Output pointers are written only
 * on success. Strings returned through char** are owned by the caller and
 * released with oc_string_free.
 */

#ifndef OPTCHOICE_H
#define OPTCHOICE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OC_API __declspec(dllexport)
#else
#define OC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oc_status {
    OC_OK = 0,
    OC_ERR_INVALID_ARGUMENT = 1,
    OC_ERR_SCHEMA = 2,
    OC_ERR_DATA = 3,
    OC_ERR_IO = 4,
    OC_ERR_RESOURCE = 5,
    OC_ERR_EVALUATION = 6,
    OC_ERR_OPTIMIZATION = 7,
    OC_ERR_TRAINING = 8,
    OC_ERR_HARNESS = 9,
    OC_ERR_INTERNAL = 10
} oc_status;

typedef struct oc_dataset oc_dataset;
typedef struct oc_scorer oc_scorer;
typedef struct oc_report oc_report;

OC_API const char* oc_version(void);
OC_API const char* oc_last_error(void);
OC_API const char* oc_status_name(oc_status status);
OC_API void oc_string_free(char* text);

/* Parallelism level read from OPTCHOICE_THREADS (integer >= 1); 1 when unset. */
OC_API oc_status oc_threads_from_env(size_t* out);

/* ---- datasets ---------------------------------------------------------- */

OC_API oc_status oc_dataset_load(const char* path, int strict_range, oc_dataset** out);
OC_API oc_status oc_dataset_save(const oc_dataset* dataset, const char* path);
OC_API void oc_dataset_free(oc_dataset* dataset);

OC_API size_t oc_dataset_lot_count(const oc_dataset* dataset);
OC_API size_t oc_dataset_choice_count(const oc_dataset* dataset);
OC_API size_t oc_dataset_dimension(const oc_dataset* dataset);
/* NULL when index is out of range. Valid for the lifetime of the dataset. */
OC_API const char* oc_dataset_feature_name(const oc_dataset* dataset, size_t index);
OC_API int oc_dataset_equal(const oc_dataset* a, const oc_dataset* b);

/* Every feature multiplied by -1. */
OC_API oc_status oc_dataset_negate(const oc_dataset* dataset, oc_dataset** out);

typedef enum oc_aggregate { OC_AGG_MIN = 0, OC_AGG_MAX = 1, OC_AGG_MEAN = 2 } oc_aggregate;

typedef struct oc_augment_entry {
    const char* feature_name;
    oc_aggregate aggregate;
    const char* new_name;
} oc_augment_entry;

OC_API oc_status oc_dataset_augment(const oc_dataset* dataset, const oc_augment_entry* entries, size_t count,
                                    oc_dataset** out);

/* ---- generator --------------------------------------------------------- */

typedef struct oc_gen_config {
    size_t lots;
    size_t choices_min;
    size_t choices_max;
    size_t dimension;
    long binary_feature_index; /* -1: none */
    const double* planted_weights; /* dimension entries */
    double noise_sigma;
    double prime_probability;
    uint64_t seed;
    int invert;
} oc_gen_config;

/* Fills `out` with the engine-shaped preset; planted_weights points to
   static storage. */
OC_API void oc_gen_engine_preset(oc_gen_config* out);
OC_API oc_status oc_generate(const oc_gen_config* config, oc_dataset** out);

/* ---- scorers ----------------------------------------------------------- */

typedef enum oc_scorer_kind { OC_SCORER_LINEAR = 0, OC_SCORER_LOGISTIC = 1 } oc_scorer_kind;

/* Linear scorer with one coefficient per feature of `schema`. */
OC_API oc_status oc_scorer_linear(const oc_dataset* schema, const double* coefficients, size_t count,
                                  oc_scorer** out);
OC_API oc_status oc_scorer_load(const char* path, oc_scorer** out);
OC_API oc_status oc_scorer_save(const oc_scorer* scorer, const char* path);
OC_API void oc_scorer_free(oc_scorer* scorer);

OC_API oc_scorer_kind oc_scorer_get_kind(const oc_scorer* scorer);
OC_API size_t oc_scorer_dimension(const oc_scorer* scorer);
/* Coefficient of feature `index` in scorer order; NaN when out of range. */
OC_API double oc_scorer_coefficient(const oc_scorer* scorer, size_t index);
OC_API const char* oc_scorer_feature_name(const oc_scorer* scorer, size_t index);
/* The scorer expressed on un-negated features (coefficients times -1). */
OC_API oc_status oc_scorer_negate(const oc_scorer* scorer, oc_scorer** out);
/* Same lines as the scorer file. */
OC_API oc_status oc_scorer_describe(const oc_scorer* scorer, char** out);

/* ---- metrics ----------------------------------------------------------- */

OC_API oc_status oc_success_rate(const oc_scorer* scorer, const oc_dataset* dataset, double* out);

typedef struct oc_diagnostics {
    double pointwise_accuracy;
    double lotwise_auc;
    double success_rate;
} oc_diagnostics;

OC_API oc_status oc_diagnose(const oc_scorer* scorer, const oc_dataset* dataset, oc_diagnostics* out);

/* ---- methods ----------------------------------------------------------- */

typedef enum oc_method_kind {
    OC_METHOD_BRUTE_FORCE = 0,
    OC_METHOD_NELDER_MEAD = 1,
    OC_METHOD_LOGISTIC = 2
} oc_method_kind;

typedef struct oc_method {
    oc_method_kind kind;
    const char* name; /* report label; NULL uses the kind name */

    /* brute force */
    unsigned bound;
    double tolerance;
    uint64_t pair_cap;

    /* Nelder-Mead */
    size_t starts;
    size_t max_iterations; /* 0: 500 * dimension */
    double simplex_scale;
    double convergence_diameter;

    /* logistic */
    double learning_rate;
    size_t epochs;
    double l2_penalty;
    double positive_weight;

    uint64_t seed; /* Nelder-Mead starts, logistic initialization */
} oc_method;

OC_API void oc_method_defaults(oc_method_kind kind, oc_method* out);

/* Trains on the whole dataset. `rate` (may be NULL) receives the full-data
   success rate. `threads` parallelizes the brute-force grid. */
OC_API oc_status oc_train(const oc_method* method, const oc_dataset* dataset, size_t threads, oc_scorer** out,
                          double* rate);

OC_API oc_status oc_leave_one_lot_out(const oc_method* method, const oc_dataset* dataset, size_t threads,
                                      double* out);

/* ---- reports ----------------------------------------------------------- */

typedef enum oc_eval_mode { OC_EVAL_FULL = 1, OC_EVAL_LOO = 2, OC_EVAL_BOTH = 3 } oc_eval_mode;

/* `augment` may be NULL (count 0) for original-data rows only. */
OC_API oc_status oc_report_build(const oc_dataset* dataset, const oc_method* methods, size_t method_count,
                                 const oc_augment_entry* augment, size_t augment_count, oc_eval_mode mode,
                                 size_t threads, oc_report** out);
OC_API void oc_report_free(oc_report* report);
OC_API size_t oc_report_row_count(const oc_report* report);
/* NaN marks a rate that was not computed in the chosen mode. */
OC_API oc_status oc_report_row(const oc_report* report, size_t index, const char** method, const char** variant,
                               double* full_rate, double* loo_rate);
OC_API oc_status oc_report_text(const oc_report* report, char** out);
OC_API oc_status oc_report_tsv(const oc_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OPTCHOICE_H */
