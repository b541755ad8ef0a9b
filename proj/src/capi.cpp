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

#include "optchoice/optchoice.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "optchoice/datagen.hpp"
#include "optchoice/error.hpp"
#include "optchoice/eval.hpp"
#include "optchoice/features.hpp"
#include "optchoice/io.hpp"

struct oc_dataset {
    optchoice::Dataset value;
};

struct oc_scorer {
    optchoice::ScorerFile value;
};

struct oc_report {
    optchoice::EvalReport value;
};

namespace {

using namespace optchoice;

thread_local std::string g_last_error;

oc_status to_status(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return OC_ERR_INVALID_ARGUMENT;
        case ErrorKind::Schema: return OC_ERR_SCHEMA;
        case ErrorKind::Data: return OC_ERR_DATA;
        case ErrorKind::Io: return OC_ERR_IO;
        case ErrorKind::Resource: return OC_ERR_RESOURCE;
        case ErrorKind::Evaluation: return OC_ERR_EVALUATION;
        case ErrorKind::Optimization: return OC_ERR_OPTIMIZATION;
        case ErrorKind::Training: return OC_ERR_TRAINING;
        case ErrorKind::Harness: return OC_ERR_HARNESS;
    }
    return OC_ERR_INTERNAL;
}

oc_status set_error(oc_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <class Body>
oc_status guarded(Body&& body) {
    try {
        body();
        return OC_OK;
    } catch (const Error& e) {
        return set_error(to_status(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(OC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(OC_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(OC_ERR_INTERNAL, "unknown failure");
    }
}

void require(const void* pointer, const char* what) {
    if (!pointer) fail(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

char* duplicate(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

AugmentationSpec to_spec(const oc_augment_entry* entries, size_t count) {
    if (count) require(entries, "augmentation entries");
    AugmentationSpec spec;
    for (size_t i = 0; i < count; ++i) {
        require(entries[i].feature_name, "augmentation feature name");
        require(entries[i].new_name, "augmentation new name");
        Aggregate aggregate;
        switch (entries[i].aggregate) {
            case OC_AGG_MIN: aggregate = Aggregate::Min; break;
            case OC_AGG_MAX: aggregate = Aggregate::Max; break;
            case OC_AGG_MEAN: aggregate = Aggregate::Mean; break;
            default: fail(ErrorKind::InvalidArgument, "unknown aggregate");
        }
        spec.push_back({entries[i].feature_name, aggregate, entries[i].new_name});
    }
    return spec;
}

const char* kind_name(oc_method_kind kind) {
    switch (kind) {
        case OC_METHOD_BRUTE_FORCE: return "bruteforce";
        case OC_METHOD_NELDER_MEAD: return "neldermead";
        case OC_METHOD_LOGISTIC: return "logistic";
    }
    return "unknown";
}

BruteForceConfig brute_force_config(const oc_method& m, size_t threads) {
    BruteForceConfig config;
    config.bound = m.bound;
    config.tolerance = m.tolerance;
    config.pair_cap = m.pair_cap;
    config.threads = threads;
    config.validate();
    return config;
}

NelderMeadConfig nelder_mead_config(const oc_method& m) {
    if (m.starts == 0) fail(ErrorKind::InvalidArgument, "Nelder-Mead needs at least one start");
    NelderMeadConfig config;
    config.max_iterations = m.max_iterations;
    config.simplex_scale = m.simplex_scale;
    config.convergence_diameter = m.convergence_diameter;
    return config;
}

TrainConfig train_config(const oc_method& m) {
    TrainConfig config;
    config.learning_rate = m.learning_rate;
    config.epochs = m.epochs;
    config.l2_penalty = m.l2_penalty;
    config.positive_weight = m.positive_weight;
    config.seed = m.seed;
    config.validate();
    return config;
}

TrainerPtr make_trainer(const oc_method& m, size_t threads) {
    const std::string name = m.name ? m.name : kind_name(m.kind);
    switch (m.kind) {
        case OC_METHOD_BRUTE_FORCE:
            return std::make_shared<BruteForceTrainer>(name, brute_force_config(m, threads));
        case OC_METHOD_NELDER_MEAD:
            return std::make_shared<NelderMeadTrainer>(name, nelder_mead_config(m), m.starts, m.seed);
        case OC_METHOD_LOGISTIC:
            return std::make_shared<LogisticTrainer>(name, train_config(m));
    }
    fail(ErrorKind::InvalidArgument, "unknown method kind");
}

}  // namespace

extern "C" {

const char* oc_version(void) { return "1.0.0"; }

const char* oc_last_error(void) { return g_last_error.c_str(); }

const char* oc_status_name(oc_status status) {
    switch (status) {
        case OC_OK: return "ok";
        case OC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case OC_ERR_SCHEMA: return "schema error";
        case OC_ERR_DATA: return "data error";
        case OC_ERR_IO: return "I/O error";
        case OC_ERR_RESOURCE: return "resource error";
        case OC_ERR_EVALUATION: return "evaluation error";
        case OC_ERR_OPTIMIZATION: return "optimization error";
        case OC_ERR_TRAINING: return "training error";
        case OC_ERR_HARNESS: return "harness error";
        case OC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void oc_string_free(char* text) { std::free(text); }

oc_status oc_threads_from_env(size_t* out) {
    return guarded([&] {
        require(out, "output");
        const char* text = std::getenv("OPTCHOICE_THREADS");
        if (!text || !*text) {
            *out = 1;
            return;
        }
        char* end = nullptr;
        const long long value = std::strtoll(text, &end, 10);
        if (*end != '\0' || value < 1)
            fail(ErrorKind::InvalidArgument, std::string("OPTCHOICE_THREADS must be an integer >= 1, got '") + text +
                                                 "'");
        *out = static_cast<size_t>(value);
    });
}

oc_status oc_dataset_load(const char* path, int strict_range, oc_dataset** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "output");
        *out = new oc_dataset{load_dataset(path, strict_range != 0)};
    });
}

oc_status oc_dataset_save(const oc_dataset* dataset, const char* path) {
    return guarded([&] {
        require(dataset, "dataset");
        require(path, "path");
        save_dataset(path, dataset->value);
    });
}

void oc_dataset_free(oc_dataset* dataset) { delete dataset; }

size_t oc_dataset_lot_count(const oc_dataset* dataset) { return dataset ? dataset->value.lot_count() : 0; }

size_t oc_dataset_choice_count(const oc_dataset* dataset) { return dataset ? dataset->value.choice_count() : 0; }

size_t oc_dataset_dimension(const oc_dataset* dataset) { return dataset ? dataset->value.dimension() : 0; }

const char* oc_dataset_feature_name(const oc_dataset* dataset, size_t index) {
    if (!dataset || index >= dataset->value.dimension()) return nullptr;
    return dataset->value.feature_names()[index].c_str();
}

int oc_dataset_equal(const oc_dataset* a, const oc_dataset* b) {
    if (!a || !b) return 0;
    return a->value == b->value ? 1 : 0;
}

oc_status oc_dataset_negate(const oc_dataset* dataset, oc_dataset** out) {
    return guarded([&] {
        require(dataset, "dataset");
        require(out, "output");
        std::vector<Lot> lots;
        for (const auto& lot : dataset->value.lots()) {
            std::vector<double> values(lot.values().begin(), lot.values().end());
            for (auto& v : values) v = v == 0.0 ? 0.0 : -v;
            lots.emplace_back(lot.id(), lot.dimension(), std::move(values), lot.prime());
        }
        *out = new oc_dataset{Dataset(dataset->value.feature_names(), std::move(lots))};
    });
}

oc_status oc_dataset_augment(const oc_dataset* dataset, const oc_augment_entry* entries, size_t count,
                             oc_dataset** out) {
    return guarded([&] {
        require(dataset, "dataset");
        require(out, "output");
        *out = new oc_dataset{augment(dataset->value, to_spec(entries, count))};
    });
}

void oc_gen_engine_preset(oc_gen_config* out) {
    static const GenConfig preset = engine_preset();
    if (!out) return;
    out->lots = preset.lots;
    out->choices_min = preset.choices_min;
    out->choices_max = preset.choices_max;
    out->dimension = preset.dimension;
    out->binary_feature_index = preset.binary_feature_index ? static_cast<long>(*preset.binary_feature_index) : -1;
    out->planted_weights = preset.planted_weights.data();
    out->noise_sigma = preset.noise_sigma;
    out->prime_probability = preset.prime_probability;
    out->seed = preset.seed;
    out->invert = preset.invert ? 1 : 0;
}

oc_status oc_generate(const oc_gen_config* config, oc_dataset** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "output");
        if (config->dimension) require(config->planted_weights, "planted weights");
        GenConfig gen;
        gen.lots = config->lots;
        gen.choices_min = config->choices_min;
        gen.choices_max = config->choices_max;
        gen.dimension = config->dimension;
        if (config->binary_feature_index >= 0)
            gen.binary_feature_index = static_cast<std::size_t>(config->binary_feature_index);
        gen.planted_weights.assign(config->planted_weights, config->planted_weights + config->dimension);
        gen.noise_sigma = config->noise_sigma;
        gen.prime_probability = config->prime_probability;
        gen.seed = config->seed;
        gen.invert = config->invert != 0;
        *out = new oc_dataset{generate(gen)};
    });
}

oc_status oc_scorer_linear(const oc_dataset* schema, const double* coefficients, size_t count, oc_scorer** out) {
    return guarded([&] {
        require(schema, "schema");
        require(out, "output");
        if (count) require(coefficients, "coefficients");
        if (count != schema->value.dimension())
            fail(ErrorKind::InvalidArgument, "expected " + std::to_string(schema->value.dimension()) +
                                                 " coefficients, got " + std::to_string(count));
        LinearScorer scorer{std::vector<double>(coefficients, coefficients + count)};
        for (double c : scorer.coefficients)
            if (!std::isfinite(c)) fail(ErrorKind::InvalidArgument, "coefficients must be finite");
        *out = new oc_scorer{make_scorer_file(schema->value.feature_names(), scorer)};
    });
}

oc_status oc_scorer_load(const char* path, oc_scorer** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "output");
        *out = new oc_scorer{load_scorer(path)};
    });
}

oc_status oc_scorer_save(const oc_scorer* scorer, const char* path) {
    return guarded([&] {
        require(scorer, "scorer");
        require(path, "path");
        save_scorer(path, scorer->value);
    });
}

void oc_scorer_free(oc_scorer* scorer) { delete scorer; }

oc_scorer_kind oc_scorer_get_kind(const oc_scorer* scorer) {
    return scorer && scorer->value.kind == ScorerKind::Logistic ? OC_SCORER_LOGISTIC : OC_SCORER_LINEAR;
}

size_t oc_scorer_dimension(const oc_scorer* scorer) { return scorer ? scorer->value.coefficients.size() : 0; }

double oc_scorer_coefficient(const oc_scorer* scorer, size_t index) {
    if (!scorer || index >= scorer->value.coefficients.size()) return std::numeric_limits<double>::quiet_NaN();
    return scorer->value.coefficients[index];
}

const char* oc_scorer_feature_name(const oc_scorer* scorer, size_t index) {
    if (!scorer || index >= scorer->value.names.size()) return nullptr;
    return scorer->value.names[index].c_str();
}

oc_status oc_scorer_negate(const oc_scorer* scorer, oc_scorer** out) {
    return guarded([&] {
        require(scorer, "scorer");
        require(out, "output");
        ScorerFile negated = scorer->value;
        for (auto& c : negated.coefficients) c = c == 0.0 ? 0.0 : -c;
        *out = new oc_scorer{std::move(negated)};
    });
}

oc_status oc_scorer_describe(const oc_scorer* scorer, char** out) {
    return guarded([&] {
        require(scorer, "scorer");
        require(out, "output");
        std::ostringstream os;
        write_scorer(os, scorer->value);
        *out = duplicate(os.str());
    });
}

oc_status oc_success_rate(const oc_scorer* scorer, const oc_dataset* dataset, double* out) {
    return guarded([&] {
        require(scorer, "scorer");
        require(dataset, "dataset");
        require(out, "output");
        *out = success_rate(scorer->value.scoring_function(dataset->value.feature_names()), dataset->value);
    });
}

oc_status oc_diagnose(const oc_scorer* scorer, const oc_dataset* dataset, oc_diagnostics* out) {
    return guarded([&] {
        require(scorer, "scorer");
        require(dataset, "dataset");
        require(out, "output");
        const auto g = scorer->value.scoring_function(dataset->value.feature_names());
        const auto predictions = predict_all(g, dataset->value);
        oc_diagnostics result;
        result.pointwise_accuracy = pointwise_accuracy(predictions, dataset->value);
        result.lotwise_auc = lotwise_auc(g, dataset->value);
        result.success_rate = success_rate(g, dataset->value);
        *out = result;
    });
}

void oc_method_defaults(oc_method_kind kind, oc_method* out) {
    if (!out) return;
    *out = oc_method{};
    out->kind = kind;
    out->name = nullptr;
    const BruteForceConfig bf;
    out->bound = bf.bound;
    out->tolerance = bf.tolerance;
    out->pair_cap = bf.pair_cap;
    const NelderMeadConfig nm;
    out->starts = 16;
    out->max_iterations = nm.max_iterations;
    out->simplex_scale = nm.simplex_scale;
    out->convergence_diameter = nm.convergence_diameter;
    const TrainConfig lr;
    out->learning_rate = lr.learning_rate;
    out->epochs = lr.epochs;
    out->l2_penalty = lr.l2_penalty;
    out->positive_weight = lr.positive_weight;
    out->seed = 1;
}

oc_status oc_train(const oc_method* method, const oc_dataset* dataset, size_t threads, oc_scorer** out,
                   double* rate) {
    return guarded([&] {
        require(method, "method");
        require(dataset, "dataset");
        require(out, "output");
        const Dataset& data = dataset->value;
        ScorerFile file;
        switch (method->kind) {
            case OC_METHOD_BRUTE_FORCE:
                file = make_scorer_file(data.feature_names(),
                                        brute_force_search(data, brute_force_config(*method, threads)).scorer);
                break;
            case OC_METHOD_NELDER_MEAD: {
                auto config = nelder_mead_config(*method);
                config.starts = default_starts(data.dimension(), method->starts, method->seed);
                file = make_scorer_file(data.feature_names(), maximize_success_rate(data, config).scorer);
                break;
            }
            case OC_METHOD_LOGISTIC:
                file = make_scorer_file(data.feature_names(), fit_logistic(data, train_config(*method)));
                break;
            default: fail(ErrorKind::InvalidArgument, "unknown method kind");
        }
        const double achieved = success_rate(file.scoring_function(data.feature_names()), data);
        *out = new oc_scorer{std::move(file)};
        if (rate) *rate = achieved;
    });
}

oc_status oc_leave_one_lot_out(const oc_method* method, const oc_dataset* dataset, size_t threads, double* out) {
    return guarded([&] {
        require(method, "method");
        require(dataset, "dataset");
        require(out, "output");
        *out = leave_one_lot_out(*make_trainer(*method, 1), dataset->value, threads);
    });
}

oc_status oc_report_build(const oc_dataset* dataset, const oc_method* methods, size_t method_count,
                          const oc_augment_entry* augment, size_t augment_count, oc_eval_mode mode, size_t threads,
                          oc_report** out) {
    return guarded([&] {
        require(dataset, "dataset");
        require(out, "output");
        if (method_count) require(methods, "methods");
        std::vector<TrainerPtr> trainers;
        for (size_t i = 0; i < method_count; ++i) trainers.push_back(make_trainer(methods[i], 1));
        std::optional<AugmentationSpec> spec;
        if (augment_count) spec = to_spec(augment, augment_count);
        EvalOptions options;
        switch (mode) {
            case OC_EVAL_FULL: options.mode = EvalMode::Full; break;
            case OC_EVAL_LOO: options.mode = EvalMode::Loo; break;
            case OC_EVAL_BOTH: options.mode = EvalMode::Both; break;
            default: fail(ErrorKind::InvalidArgument, "unknown evaluation mode");
        }
        options.threads = threads;
        *out = new oc_report{build_report(dataset->value, trainers, spec, options)};
    });
}

void oc_report_free(oc_report* report) { delete report; }

size_t oc_report_row_count(const oc_report* report) { return report ? report->value.rows.size() : 0; }

oc_status oc_report_row(const oc_report* report, size_t index, const char** method, const char** variant,
                        double* full_rate, double* loo_rate) {
    return guarded([&] {
        require(report, "report");
        if (index >= report->value.rows.size()) fail(ErrorKind::InvalidArgument, "report row index out of range");
        const auto& row = report->value.rows[index];
        const double nan = std::numeric_limits<double>::quiet_NaN();
        if (method) *method = row.method.c_str();
        if (variant) *variant = to_string(row.variant);
        if (full_rate) *full_rate = row.full_data_rate.value_or(nan);
        if (loo_rate) *loo_rate = row.loo_rate.value_or(nan);
    });
}

oc_status oc_report_text(const oc_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "output");
        *out = duplicate(format_text(report->value));
    });
}

oc_status oc_report_tsv(const oc_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "output");
        *out = duplicate(format_tsv(report->value));
    });
}

}  // extern "C"
