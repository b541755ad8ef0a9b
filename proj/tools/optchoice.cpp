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

// optchoice command-line tool. Talks to the library only through the C API.
//
// Exit codes: 0 success, 2 usage/config error, 3 data error, 4 runtime or
// resource error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "optchoice/optchoice.h"

namespace {

using json = nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitRuntime = 4;

struct CliError {
    int code;
    std::string message;
};

int exit_code(oc_status status) {
    switch (status) {
        case OC_OK: return 0;
        case OC_ERR_INVALID_ARGUMENT: return kExitUsage;
        case OC_ERR_SCHEMA:
        case OC_ERR_DATA:
        case OC_ERR_IO: return kExitData;
        default: return kExitRuntime;
    }
}

void check(oc_status status) {
    if (status != OC_OK)
        throw CliError{exit_code(status), std::string(oc_status_name(status)) + ": " + oc_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw CliError{kExitUsage, message}; }

struct DatasetDeleter {
    void operator()(oc_dataset* d) const { oc_dataset_free(d); }
};
struct ScorerDeleter {
    void operator()(oc_scorer* s) const { oc_scorer_free(s); }
};
struct ReportDeleter {
    void operator()(oc_report* r) const { oc_report_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { oc_string_free(s); }
};

using DatasetPtr = std::unique_ptr<oc_dataset, DatasetDeleter>;
using ScorerPtr = std::unique_ptr<oc_scorer, ScorerDeleter>;
using ReportPtr = std::unique_ptr<oc_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

size_t threads() {
    size_t n = 1;
    check(oc_threads_from_env(&n));
    return n;
}

DatasetPtr load(const std::string& path, bool strict) {
    oc_dataset* raw = nullptr;
    check(oc_dataset_load(path.c_str(), strict ? 1 : 0, &raw));
    return DatasetPtr(raw);
}

DatasetPtr negated(const oc_dataset* dataset) {
    oc_dataset* raw = nullptr;
    check(oc_dataset_negate(dataset, &raw));
    return DatasetPtr(raw);
}

ScorerPtr negated(const oc_scorer* scorer) {
    oc_scorer* raw = nullptr;
    check(oc_scorer_negate(scorer, &raw));
    return ScorerPtr(raw);
}

std::string describe(const oc_scorer* scorer) {
    char* raw = nullptr;
    check(oc_scorer_describe(scorer, &raw));
    return StringPtr(raw).get();
}

std::string format4(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

// "feature:aggregate:new_name"; new_name defaults to "aggregate.feature".
struct AugmentArg {
    std::string feature;
    oc_aggregate aggregate;
    std::string new_name;
};

oc_aggregate parse_aggregate(const std::string& text) {
    if (text == "min") return OC_AGG_MIN;
    if (text == "max") return OC_AGG_MAX;
    if (text == "mean") return OC_AGG_MEAN;
    usage_error("unknown aggregate '" + text + "' (expected min, max or mean)");
}

AugmentArg parse_augment(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3 || parts[0].empty())
        usage_error("augmentation '" + text + "' must look like feature:min|max|mean[:new_name]");
    AugmentArg arg{parts[0], parse_aggregate(parts[1]), parts.size() == 3 ? parts[2] : parts[1] + "." + parts[0]};
    return arg;
}

std::vector<oc_augment_entry> to_entries(const std::vector<AugmentArg>& args) {
    std::vector<oc_augment_entry> entries;
    for (const auto& a : args) entries.push_back({a.feature.c_str(), a.aggregate, a.new_name.c_str()});
    return entries;
}

DatasetPtr augmented(const oc_dataset* dataset, const std::vector<AugmentArg>& args) {
    const auto entries = to_entries(args);
    oc_dataset* raw = nullptr;
    check(oc_dataset_augment(dataset, entries.data(), entries.size(), &raw));
    return DatasetPtr(raw);
}

oc_method_kind parse_method_kind(const std::string& text) {
    if (text == "bruteforce") return OC_METHOD_BRUTE_FORCE;
    if (text == "neldermead") return OC_METHOD_NELDER_MEAD;
    if (text == "logistic") return OC_METHOD_LOGISTIC;
    usage_error("unknown method '" + text + "' (expected bruteforce, neldermead or logistic)");
}

// Method parameters shared by the per-method subcommands and `loo`.
struct MethodArgs {
    unsigned bound = 0;
    double tolerance = 0;
    uint64_t cap = 0;
    size_t starts = 0;
    size_t max_iterations = 0;
    double simplex_scale = 0;
    double learning_rate = 0;
    size_t epochs = 0;
    double l2 = 0;
    double positive_weight = 0;
    uint64_t seed = 0;

    void reset() {
        oc_method m;
        oc_method_defaults(OC_METHOD_BRUTE_FORCE, &m);
        bound = m.bound;
        tolerance = m.tolerance;
        cap = m.pair_cap;
        starts = m.starts;
        max_iterations = m.max_iterations;
        simplex_scale = m.simplex_scale;
        learning_rate = m.learning_rate;
        epochs = m.epochs;
        l2 = m.l2_penalty;
        positive_weight = m.positive_weight;
        seed = m.seed;
    }

    oc_method to_method(oc_method_kind kind) const {
        oc_method m;
        oc_method_defaults(kind, &m);
        m.bound = bound;
        m.tolerance = tolerance;
        m.pair_cap = cap;
        m.starts = starts;
        m.max_iterations = max_iterations;
        m.simplex_scale = simplex_scale;
        m.learning_rate = learning_rate;
        m.epochs = epochs;
        m.l2_penalty = l2;
        m.positive_weight = positive_weight;
        m.seed = seed;
        return m;
    }
};

void add_brute_force_options(CLI::App* cmd, MethodArgs& args) {
    cmd->add_option("-n,--n", args.bound, "Coefficient bound: integers 0..n")->capture_default_str();
    cmd->add_option("--tolerance", args.tolerance, "Success-rate tolerance for the minimal-sum rule")
        ->capture_default_str();
    cmd->add_option("--cap", args.cap, "Maximum (candidate, lot) evaluations")->capture_default_str();
}

void add_nelder_mead_options(CLI::App* cmd, MethodArgs& args) {
    cmd->add_option("--starts", args.starts, "Number of starting points")->capture_default_str();
    cmd->add_option("--max-iter", args.max_iterations, "Iterations per start (0: 500*d)")->capture_default_str();
    cmd->add_option("--scale", args.simplex_scale, "Initial simplex edge length")->capture_default_str();
}

void add_logistic_options(CLI::App* cmd, MethodArgs& args) {
    cmd->add_option("--lr", args.learning_rate, "Learning rate")->capture_default_str();
    cmd->add_option("--epochs", args.epochs, "Full-batch gradient steps")->capture_default_str();
    cmd->add_option("--l2", args.l2, "L2 penalty")->capture_default_str();
    cmd->add_option("--positive-weight", args.positive_weight, "Loss weight of prime samples")
        ->capture_default_str();
}

// ---- gen ---------------------------------------------------------------

struct GenArgs {
    std::string preset;
    std::optional<size_t> lots;
    std::vector<size_t> choices;
    std::optional<size_t> dim;
    std::optional<long> binary_index;
    std::vector<double> weights;
    std::optional<double> noise;
    std::optional<double> prime_probability;
    std::optional<uint64_t> seed;
    bool invert = false;
    std::string out;
};

DatasetPtr generate(const GenArgs& args) {
    oc_gen_config config{};
    std::vector<double> weights;
    if (args.preset == "engine") {
        oc_gen_engine_preset(&config);
        weights.assign(config.planted_weights, config.planted_weights + config.dimension);
    } else if (args.preset.empty()) {
        config.lots = 100;
        config.choices_min = 2;
        config.choices_max = 10;
        config.dimension = 2;
        config.binary_feature_index = -1;
        config.noise_sigma = 0.0;
        config.prime_probability = 1.0;
        config.seed = 1;
    } else {
        usage_error("unknown preset '" + args.preset + "'");
    }
    if (args.lots) config.lots = *args.lots;
    if (!args.choices.empty()) {
        config.choices_min = args.choices[0];
        config.choices_max = args.choices[1];
    }
    if (args.dim) config.dimension = *args.dim;
    if (args.binary_index) config.binary_feature_index = *args.binary_index;
    if (args.noise) config.noise_sigma = *args.noise;
    if (args.prime_probability) config.prime_probability = *args.prime_probability;
    if (args.seed) config.seed = *args.seed;
    if (args.invert) config.invert = 1;
    if (!args.weights.empty())
        weights = args.weights;
    else if (weights.size() != config.dimension)
        weights.assign(config.dimension, 1.0);
    if (weights.size() != config.dimension)
        usage_error("--weights needs " + std::to_string(config.dimension) + " values");
    config.planted_weights = weights.data();
    oc_dataset* raw = nullptr;
    check(oc_generate(&config, &raw));
    return DatasetPtr(raw);
}

int cmd_gen(const GenArgs& args) {
    const auto dataset = generate(args);
    check(oc_dataset_save(dataset.get(), args.out.c_str()));
    std::cout << "lots: " << oc_dataset_lot_count(dataset.get()) << "\n"
              << "choices: " << oc_dataset_choice_count(dataset.get()) << "\n";
    return 0;
}

// ---- single-method subcommands ------------------------------------------

struct DataArgs {
    std::string data;
    bool strict = false;
    bool negate = false;
};

void add_data_options(CLI::App* cmd, DataArgs& args) {
    cmd->add_option("--data", args.data, "Dataset CSV")->required();
    cmd->add_flag("--strict", args.strict, "Require every feature in [0, 1]");
    cmd->add_flag("--negate-features", args.negate, "Search on negated features (smaller is better)");
}

int cmd_train(oc_method_kind kind, const DataArgs& data, const MethodArgs& margs, const std::string& out) {
    auto dataset = load(data.data, data.strict);
    if (data.negate) dataset = negated(dataset.get());
    const oc_method method = margs.to_method(kind);
    oc_scorer* raw = nullptr;
    double rate = 0.0;
    check(oc_train(&method, dataset.get(), threads(), &raw, &rate));
    ScorerPtr scorer(raw);
    // Report and save the scorer on the original features.
    if (data.negate) scorer = negated(scorer.get());
    std::cout << "success_rate: " << format4(rate) << "\n" << describe(scorer.get());
    if (!out.empty()) check(oc_scorer_save(scorer.get(), out.c_str()));
    return 0;
}

int cmd_loo(const DataArgs& data, const std::string& method_name, const MethodArgs& margs,
            const std::vector<std::string>& augment_specs) {
    auto dataset = load(data.data, data.strict);
    if (data.negate) dataset = negated(dataset.get());
    const oc_method method = margs.to_method(parse_method_kind(method_name));
    double rate = 0.0;
    if (augment_specs.empty()) {
        check(oc_leave_one_lot_out(&method, dataset.get(), threads(), &rate));
    } else {
        std::vector<AugmentArg> args;
        for (const auto& s : augment_specs) args.push_back(parse_augment(s));
        const auto entries = to_entries(args);
        oc_report* raw = nullptr;
        check(oc_report_build(dataset.get(), &method, 1, entries.data(), entries.size(), OC_EVAL_LOO, threads(),
                              &raw));
        ReportPtr report(raw);
        check(oc_report_row(report.get(), 1, nullptr, nullptr, nullptr, &rate));
    }
    std::cout << "loo_rate: " << format4(rate) << "\n";
    return 0;
}

int cmd_augment(const DataArgs& data, const std::vector<std::string>& specs, const std::string& out) {
    const auto dataset = load(data.data, data.strict);
    std::vector<AugmentArg> args;
    for (const auto& s : specs) args.push_back(parse_augment(s));
    const auto result = augmented(dataset.get(), args);
    check(oc_dataset_save(result.get(), out.c_str()));
    std::cout << "dimension: " << oc_dataset_dimension(result.get()) << "\n";
    return 0;
}

int cmd_diagnose(const DataArgs& data, const std::string& scorer_path) {
    const auto dataset = load(data.data, data.strict);
    oc_scorer* raw = nullptr;
    check(oc_scorer_load(scorer_path.c_str(), &raw));
    ScorerPtr scorer(raw);
    oc_diagnostics diag{};
    check(oc_diagnose(scorer.get(), dataset.get(), &diag));
    std::cout << "accuracy: " << format4(diag.pointwise_accuracy) << "\n"
              << "auc: " << format4(diag.lotwise_auc) << "\n"
              << "success: " << format4(diag.success_rate) << "\n";
    return 0;
}

// ---- run ----------------------------------------------------------------

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : object.items())
        if (!allowed.count(key)) usage_error("unknown key '" + key + "' in " + where);
}

template <class T>
void read_key(const json& object, const char* key, T& target) {
    if (object.contains(key)) target = object.at(key).get<T>();
}

DatasetPtr run_data(const json& data) {
    if (!data.is_object()) usage_error("'data' must be an object");
    reject_unknown_keys(data, {"file", "strict", "generator"}, "data");
    if (data.contains("file") == data.contains("generator"))
        usage_error("'data' needs exactly one of 'file' or 'generator'");
    if (data.contains("file")) return load(data.at("file").get<std::string>(), data.value("strict", false));

    const json& g = data.at("generator");
    if (!g.is_object()) usage_error("'generator' must be an object");
    reject_unknown_keys(g,
                        {"preset", "lots", "choices_min", "choices_max", "dimension", "binary_feature_index",
                         "planted_weights", "noise_sigma", "prime_probability", "seed", "invert"},
                        "generator");
    GenArgs args;
    read_key(g, "preset", args.preset);
    if (g.contains("lots")) args.lots = g.at("lots").get<size_t>();
    if (g.contains("choices_min") || g.contains("choices_max")) {
        if (!(g.contains("choices_min") && g.contains("choices_max")))
            usage_error("'choices_min' and 'choices_max' go together");
        args.choices = {g.at("choices_min").get<size_t>(), g.at("choices_max").get<size_t>()};
    }
    if (g.contains("dimension")) args.dim = g.at("dimension").get<size_t>();
    if (g.contains("binary_feature_index")) args.binary_index = g.at("binary_feature_index").get<long>();
    read_key(g, "planted_weights", args.weights);
    if (g.contains("noise_sigma")) args.noise = g.at("noise_sigma").get<double>();
    if (g.contains("prime_probability")) args.prime_probability = g.at("prime_probability").get<double>();
    if (g.contains("seed")) args.seed = g.at("seed").get<uint64_t>();
    read_key(g, "invert", args.invert);
    return generate(args);
}

struct MethodSpec {
    std::string name;
    oc_method method;
};

MethodSpec run_method(const json& m) {
    if (!m.is_object()) usage_error("each method must be an object");
    reject_unknown_keys(m,
                        {"type", "name", "n", "tolerance", "cap", "starts", "max_iterations", "simplex_scale",
                         "convergence_diameter", "learning_rate", "epochs", "l2", "positive_weight", "seed"},
                        "method");
    if (!m.contains("type")) usage_error("method without 'type'");
    const std::string type = m.at("type").get<std::string>();
    MethodSpec spec;
    oc_method_defaults(parse_method_kind(type), &spec.method);
    spec.name = m.value("name", type);
    read_key(m, "n", spec.method.bound);
    read_key(m, "tolerance", spec.method.tolerance);
    read_key(m, "cap", spec.method.pair_cap);
    read_key(m, "starts", spec.method.starts);
    read_key(m, "max_iterations", spec.method.max_iterations);
    read_key(m, "simplex_scale", spec.method.simplex_scale);
    read_key(m, "convergence_diameter", spec.method.convergence_diameter);
    read_key(m, "learning_rate", spec.method.learning_rate);
    read_key(m, "epochs", spec.method.epochs);
    read_key(m, "l2", spec.method.l2_penalty);
    read_key(m, "positive_weight", spec.method.positive_weight);
    read_key(m, "seed", spec.method.seed);
    return spec;
}

int cmd_run(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) usage_error("cannot open config '" + config_path + "'");
    json config;
    try {
        config = json::parse(in);
    } catch (const json::exception& e) {
        usage_error(std::string("config is not valid JSON: ") + e.what());
    }

    std::vector<MethodSpec> specs;
    std::vector<AugmentArg> augment;
    oc_eval_mode mode = OC_EVAL_BOTH;
    bool negate = false;
    std::string output;
    DatasetPtr dataset;
    try {
        if (!config.is_object()) usage_error("config must be a JSON object");
        reject_unknown_keys(config, {"data", "augment", "methods", "evaluation", "negate_features", "output"},
                            "config");
        if (!config.contains("data")) usage_error("config has no 'data' section");
        if (!config.contains("methods") || !config.at("methods").is_array() || config.at("methods").empty())
            usage_error("config lists no methods");
        for (const auto& m : config.at("methods")) specs.push_back(run_method(m));
        if (config.contains("augment")) {
            for (const auto& a : config.at("augment")) {
                reject_unknown_keys(a, {"feature", "aggregate", "name"}, "augment entry");
                const std::string feature = a.at("feature").get<std::string>();
                const std::string aggregate = a.at("aggregate").get<std::string>();
                augment.push_back({feature, parse_aggregate(aggregate), a.value("name", aggregate + "." + feature)});
            }
        }
        const std::string evaluation = config.value("evaluation", std::string("both"));
        if (evaluation == "full")
            mode = OC_EVAL_FULL;
        else if (evaluation == "loo")
            mode = OC_EVAL_LOO;
        else if (evaluation != "both")
            usage_error("'evaluation' must be full, loo or both");
        read_key(config, "negate_features", negate);
        read_key(config, "output", output);
        dataset = run_data(config.at("data"));
    } catch (const json::exception& e) {
        usage_error(std::string("bad config value: ") + e.what());
    }

    if (negate) dataset = negated(dataset.get());
    std::vector<oc_method> methods;
    for (auto& s : specs) {
        s.method.name = s.name.c_str();
        methods.push_back(s.method);
    }
    const auto entries = to_entries(augment);
    oc_report* raw = nullptr;
    check(oc_report_build(dataset.get(), methods.data(), methods.size(), entries.empty() ? nullptr : entries.data(),
                          entries.size(), mode, threads(), &raw));
    ReportPtr report(raw);

    char* text_raw = nullptr;
    check(oc_report_text(report.get(), &text_raw));
    StringPtr text(text_raw);
    char* tsv_raw = nullptr;
    check(oc_report_tsv(report.get(), &tsv_raw));
    StringPtr tsv(tsv_raw);

    std::cout << text.get();
    if (!output.empty()) {
        for (const auto& [path, body] : {std::pair{output, text.get()}, std::pair{output + ".tsv", tsv.get()}}) {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            out << body;
            if (!out) throw CliError{kExitData, "cannot write '" + path + "'"};
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal-choice learning: pick the prime of each lot"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset");
    gen_cmd->add_option("--preset", gen.preset, "Named configuration (engine)");
    gen_cmd->add_option("--lots", gen.lots, "Number of lots");
    gen_cmd->add_option("--choices", gen.choices, "Lot size range: MIN MAX")->expected(2);
    gen_cmd->add_option("--dim", gen.dim, "Number of features");
    gen_cmd->add_option("--binary-index", gen.binary_index, "0-based index of the binary feature");
    gen_cmd->add_option("--weights", gen.weights, "Planted utility weights");
    gen_cmd->add_option("--noise", gen.noise, "Utility noise sigma");
    gen_cmd->add_option("--prime-prob", gen.prime_probability, "Probability that a lot has a prime");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_flag("--invert", gen.invert, "Emit 1 - x (smaller is better)");
    gen_cmd->add_option("--out", gen.out, "Output CSV")->required();

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Run a configured experiment and write its report");
    run_cmd->add_option("--config", config_path, "JSON run configuration")->required();

    DataArgs data;
    MethodArgs margs;
    margs.reset();
    std::string out;
    std::string method_name;
    std::vector<std::string> augment_specs;
    std::string scorer_path;

    auto* bf_cmd = app.add_subcommand("bruteforce", "Exhaustive integer-coefficient search");
    add_data_options(bf_cmd, data);
    add_brute_force_options(bf_cmd, margs);
    bf_cmd->add_option("--out", out, "Write the scorer file");

    auto* nm_cmd = app.add_subcommand("neldermead", "Multi-start Nelder-Mead on the success rate");
    add_data_options(nm_cmd, data);
    add_nelder_mead_options(nm_cmd, margs);
    nm_cmd->add_option("--seed", margs.seed, "Seed for random starts")->capture_default_str();
    nm_cmd->add_option("--out", out, "Write the scorer file");

    auto* lr_cmd = app.add_subcommand("logistic", "Point-wise logistic regression baseline");
    add_data_options(lr_cmd, data);
    add_logistic_options(lr_cmd, margs);
    lr_cmd->add_option("--seed", margs.seed, "Initialization seed")->capture_default_str();
    lr_cmd->add_option("--out", out, "Write the model file");

    auto* loo_cmd = app.add_subcommand("loo", "Leave-one-lot-out success rate of one method");
    add_data_options(loo_cmd, data);
    loo_cmd->add_option("--method", method_name, "bruteforce, neldermead or logistic")->required();
    add_brute_force_options(loo_cmd, margs);
    add_nelder_mead_options(loo_cmd, margs);
    add_logistic_options(loo_cmd, margs);
    loo_cmd->add_option("--seed", margs.seed, "Method seed")->capture_default_str();
    loo_cmd->add_option("--augment", augment_specs, "feature:min|max|mean[:name], repeatable");

    auto* aug_cmd = app.add_subcommand("augment", "Append lot-aggregate features");
    add_data_options(aug_cmd, data);
    aug_cmd->add_option("--add", augment_specs, "feature:min|max|mean[:name], repeatable")->required();
    aug_cmd->add_option("--out", out, "Output CSV")->required();

    auto* diag_cmd = app.add_subcommand("diagnose", "Point-wise accuracy, lot-wise AUC and success rate");
    add_data_options(diag_cmd, data);
    diag_cmd->add_option("--scorer", scorer_path, "Scorer or model file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (run_cmd->parsed()) return cmd_run(config_path);
        if (bf_cmd->parsed()) return cmd_train(OC_METHOD_BRUTE_FORCE, data, margs, out);
        if (nm_cmd->parsed()) return cmd_train(OC_METHOD_NELDER_MEAD, data, margs, out);
        if (lr_cmd->parsed()) return cmd_train(OC_METHOD_LOGISTIC, data, margs, out);
        if (loo_cmd->parsed()) return cmd_loo(data, method_name, margs, augment_specs);
        if (aug_cmd->parsed()) return cmd_augment(data, augment_specs, out);
        if (diag_cmd->parsed()) return cmd_diagnose(data, scorer_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return kExitUsage;
}
