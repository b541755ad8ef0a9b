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

// Evaluation protocol: full-data success rate and leave-one-lot-out
// cross-validation of any trainer, assembled into a method x variant table.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "optchoice/baselines.hpp"
#include "optchoice/core.hpp"
#include "optchoice/features.hpp"
#include "optchoice/optimize.hpp"

namespace optchoice {

class Trainer {
public:
    virtual ~Trainer() = default;
    virtual const std::string& name() const = 0;
    virtual ScoringFunction train(const Dataset& training) const = 0;
};

using TrainerPtr = std::shared_ptr<const Trainer>;

// Wraps a plain callable.
class FunctionTrainer final : public Trainer {
public:
    using Fn = std::function<ScoringFunction(const Dataset&)>;
    FunctionTrainer(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
    const std::string& name() const override { return name_; }
    ScoringFunction train(const Dataset& training) const override { return fn_(training); }

private:
    std::string name_;
    Fn fn_;
};

class BruteForceTrainer final : public Trainer {
public:
    BruteForceTrainer(std::string name, BruteForceConfig config) : name_(std::move(name)), config_(config) {}
    const std::string& name() const override { return name_; }
    ScoringFunction train(const Dataset& training) const override;

private:
    std::string name_;
    BruteForceConfig config_;
};

// Builds default_starts(d, start_count, seed) for whatever dimension it is
// trained on; the other fields of `config` are used as given.
class NelderMeadTrainer final : public Trainer {
public:
    NelderMeadTrainer(std::string name, NelderMeadConfig config, std::size_t start_count, std::uint64_t seed)
        : name_(std::move(name)), config_(std::move(config)), start_count_(start_count), seed_(seed) {}
    const std::string& name() const override { return name_; }
    ScoringFunction train(const Dataset& training) const override;

private:
    std::string name_;
    NelderMeadConfig config_;
    std::size_t start_count_;
    std::uint64_t seed_;
};

class LogisticTrainer final : public Trainer {
public:
    LogisticTrainer(std::string name, TrainConfig config) : name_(std::move(name)), config_(config) {}
    const std::string& name() const override { return name_; }
    ScoringFunction train(const Dataset& training) const override;

private:
    std::string name_;
    TrainConfig config_;
};

// Trains `inner` on the augmented training split. The returned scorer
// augments whichever lot it is asked to score, so held-out lots never
// contribute to training-side statistics.
class AugmentingTrainer final : public Trainer {
public:
    AugmentingTrainer(TrainerPtr inner, AugmentationSpec spec) : inner_(std::move(inner)), spec_(std::move(spec)) {}
    const std::string& name() const override { return inner_->name(); }
    ScoringFunction train(const Dataset& training) const override;

private:
    TrainerPtr inner_;
    AugmentationSpec spec_;
};

// Trains on every lot but one and tests on the held-out lot, for each lot.
// Folds may run on `threads` threads; results are combined in fold order.
// A failing fold raises ErrorKind::Harness naming it.
double leave_one_lot_out(const Trainer& trainer, const Dataset& dataset, std::size_t threads = 1);

enum class Variant { Original, Extended };
enum class EvalMode { Full, Loo, Both };

const char* to_string(Variant variant) noexcept;

struct ReportRow {
    std::string method;
    Variant variant = Variant::Original;
    std::optional<double> full_data_rate;
    std::optional<double> loo_rate;
    std::size_t lots = 0;
    std::size_t choices = 0;
};

struct EvalReport {
    std::vector<ReportRow> rows;
};

struct EvalOptions {
    EvalMode mode = EvalMode::Both;
    std::size_t threads = 1;
};

// One row per trainer on the original data, followed by its extended-data
// row when `spec` is given.
EvalReport build_report(const Dataset& dataset, const std::vector<TrainerPtr>& trainers,
                        const std::optional<AugmentationSpec>& spec, const EvalOptions& options = {});

// Aligned columns with a header line.
std::string format_text(const EvalReport& report);
// method, variant, full_rate, loo_rate, lots, choices; one line per row.
std::string format_tsv(const EvalReport& report);

}  // namespace optchoice
