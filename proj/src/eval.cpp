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

#include "optchoice/eval.hpp"

#include <algorithm>
#include <cstdio>

#include "optchoice/error.hpp"
#include "parallel.hpp"

namespace optchoice {

ScoringFunction BruteForceTrainer::train(const Dataset& training) const {
    return brute_force_search(training, config_).scorer.scoring_function();
}

ScoringFunction NelderMeadTrainer::train(const Dataset& training) const {
    NelderMeadConfig config = config_;
    config.starts = default_starts(training.dimension(), start_count_, seed_);
    return maximize_success_rate(training, config).scorer.scoring_function();
}

ScoringFunction LogisticTrainer::train(const Dataset& training) const {
    return fit_logistic(training, config_).scoring_function();
}

ScoringFunction AugmentingTrainer::train(const Dataset& training) const {
    ScoringFunction inner = inner_->train(augment(training, spec_));
    return [inner = std::move(inner), spec = spec_, names = training.feature_names()](const Lot& lot,
                                                                                     std::size_t index) {
        return inner(augment(lot, spec, names), index);
    };
}

double leave_one_lot_out(const Trainer& trainer, const Dataset& dataset, std::size_t threads) {
    const std::size_t lots = dataset.lot_count();
    if (lots < 2) fail(ErrorKind::InvalidArgument, "leave-one-lot-out needs at least 2 lots");
    std::vector<char> success(lots, 0);
    detail::parallel_chunks(lots, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t fold = begin; fold < end; ++fold) {
            const Lot& held_out = dataset.lot(fold);
            try {
                const ScoringFunction scorer = trainer.train(dataset.without_lot(fold));
                success[fold] = lot_success(held_out, predict(score_lot(scorer, held_out))) ? 1 : 0;
            } catch (const std::exception& e) {
                fail(ErrorKind::Harness, "fold " + std::to_string(fold + 1) + " (lot '" + held_out.id() +
                                             "') failed for " + trainer.name() + ": " + e.what());
            }
        }
    });
    const auto successes = static_cast<std::size_t>(std::count(success.begin(), success.end(), 1));
    return static_cast<double>(successes) / static_cast<double>(lots);
}

const char* to_string(Variant variant) noexcept {
    return variant == Variant::Original ? "original" : "extended";
}

namespace {

ReportRow evaluate(const Trainer& trainer, Variant variant, const Dataset& dataset, const EvalOptions& options) {
    ReportRow row;
    row.method = trainer.name();
    row.variant = variant;
    row.lots = dataset.lot_count();
    row.choices = dataset.choice_count();
    if (options.mode != EvalMode::Loo) row.full_data_rate = success_rate(trainer.train(dataset), dataset);
    if (options.mode != EvalMode::Full) row.loo_rate = leave_one_lot_out(trainer, dataset, options.threads);
    return row;
}

std::string format_rate(const std::optional<double>& rate) {
    if (!rate) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *rate);
    return buf;
}

}  // namespace

EvalReport build_report(const Dataset& dataset, const std::vector<TrainerPtr>& trainers,
                        const std::optional<AugmentationSpec>& spec, const EvalOptions& options) {
    if (trainers.empty()) fail(ErrorKind::InvalidArgument, "no methods to evaluate");
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "cannot evaluate on an empty dataset");
    if (spec) validate(*spec, dataset.feature_names());
    EvalReport report;
    for (const auto& trainer : trainers) {
        report.rows.push_back(evaluate(*trainer, Variant::Original, dataset, options));
        if (spec) {
            const AugmentingTrainer extended(trainer, *spec);
            report.rows.push_back(evaluate(extended, Variant::Extended, dataset, options));
        }
    }
    return report;
}

std::string format_text(const EvalReport& report) {
    std::vector<std::vector<std::string>> cells{{"method", "variant", "full_rate", "loo_rate", "lots", "choices"}};
    for (const auto& row : report.rows)
        cells.push_back({row.method, to_string(row.variant), format_rate(row.full_data_rate),
                         format_rate(row.loo_rate), std::to_string(row.lots), std::to_string(row.choices)});
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::string out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out += line[c];
            if (c + 1 < line.size()) out.append(width[c] - line[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string format_tsv(const EvalReport& report) {
    std::string out;
    for (const auto& row : report.rows) {
        out += row.method + '\t' + to_string(row.variant) + '\t' + format_rate(row.full_data_rate) + '\t' +
               format_rate(row.loo_rate) + '\t' + std::to_string(row.lots) + '\t' + std::to_string(row.choices) +
               '\n';
    }
    return out;
}

}  // namespace optchoice
