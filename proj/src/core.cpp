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

#include "optchoice/core.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "optchoice/error.hpp"

namespace optchoice {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::Schema: return "schema error";
        case ErrorKind::Data: return "data error";
        case ErrorKind::Io: return "I/O error";
        case ErrorKind::Resource: return "resource error";
        case ErrorKind::Evaluation: return "evaluation error";
        case ErrorKind::Optimization: return "optimization error";
        case ErrorKind::Training: return "training error";
        case ErrorKind::Harness: return "harness error";
    }
    return "error";
}

Lot::Lot(std::string id, std::size_t dimension, std::vector<double> values,
         std::optional<std::size_t> prime)
    : id_(std::move(id)), dimension_(dimension), values_(std::move(values)), prime_(prime) {
    if (dimension_ == 0) fail(ErrorKind::InvalidArgument, "lot '" + id_ + "': dimension must be >= 1");
    if (values_.size() % dimension_ != 0)
        fail(ErrorKind::InvalidArgument, "lot '" + id_ + "': value count is not a multiple of the dimension");
    if (size() < 2) fail(ErrorKind::InvalidArgument, "lot '" + id_ + "' has fewer than 2 choices");
    if (prime_ && *prime_ >= size())
        fail(ErrorKind::InvalidArgument, "lot '" + id_ + "': prime index " + std::to_string(*prime_) +
                                             " out of range");
    for (double v : values_)
        if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, "lot '" + id_ + "' has a non-finite feature");
}

Lot Lot::from_rows(std::string id, const std::vector<Choice>& rows, std::optional<std::size_t> prime) {
    if (rows.empty()) fail(ErrorKind::InvalidArgument, "lot '" + id + "' has no choices");
    const std::size_t dim = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) fail(ErrorKind::InvalidArgument, "lot '" + id + "': ragged choice rows");
        values.insert(values.end(), row.begin(), row.end());
    }
    return Lot(std::move(id), dim, std::move(values), prime);
}

std::span<const double> Lot::choice(std::size_t index) const {
    if (index >= size())
        fail(ErrorKind::InvalidArgument, "choice index " + std::to_string(index) + " out of range for lot '" +
                                             id_ + "'");
    return std::span<const double>(values_).subspan(index * dimension_, dimension_);
}

Dataset::Dataset(std::vector<std::string> feature_names, std::vector<Lot> lots, bool strict_range)
    : feature_names_(std::move(feature_names)), lots_(std::move(lots)) {
    if (feature_names_.empty()) fail(ErrorKind::Schema, "dataset needs at least one feature");
    std::set<std::string> seen;
    for (const auto& name : feature_names_)
        if (!seen.insert(name).second) fail(ErrorKind::Schema, "duplicate feature name '" + name + "'");
    for (const auto& lot : lots_) {
        if (lot.dimension() != dimension())
            fail(ErrorKind::Schema, "lot '" + lot.id() + "' has " + std::to_string(lot.dimension()) +
                                        " features, dataset declares " + std::to_string(dimension()));
        if (strict_range)
            for (double v : lot.values())
                if (v < 0.0 || v > 1.0)
                    fail(ErrorKind::InvalidArgument, "lot '" + lot.id() + "' has a feature outside [0, 1]");
    }
}

std::size_t Dataset::choice_count() const noexcept {
    std::size_t total = 0;
    for (const auto& lot : lots_) total += lot.size();
    return total;
}

std::optional<std::size_t> Dataset::feature_index(const std::string& name) const {
    for (std::size_t i = 0; i < feature_names_.size(); ++i)
        if (feature_names_[i] == name) return i;
    return std::nullopt;
}

Dataset Dataset::without_lot(std::size_t held_out) const {
    if (held_out >= lots_.size()) fail(ErrorKind::InvalidArgument, "held-out lot index out of range");
    std::vector<Lot> rest;
    rest.reserve(lots_.size() - 1);
    for (std::size_t i = 0; i < lots_.size(); ++i)
        if (i != held_out) rest.push_back(lots_[i]);
    return Dataset(feature_names_, std::move(rest));
}

int indicator(const Lot& lot, std::size_t index) {
    if (index >= lot.size())
        fail(ErrorKind::InvalidArgument, "choice index " + std::to_string(index) + " out of range");
    return lot.prime() && *lot.prime() == index ? 1 : 0;
}

std::optional<std::size_t> predict(std::span<const double> scores) {
    if (scores.size() < 2) fail(ErrorKind::InvalidArgument, "predict needs at least 2 scores");
    std::size_t best = 0;
    bool tied = false;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) {
            best = i;
            tied = false;
        } else if (scores[i] == scores[best]) {
            tied = true;
        }
    }
    if (tied) return std::nullopt;
    return best;
}

bool lot_success(const Lot& lot, std::optional<std::size_t> predicted) {
    if (predicted && *predicted >= lot.size())
        fail(ErrorKind::InvalidArgument, "predicted index out of range for lot '" + lot.id() + "'");
    if (!lot.prime()) return !predicted.has_value();
    return predicted && *predicted == *lot.prime();
}

std::vector<double> score_lot(const ScoringFunction& scorer, const Lot& lot) {
    std::vector<double> scores(lot.size());
    for (std::size_t i = 0; i < lot.size(); ++i) {
        scores[i] = scorer(lot, i);
        if (!std::isfinite(scores[i]))
            fail(ErrorKind::Evaluation, "non-finite score for choice " + std::to_string(i) + " of lot '" +
                                            lot.id() + "'");
    }
    return scores;
}

std::vector<Prediction> predict_all(const ScoringFunction& scorer, const Dataset& dataset) {
    std::vector<Prediction> out;
    out.reserve(dataset.lot_count());
    for (std::size_t l = 0; l < dataset.lot_count(); ++l)
        out.push_back({l, predict(score_lot(scorer, dataset.lot(l)))});
    return out;
}

std::size_t success_count(const ScoringFunction& scorer, const Dataset& dataset) {
    std::size_t successes = 0;
    for (const auto& lot : dataset.lots())
        if (lot_success(lot, predict(score_lot(scorer, lot)))) ++successes;
    return successes;
}

double success_rate(const ScoringFunction& scorer, const Dataset& dataset) {
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "success rate of an empty dataset");
    return static_cast<double>(success_count(scorer, dataset)) / static_cast<double>(dataset.lot_count());
}

double pointwise_accuracy(std::span<const Prediction> predictions, const Dataset& dataset) {
    if (predictions.size() != dataset.lot_count())
        fail(ErrorKind::InvalidArgument, "expected one prediction per lot (" +
                                             std::to_string(dataset.lot_count()) + "), got " +
                                             std::to_string(predictions.size()));
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "pointwise accuracy of an empty dataset");
    std::size_t correct = 0;
    std::size_t total = 0;
    for (const auto& p : predictions) {
        const Lot& lot = dataset.lot(p.lot_index);
        if (p.predicted_index && *p.predicted_index >= lot.size())
            fail(ErrorKind::InvalidArgument, "prediction index out of range for lot '" + lot.id() + "'");
        for (std::size_t i = 0; i < lot.size(); ++i) {
            const int label = p.predicted_index && *p.predicted_index == i ? 1 : 0;
            if (label == indicator(lot, i)) ++correct;
        }
        total += lot.size();
    }
    return static_cast<double>(correct) / static_cast<double>(total);
}

double lotwise_auc(const ScoringFunction& scorer, const Dataset& dataset) {
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "AUC of an empty dataset");
    double sum = 0.0;
    for (const auto& lot : dataset.lots()) {
        if (!lot.prime()) fail(ErrorKind::InvalidArgument, "AUC needs a prime in lot '" + lot.id() + "'");
        const auto scores = score_lot(scorer, lot);
        const double prime_score = scores[*lot.prime()];
        double below = 0.0;
        for (std::size_t i = 0; i < scores.size(); ++i) {
            if (i == *lot.prime()) continue;
            if (scores[i] < prime_score)
                below += 1.0;
            else if (scores[i] == prime_score)
                below += 0.5;
        }
        sum += below / static_cast<double>(scores.size() - 1);
    }
    return sum / static_cast<double>(dataset.lot_count());
}

}  // namespace optchoice
