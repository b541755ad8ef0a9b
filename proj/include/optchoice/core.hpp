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

// Data model for optimal-choice learning.
//
// A lot is a finite set of choices (feature vectors) of which at most one is
// the prime. A scoring function picks a choice per lot by its strict unique
// maximum; a lot is a success when that pick reproduces the prime exactly
// (including "no pick" on a lot without a prime). The success rate is the
// fraction of successful lots.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace optchoice {

// One choice is a row of `dimension` finite reals inside a Lot.
using Choice = std::vector<double>;

class Lot {
public:
    // `values` is row-major, one row of `dimension` features per choice.
    Lot(std::string id, std::size_t dimension, std::vector<double> values,
        std::optional<std::size_t> prime);

    static Lot from_rows(std::string id, const std::vector<Choice>& rows,
                         std::optional<std::size_t> prime);

    const std::string& id() const noexcept { return id_; }
    std::size_t size() const noexcept { return values_.size() / dimension_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::optional<std::size_t> prime() const noexcept { return prime_; }

    std::span<const double> choice(std::size_t index) const;
    std::span<const double> values() const noexcept { return values_; }

    bool operator==(const Lot&) const = default;

private:
    std::string id_;
    std::size_t dimension_;
    std::vector<double> values_;
    std::optional<std::size_t> prime_;
};

class Dataset {
public:
    // With `strict_range` every feature must lie in [0, 1].
    Dataset(std::vector<std::string> feature_names, std::vector<Lot> lots,
            bool strict_range = false);

    std::size_t dimension() const noexcept { return feature_names_.size(); }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    const std::vector<Lot>& lots() const noexcept { return lots_; }
    const Lot& lot(std::size_t index) const { return lots_.at(index); }
    std::size_t lot_count() const noexcept { return lots_.size(); }
    std::size_t choice_count() const noexcept;
    bool empty() const noexcept { return lots_.empty(); }

    std::optional<std::size_t> feature_index(const std::string& name) const;

    // Same schema, every lot except `held_out`.
    Dataset without_lot(std::size_t held_out) const;

    bool operator==(const Dataset&) const = default;

private:
    std::vector<std::string> feature_names_;
    std::vector<Lot> lots_;
};

struct Prediction {
    std::size_t lot_index = 0;
    std::optional<std::size_t> predicted_index;  // absent: no single maximum
};

// g(x, X): score of choice `index` within `lot`.
using ScoringFunction = std::function<double(const Lot& lot, std::size_t index)>;

// I(x, X): 1 iff `index` is the prime of `lot`.
int indicator(const Lot& lot, std::size_t index);

// Index of the strict unique maximum, or nullopt when the maximum is shared.
// Ties are exact floating-point equality.
std::optional<std::size_t> predict(std::span<const double> scores);

bool lot_success(const Lot& lot, std::optional<std::size_t> predicted);

// Scores every choice of `lot`. Throws ErrorKind::Evaluation on a
// non-finite score, naming the lot.
std::vector<double> score_lot(const ScoringFunction& scorer, const Lot& lot);

std::vector<Prediction> predict_all(const ScoringFunction& scorer, const Dataset& dataset);

std::size_t success_count(const ScoringFunction& scorer, const Dataset& dataset);
double success_rate(const ScoringFunction& scorer, const Dataset& dataset);

// Fraction of (choice, lot) pairs whose implied 0/1 label matches I.
double pointwise_accuracy(std::span<const Prediction> predictions, const Dataset& dataset);

// Mean over lots of the share of non-primes scored below the prime, ties
// counting one half. Every lot must have a prime.
double lotwise_auc(const ScoringFunction& scorer, const Dataset& dataset);

}  // namespace optchoice
