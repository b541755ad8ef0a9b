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

// Point-wise logistic regression. Every (choice, prime-indicator) pair is
// pooled into one binary sample, ignoring lots; lots come back only when the
// fitted logit is used as a scoring function.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "optchoice/core.hpp"

namespace optchoice {

struct LogisticModel {
    std::vector<double> weights;
    double bias = 0.0;

    // Linear logit; argmax-equivalent to the sigmoid probability.
    double score(std::span<const double> features) const;
    ScoringFunction scoring_function() const;

    bool operator==(const LogisticModel&) const = default;
};

struct TrainConfig {
    double learning_rate = 0.5;
    std::size_t epochs = 2000;
    double l2_penalty = 0.0;
    std::uint64_t seed = 1;
    double positive_weight = 1.0;  // loss weight of prime samples

    void validate() const;
};

double score_logistic(const LogisticModel& model, std::span<const double> features);

// Seeded small random weights, zero bias.
LogisticModel initial_model(std::size_t dimension, std::uint64_t seed);

// Mean weighted negative log-likelihood plus (l2/2)*|w|^2 over the pooled
// sample. The bias is not penalized.
class LogisticObjective {
public:
    LogisticObjective(const Dataset& dataset, const TrainConfig& config);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t sample_count() const noexcept { return labels_.size(); }

    double loss(const LogisticModel& model) const;
    // Gradient laid out like the model: d/dw in weights, d/db in bias.
    LogisticModel gradient(const LogisticModel& model) const;
    // One pass for both; returns the loss.
    double loss_and_gradient(const LogisticModel& model, LogisticModel& gradient) const;

private:
    std::size_t dimension_;
    std::vector<double> features_;  // row-major
    std::vector<double> labels_;
    double l2_penalty_;
    double positive_weight_;
};

// Full-batch gradient descent from initial_model(d, seed). If `loss_history`
// is given it receives the loss before each update. Throws ErrorKind::Training
// when the loss becomes non-finite.
LogisticModel fit_logistic(const Dataset& dataset, const TrainConfig& config,
                           std::vector<double>* loss_history = nullptr);

}  // namespace optchoice
