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

#include "optchoice/baselines.hpp"

#include <cmath>
#include <random>

#include "optchoice/error.hpp"

namespace optchoice {

namespace {

// log(1 + e^z) without overflow.
double softplus(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

double score_logistic(const LogisticModel& model, std::span<const double> features) {
    if (features.size() != model.weights.size())
        fail(ErrorKind::InvalidArgument, "choice has " + std::to_string(features.size()) +
                                             " features, model expects " + std::to_string(model.weights.size()));
    double z = model.bias;
    for (std::size_t j = 0; j < features.size(); ++j) z += model.weights[j] * features[j];
    return z;
}

double LogisticModel::score(std::span<const double> features) const { return score_logistic(*this, features); }

ScoringFunction LogisticModel::scoring_function() const {
    return [model = *this](const Lot& lot, std::size_t index) { return model.score(lot.choice(index)); };
}

void TrainConfig::validate() const {
    if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate))
        fail(ErrorKind::InvalidArgument, "learning rate must be a finite non-negative number");
    if (epochs < 1) fail(ErrorKind::InvalidArgument, "epochs must be >= 1");
    if (!(l2_penalty >= 0.0) || !std::isfinite(l2_penalty))
        fail(ErrorKind::InvalidArgument, "l2 penalty must be >= 0");
    if (!(positive_weight > 0.0) || !std::isfinite(positive_weight))
        fail(ErrorKind::InvalidArgument, "positive weight must be > 0");
}

LogisticModel initial_model(std::size_t dimension, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> init(-0.01, 0.01);
    LogisticModel model;
    model.weights.resize(dimension);
    for (auto& w : model.weights) w = init(rng);
    return model;
}

LogisticObjective::LogisticObjective(const Dataset& dataset, const TrainConfig& config)
    : dimension_(dataset.dimension()), l2_penalty_(config.l2_penalty), positive_weight_(config.positive_weight) {
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "cannot fit on an empty dataset");
    features_.reserve(dataset.choice_count() * dimension_);
    labels_.reserve(dataset.choice_count());
    for (const auto& lot : dataset.lots()) {
        features_.insert(features_.end(), lot.values().begin(), lot.values().end());
        for (std::size_t i = 0; i < lot.size(); ++i) labels_.push_back(indicator(lot, i));
    }
}

double LogisticObjective::loss_and_gradient(const LogisticModel& model, LogisticModel& gradient) const {
    gradient.weights.assign(dimension_, 0.0);
    gradient.bias = 0.0;
    double loss = 0.0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const std::span<const double> x(features_.data() + i * dimension_, dimension_);
        const double z = score_logistic(model, x);
        const double y = labels_[i];
        const double weight = y > 0.5 ? positive_weight_ : 1.0;
        loss += weight * (softplus(z) - y * z);
        const double residual = weight * (sigmoid(z) - y);
        for (std::size_t j = 0; j < dimension_; ++j) gradient.weights[j] += residual * x[j];
        gradient.bias += residual;
    }
    const double n = static_cast<double>(labels_.size());
    loss /= n;
    gradient.bias /= n;
    double norm2 = 0.0;
    for (std::size_t j = 0; j < dimension_; ++j) {
        gradient.weights[j] = gradient.weights[j] / n + l2_penalty_ * model.weights[j];
        norm2 += model.weights[j] * model.weights[j];
    }
    return loss + 0.5 * l2_penalty_ * norm2;
}

double LogisticObjective::loss(const LogisticModel& model) const {
    LogisticModel unused;
    return loss_and_gradient(model, unused);
}

LogisticModel LogisticObjective::gradient(const LogisticModel& model) const {
    LogisticModel g;
    loss_and_gradient(model, g);
    return g;
}

LogisticModel fit_logistic(const Dataset& dataset, const TrainConfig& config, std::vector<double>* loss_history) {
    config.validate();
    const LogisticObjective objective(dataset, config);
    LogisticModel model = initial_model(dataset.dimension(), config.seed);
    LogisticModel gradient;
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        const double loss = objective.loss_and_gradient(model, gradient);
        if (!std::isfinite(loss))
            fail(ErrorKind::Training, "training diverged at epoch " + std::to_string(epoch + 1));
        if (loss_history) loss_history->push_back(loss);
        for (std::size_t j = 0; j < model.weights.size(); ++j)
            model.weights[j] -= config.learning_rate * gradient.weights[j];
        model.bias -= config.learning_rate * gradient.bias;
    }
    for (double w : model.weights)
        if (!std::isfinite(w)) fail(ErrorKind::Training, "training diverged: non-finite weight after final epoch");
    return model;
}

}  // namespace optchoice
