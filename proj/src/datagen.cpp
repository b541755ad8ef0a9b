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

#include "optchoice/datagen.hpp"

#include <cmath>
#include <random>
#include <string>

#include "optchoice/error.hpp"

namespace optchoice {

namespace {

constexpr int kMaxRedraws = 1000;

}  // namespace

void GenConfig::validate() const {
    if (lots < 1) fail(ErrorKind::InvalidArgument, "need at least one lot");
    if (choices_min < 2 || choices_min > choices_max)
        fail(ErrorKind::InvalidArgument, "lot sizes must satisfy 2 <= min <= max");
    if (dimension < 1) fail(ErrorKind::InvalidArgument, "dimension must be >= 1");
    if (binary_feature_index && *binary_feature_index >= dimension)
        fail(ErrorKind::InvalidArgument, "binary feature index out of range");
    if (planted_weights.size() != dimension)
        fail(ErrorKind::InvalidArgument, "planted weights have length " + std::to_string(planted_weights.size()) +
                                             ", dimension is " + std::to_string(dimension));
    for (double w : planted_weights)
        if (!std::isfinite(w)) fail(ErrorKind::InvalidArgument, "planted weights must be finite");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        fail(ErrorKind::InvalidArgument, "noise sigma must be >= 0");
    if (!(prime_probability >= 0.0 && prime_probability <= 1.0))
        fail(ErrorKind::InvalidArgument, "prime probability must lie in [0, 1]");
}

GenConfig engine_preset() {
    GenConfig config;
    config.lots = 114;
    config.choices_min = 2;
    config.choices_max = 40;
    config.dimension = 4;
    config.binary_feature_index = 3;
    config.planted_weights = {5.0, 3.0, 2.0, 1.0};
    config.noise_sigma = 0.15;
    config.prime_probability = 1.0;
    config.seed = 2453;
    return config;
}

Dataset generate(const GenConfig& config) {
    config.validate();
    const std::size_t d = config.dimension;
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> lot_size(config.choices_min, config.choices_max);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution primed(config.prime_probability);
    std::normal_distribution<double> noise(0.0, config.noise_sigma > 0.0 ? config.noise_sigma : 1.0);

    auto draw_features = [&](std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            const bool binary = config.binary_feature_index && i % d == *config.binary_feature_index;
            values[i] = binary ? (coin(rng) ? 1.0 : 0.0) : uniform(rng);
        }
    };

    std::vector<Lot> lots;
    lots.reserve(config.lots);
    for (std::size_t l = 0; l < config.lots; ++l) {
        const std::size_t k = lot_size(rng);
        const bool has_prime = primed(rng);
        std::vector<double> values(k * d);
        std::vector<double> utility(k);
        draw_features(values);

        std::optional<std::size_t> prime;
        for (int attempt = 0; has_prime; ++attempt) {
            if (attempt == kMaxRedraws)
                fail(ErrorKind::InvalidArgument, "planted weights cannot separate the choices of lot " +
                                                     std::to_string(l + 1));
            for (std::size_t i = 0; i < k; ++i) {
                double u = 0.0;
                for (std::size_t j = 0; j < d; ++j) u += config.planted_weights[j] * values[i * d + j];
                if (config.noise_sigma > 0.0) u += noise(rng);
                utility[i] = u;
            }
            prime = predict(utility);
            if (prime) break;
            // exact tie at the top: fresh noise, or fresh features without noise
            if (config.noise_sigma == 0.0) draw_features(values);
        }

        if (config.invert)
            for (auto& v : values) v = 1.0 - v;
        lots.emplace_back("lot" + std::to_string(l + 1), d, std::move(values), prime);
    }

    std::vector<std::string> names;
    for (std::size_t j = 0; j < d; ++j) names.push_back("f" + std::to_string(j + 1));
    return Dataset(std::move(names), std::move(lots));
}

}  // namespace optchoice
