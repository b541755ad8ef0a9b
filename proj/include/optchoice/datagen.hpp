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

// Synthetic optimal-choice data from a planted linear utility.
//
// Lots are drawn independently. Each choice gets uniform [0,1] features (one
// optional Bernoulli(1/2) column); its latent utility is the planted linear
// score plus Gaussian noise, and the lot's prime, when it has one, is the
// choice of maximal utility.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "optchoice/core.hpp"

namespace optchoice {

struct GenConfig {
    std::size_t lots = 100;
    std::size_t choices_min = 2;
    std::size_t choices_max = 10;
    std::size_t dimension = 2;
    std::optional<std::size_t> binary_feature_index;
    std::vector<double> planted_weights{1.0, 1.0};
    double noise_sigma = 0.0;
    double prime_probability = 1.0;
    std::uint64_t seed = 1;
    bool invert = false;  // emit 1 - x, so smaller is better

    void validate() const;
};

// 114 lots of 2..40 choices, four features (the last binary), planted
// weights (5, 3, 2, 1), noise 0.15, every lot primed.
GenConfig engine_preset();

// Feature names are f1..fd.
Dataset generate(const GenConfig& config);

}  // namespace optchoice
