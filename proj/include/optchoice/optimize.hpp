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

// Direct maximization of the success rate over linear scoring functions
// g(x) = sum_i a_i x_i.
//
// The success rate is piecewise constant in the coefficients, so there is no
// gradient to follow. Two searches are provided: an exhaustive scan of the
// integer grid {0..n}^d, and multi-start Nelder-Mead on the raw criterion.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "optchoice/core.hpp"

namespace optchoice {

struct LinearScorer {
    std::vector<double> coefficients;

    double score(std::span<const double> features) const;
    ScoringFunction scoring_function() const;

    bool operator==(const LinearScorer&) const = default;
};

// Number of successful lots of the linear scorer. Same tie semantics as
// predict(), without materializing score vectors.
std::size_t linear_success_count(std::span<const double> coefficients, const Dataset& dataset);
double linear_success_rate(std::span<const double> coefficients, const Dataset& dataset);

struct SearchResult {
    LinearScorer scorer;
    double rate = 0.0;
};

struct BruteForceConfig {
    unsigned bound = 5;                         // coefficients range over 0..bound
    double tolerance = 0.01;                    // absolute success-rate slack
    std::uint64_t pair_cap = 100'000'000;       // max (candidate, lot) evaluations
    std::size_t threads = 1;

    void validate() const;
};

// (bound+1)^dimension, saturating at UINT64_MAX.
std::uint64_t grid_size(unsigned bound, std::size_t dimension);

// Scans every candidate in odometer order (last coefficient fastest). With r*
// the best rate, returns the candidate of minimal coefficient sum among those
// with rate >= r* - tolerance, latest in lexicographic order on ties (so
// (1,0) is preferred over (0,1)).
// Throws ErrorKind::Resource when grid_size * lots exceeds pair_cap.
SearchResult brute_force_search(const Dataset& dataset, const BruteForceConfig& config);

struct NelderMeadConfig {
    std::vector<std::vector<double>> starts;
    std::size_t max_iterations = 0;  // 0 means 500 * dimension
    double simplex_scale = 0.5;
    double convergence_diameter = 1e-8;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;

    void validate() const;
};

// Seeded multi-start set: up to min(8, 2d, count/2) signed unit vectors,
// the rest uniform on [-1, 1]^d.
std::vector<std::vector<double>> default_starts(std::size_t dimension, std::size_t count, std::uint64_t seed);

struct NelderMeadResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

// Maximizes `objective` from every start; returns the best vertex ever
// evaluated. Each run stops after max_iterations or once every vertex lies
// within convergence_diameter of the best one. Throws ErrorKind::Optimization
// on a non-finite objective value.
NelderMeadResult nelder_mead_maximize(const Objective& objective, const NelderMeadConfig& config);

SearchResult maximize_success_rate(const Dataset& dataset, const NelderMeadConfig& config);

}  // namespace optchoice
