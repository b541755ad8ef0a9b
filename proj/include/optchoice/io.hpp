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

// Flat-file formats.
//
// Dataset CSV:   lot_id,is_prime,<feature>...   one row per choice, rows of a
//                lot contiguous, is_prime 0 or 1.
// Linear scorer: coef <feature> <value>          one line per feature
// Logistic model: bias <value>, then weight <feature> <value> per feature
//
// Numbers are written in the shortest form that reads back to the same
// double (at most 17 significant digits).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "optchoice/baselines.hpp"
#include "optchoice/core.hpp"
#include "optchoice/optimize.hpp"

namespace optchoice {

std::string format_number(double value);

// Malformed input raises ErrorKind::Data with the offending line number.
Dataset read_dataset(std::istream& in, bool strict_range = false);
void write_dataset(std::ostream& out, const Dataset& dataset);

Dataset load_dataset(const std::string& path, bool strict_range = false);
void save_dataset(const std::string& path, const Dataset& dataset);

enum class ScorerKind { Linear, Logistic };

// A scorer as stored on disk: coefficients keyed by feature name.
struct ScorerFile {
    ScorerKind kind = ScorerKind::Linear;
    std::vector<std::string> names;
    std::vector<double> coefficients;
    double bias = 0.0;  // logistic only

    // Coefficients reordered to `feature_names`. Throws ErrorKind::Schema
    // naming every feature present on one side only.
    std::vector<double> aligned_to(const std::vector<std::string>& feature_names) const;

    ScoringFunction scoring_function(const std::vector<std::string>& feature_names) const;

    bool operator==(const ScorerFile&) const = default;
};

ScorerFile make_scorer_file(const std::vector<std::string>& names, const LinearScorer& scorer);
ScorerFile make_scorer_file(const std::vector<std::string>& names, const LogisticModel& model);

ScorerFile read_scorer(std::istream& in);
void write_scorer(std::ostream& out, const ScorerFile& scorer);

ScorerFile load_scorer(const std::string& path);
void save_scorer(const std::string& path, const ScorerFile& scorer);

void save_text(const std::string& path, const std::string& text);

}  // namespace optchoice
