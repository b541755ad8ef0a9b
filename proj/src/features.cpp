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

#include "optchoice/features.hpp"

#include <algorithm>
#include <set>

#include "optchoice/error.hpp"

namespace optchoice {

std::optional<Aggregate> parse_aggregate(std::string_view text) {
    if (text == "min") return Aggregate::Min;
    if (text == "max") return Aggregate::Max;
    if (text == "mean") return Aggregate::Mean;
    return std::nullopt;
}

const char* to_string(Aggregate aggregate) noexcept {
    switch (aggregate) {
        case Aggregate::Min: return "min";
        case Aggregate::Max: return "max";
        case Aggregate::Mean: return "mean";
    }
    return "?";
}

void validate(const AugmentationSpec& spec, const std::vector<std::string>& feature_names) {
    std::set<std::string> names(feature_names.begin(), feature_names.end());
    for (const auto& entry : spec) {
        if (std::find(feature_names.begin(), feature_names.end(), entry.feature_name) == feature_names.end())
            fail(ErrorKind::Schema, "unknown feature '" + entry.feature_name + "'");
        if (entry.new_name.empty()) fail(ErrorKind::Schema, "empty name for augmented feature");
        if (!names.insert(entry.new_name).second)
            fail(ErrorKind::Schema, "augmented feature name '" + entry.new_name + "' collides");
    }
}

std::vector<std::string> augmented_names(const std::vector<std::string>& feature_names,
                                         const AugmentationSpec& spec) {
    auto names = feature_names;
    for (const auto& entry : spec) names.push_back(entry.new_name);
    return names;
}

namespace {

double aggregate_column(const Lot& lot, std::size_t column, Aggregate aggregate) {
    double acc = lot.choice(0)[column];
    for (std::size_t i = 1; i < lot.size(); ++i) {
        const double v = lot.choice(i)[column];
        switch (aggregate) {
            case Aggregate::Min: acc = std::min(acc, v); break;
            case Aggregate::Max: acc = std::max(acc, v); break;
            case Aggregate::Mean: acc += v; break;
        }
    }
    if (aggregate == Aggregate::Mean) acc /= static_cast<double>(lot.size());
    return acc;
}

}  // namespace

Lot augment(const Lot& lot, const AugmentationSpec& spec, const std::vector<std::string>& feature_names) {
    validate(spec, feature_names);
    if (lot.dimension() != feature_names.size())
        fail(ErrorKind::Schema, "lot '" + lot.id() + "' does not match the feature schema");

    std::vector<double> extra;
    extra.reserve(spec.size());
    for (const auto& entry : spec) {
        const auto column = static_cast<std::size_t>(
            std::find(feature_names.begin(), feature_names.end(), entry.feature_name) - feature_names.begin());
        extra.push_back(aggregate_column(lot, column, entry.aggregate));
    }

    const std::size_t dim = lot.dimension() + spec.size();
    std::vector<double> values;
    values.reserve(lot.size() * dim);
    for (std::size_t i = 0; i < lot.size(); ++i) {
        const auto row = lot.choice(i);
        values.insert(values.end(), row.begin(), row.end());
        values.insert(values.end(), extra.begin(), extra.end());
    }
    return Lot(lot.id(), dim, std::move(values), lot.prime());
}

Dataset augment(const Dataset& dataset, const AugmentationSpec& spec) {
    validate(spec, dataset.feature_names());
    std::vector<Lot> lots;
    lots.reserve(dataset.lot_count());
    for (const auto& lot : dataset.lots()) lots.push_back(augment(lot, spec, dataset.feature_names()));
    return Dataset(augmented_names(dataset.feature_names(), spec), std::move(lots));
}

}  // namespace optchoice
