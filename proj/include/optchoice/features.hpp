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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optchoice/core.hpp"

namespace optchoice {

enum class Aggregate { Min, Max, Mean };

std::optional<Aggregate> parse_aggregate(std::string_view text);
const char* to_string(Aggregate aggregate) noexcept;

struct AugmentationEntry {
    std::string feature_name;
    Aggregate aggregate = Aggregate::Min;
    std::string new_name;
};

using AugmentationSpec = std::vector<AugmentationEntry>;

// Throws ErrorKind::Schema if an entry names an unknown feature or its new
// name collides with an existing or another new name.
void validate(const AugmentationSpec& spec, const std::vector<std::string>& feature_names);

// Appends one column per entry, holding the aggregate of that feature over
// the lot. The value is identical for every choice of the lot.
Lot augment(const Lot& lot, const AugmentationSpec& spec, const std::vector<std::string>& feature_names);
Dataset augment(const Dataset& dataset, const AugmentationSpec& spec);

std::vector<std::string> augmented_names(const std::vector<std::string>& feature_names,
                                         const AugmentationSpec& spec);

}  // namespace optchoice
