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

// Test-only dataset builders and oracles. Nothing here calls into the
// optimize or core scoring code paths it is used to check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "optchoice/core.hpp"

namespace testsupport {

using optchoice::Dataset;
using optchoice::Lot;

inline std::vector<std::string> names(std::size_t d) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < d; ++j) out.push_back("f" + std::to_string(j + 1));
    return out;
}

// `lots` lots of `k` choices with one feature f1 = 0, 1, ..., k-1 (choice i
// has value i) and the prime placed at 1-based rank `rank` from the top of f1.
inline Dataset ranked_dataset(std::size_t lots, std::size_t k, std::size_t rank) {
    std::vector<Lot> out;
    for (std::size_t l = 0; l < lots; ++l) {
        std::vector<double> values;
        for (std::size_t i = 0; i < k; ++i) values.push_back(static_cast<double>(i));
        out.emplace_back("lot" + std::to_string(l + 1), 1, values, k - rank);
    }
    return Dataset(names(1), out);
}

// Random lots with uniform [0,1] features and a uniformly chosen prime.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t lots, std::size_t d, std::size_t kmin,
                              std::size_t kmax, bool allow_primeless = false) {
    std::uniform_int_distribution<std::size_t> size(kmin, kmax);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<Lot> out;
    for (std::size_t l = 0; l < lots; ++l) {
        const std::size_t k = size(rng);
        std::vector<double> values(k * d);
        for (auto& v : values) v = uniform(rng);
        std::optional<std::size_t> prime = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
        if (allow_primeless && uniform(rng) < 0.2) prime.reset();
        out.emplace_back("lot" + std::to_string(l + 1), d, values, prime);
    }
    return Dataset(names(d), out);
}

// Integer-valued features on a coarse grid, so exact score ties happen.
inline Dataset coarse_dataset(std::mt19937_64& rng, std::size_t lots, std::size_t d, std::size_t kmin,
                              std::size_t kmax) {
    std::uniform_int_distribution<std::size_t> size(kmin, kmax);
    std::uniform_int_distribution<int> cell(0, 3);
    std::vector<Lot> out;
    for (std::size_t l = 0; l < lots; ++l) {
        const std::size_t k = size(rng);
        std::vector<double> values(k * d);
        for (auto& v : values) v = cell(rng) / 3.0;
        const std::size_t prime = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
        out.emplace_back("lot" + std::to_string(l + 1), d, values, prime);
    }
    return Dataset(names(d), out);
}

struct NaiveResult {
    std::vector<double> coefficients;
    double rate = 0.0;
};

// Reference enumerator for the integer grid search: lists every candidate
// with its rate, then filters and sorts. Quadratic-memory and slow on
// purpose; written without the production search code.
inline NaiveResult naive_brute_force(const Dataset& data, unsigned bound, double tolerance) {
    const std::size_t d = data.dimension();
    struct Candidate {
        std::vector<int> a;
        int sum;
        double rate;
    };
    std::vector<Candidate> all;
    std::vector<int> a(d, 0);
    // Recursive nested loops over a[0], a[1], ...
    auto recurse = [&](auto&& self, std::size_t pos) -> void {
        if (pos == d) {
            int wins = 0;
            for (const Lot& lot : data.lots()) {
                std::vector<double> s;
                for (std::size_t i = 0; i < lot.size(); ++i) {
                    double v = 0.0;
                    for (std::size_t j = 0; j < d; ++j) v += a[j] * lot.values()[i * d + j];
                    s.push_back(v);
                }
                const double top = *std::max_element(s.begin(), s.end());
                std::vector<std::size_t> at_top;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (s[i] == top) at_top.push_back(i);
                const bool picked = at_top.size() == 1;
                if (lot.prime().has_value()) {
                    if (picked && at_top[0] == *lot.prime()) ++wins;
                } else if (!picked) {
                    ++wins;
                }
            }
            int sum = 0;
            for (int v : a) sum += v;
            all.push_back({a, sum, static_cast<double>(wins) / static_cast<double>(data.lot_count())});
            return;
        }
        for (unsigned v = 0; v <= bound; ++v) {
            a[pos] = static_cast<int>(v);
            self(self, pos + 1);
        }
    };
    recurse(recurse, 0);

    double best = 0.0;
    for (const auto& c : all) best = std::max(best, c.rate);
    std::vector<Candidate> eligible;
    for (const auto& c : all)
        if (c.rate >= best - tolerance - 1e-12) eligible.push_back(c);
    std::sort(eligible.begin(), eligible.end(), [](const Candidate& x, const Candidate& y) {
        if (x.sum != y.sum) return x.sum < y.sum;
        return x.a > y.a;
    });
    NaiveResult result;
    for (int v : eligible.front().a) result.coefficients.push_back(v);
    result.rate = eligible.front().rate;
    return result;
}

// Lot-relative data: each lot sits at its own offset and x1 only matters
// relative to the lot minimum; x2 carries a lot-level signal tied to lot
// size that is pure noise within a lot.
inline Dataset lot_relative_dataset(std::uint64_t seed, std::size_t lots) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(2, 30);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<Lot> out;
    for (std::size_t l = 0; l < lots; ++l) {
        const std::size_t k = size(rng);
        const double offset = 0.7 * uniform(rng);
        const double level = 1.0 / static_cast<double>(k);
        std::vector<double> values;
        std::vector<double> relative;
        for (std::size_t i = 0; i < k; ++i) {
            const double x1 = offset + 0.3 * uniform(rng);
            const double x2 = level + 0.3 * uniform(rng);
            values.push_back(x1);
            values.push_back(x2);
            relative.push_back(x1);
        }
        const double low = *std::min_element(relative.begin(), relative.end());
        std::size_t prime = 0;
        for (std::size_t i = 1; i < k; ++i)
            if (relative[i] - low > relative[prime] - low) prime = i;
        out.emplace_back("lot" + std::to_string(l + 1), 2, values, prime);
    }
    return Dataset(names(2), out);
}

}  // namespace testsupport
