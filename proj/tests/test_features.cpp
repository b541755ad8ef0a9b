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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "optchoice/datagen.hpp"
#include "optchoice/error.hpp"
#include "optchoice/features.hpp"
#include "test_support.hpp"

using namespace optchoice;

namespace {

Dataset one_lot() {
    return Dataset({"f1", "f2"}, {Lot::from_rows("a", {{0.4, 1.0}, {0.1, 0.0}, {0.7, 1.0}}, 2)});
}

// Drops the appended columns.
Dataset project(const Dataset& data, std::size_t d) {
    std::vector<Lot> lots;
    for (const auto& lot : data.lots()) {
        std::vector<double> values;
        for (std::size_t i = 0; i < lot.size(); ++i) {
            const auto row = lot.choice(i);
            values.insert(values.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d));
        }
        lots.emplace_back(lot.id(), d, values, lot.prime());
    }
    return Dataset(std::vector<std::string>(data.feature_names().begin(),
                                            data.feature_names().begin() + static_cast<std::ptrdiff_t>(d)),
                   lots);
}

}  // namespace

TEST_CASE("augment appends lot aggregates") {
    const Dataset data = one_lot();
    const Dataset mn = augment(data, {{"f1", Aggregate::Min, "min.f1"}});
    REQUIRE(mn.dimension() == 3);
    CHECK(mn.feature_names().back() == "min.f1");
    for (std::size_t i = 0; i < 3; ++i) CHECK(mn.lot(0).choice(i)[2] == 0.1);

    const Dataset mx = augment(data, {{"f1", Aggregate::Max, "max.f1"}});
    for (std::size_t i = 0; i < 3; ++i) CHECK(mx.lot(0).choice(i)[2] == 0.7);

    const Dataset mean = augment(data, {{"f2", Aggregate::Mean, "mean.f2"}});
    for (std::size_t i = 0; i < 3; ++i) CHECK(mean.lot(0).choice(i)[2] == doctest::Approx(2.0 / 3.0));

    CHECK(mn.lot(0).prime() == 2);
    CHECK(data.dimension() == 2);  // input untouched
}

TEST_CASE("augment on the engine preset goes from 4 to 6 features") {
    const Dataset engine = generate(engine_preset());
    const Dataset out = augment(engine, {{"f1", Aggregate::Min, "min.f1"}, {"f2", Aggregate::Min, "min.f2"}});
    CHECK(engine.dimension() == 4);
    CHECK(out.dimension() == 6);
}

TEST_CASE("augment schema errors") {
    const Dataset data = one_lot();
    auto kind = [&](const AugmentationSpec& spec) {
        try {
            augment(data, spec);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Harness;
    };
    CHECK(kind({{"nope", Aggregate::Min, "min.nope"}}) == ErrorKind::Schema);
    CHECK(kind({{"f1", Aggregate::Min, "f2"}}) == ErrorKind::Schema);
    CHECK(kind({{"f1", Aggregate::Min, "x"}, {"f2", Aggregate::Max, "x"}}) == ErrorKind::Schema);
    CHECK(kind({{"f1", Aggregate::Min, ""}}) == ErrorKind::Schema);
}

TEST_CASE("parse_aggregate") {
    CHECK(parse_aggregate("min") == Aggregate::Min);
    CHECK(parse_aggregate("max") == Aggregate::Max);
    CHECK(parse_aggregate("mean") == Aggregate::Mean);
    CHECK_FALSE(parse_aggregate("median").has_value());
}

TEST_CASE("property: augmentation invariants on random data") {
    std::mt19937_64 rng(21);
    const AugmentationSpec spec{{"f1", Aggregate::Min, "min.f1"},
                                {"f2", Aggregate::Max, "max.f2"},
                                {"f3", Aggregate::Mean, "mean.f3"}};
    for (int trial = 0; trial < 25; ++trial) {
        const Dataset data = testsupport::random_dataset(rng, 8, 3, 2, 12, true);
        const Dataset out = augment(data, spec);

        // constant within each lot; min/max attained by a member of the lot
        for (const auto& lot : out.lots()) {
            for (std::size_t c = 3; c < 6; ++c)
                for (std::size_t i = 1; i < lot.size(); ++i) CHECK(lot.choice(i)[c] == lot.choice(0)[c]);
            bool min_hit = false;
            bool max_hit = false;
            for (std::size_t i = 0; i < lot.size(); ++i) {
                min_hit |= lot.choice(i)[0] == lot.choice(0)[3];
                max_hit |= lot.choice(i)[1] == lot.choice(0)[4];
            }
            CHECK(min_hit);
            CHECK(max_hit);
        }

        // projecting back reproduces the input exactly
        CHECK(project(out, 3) == data);

        // commutes with reversing the lot order and each lot's choice order
        std::vector<Lot> reversed;
        for (auto it = data.lots().rbegin(); it != data.lots().rend(); ++it) {
            std::vector<Choice> rows;
            for (std::size_t i = it->size(); i-- > 0;) {
                const auto row = it->choice(i);
                rows.emplace_back(row.begin(), row.end());
            }
            std::optional<std::size_t> prime;
            if (it->prime()) prime = it->size() - 1 - *it->prime();
            reversed.push_back(Lot::from_rows(it->id(), rows, prime));
        }
        const Dataset rev_out = augment(Dataset(data.feature_names(), reversed), spec);
        for (std::size_t l = 0; l < out.lot_count(); ++l) {
            const Lot& a = out.lot(l);
            const Lot& b = rev_out.lot(out.lot_count() - 1 - l);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto ra = a.choice(i);
                const auto rb = b.choice(a.size() - 1 - i);
                for (std::size_t c = 0; c < 6; ++c) {
                    if (c == 5)  // mean: summation order differs
                        CHECK(ra[c] == doctest::Approx(rb[c]).epsilon(1e-14));
                    else
                        CHECK(ra[c] == rb[c]);
                }
            }
        }
    }
}
