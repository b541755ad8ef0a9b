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

#include <atomic>
#include <mutex>
#include <random>
#include <set>

#include "doctest.h"
#include "optchoice/datagen.hpp"
#include "optchoice/error.hpp"
#include "optchoice/eval.hpp"
#include "test_support.hpp"

using namespace optchoice;

namespace {

TrainerPtr constant_trainer(ScoringFunction fn) {
    return std::make_shared<FunctionTrainer>("constant", [fn](const Dataset&) { return fn; });
}

TrainerPtr brute_force(unsigned bound) {
    return std::make_shared<BruteForceTrainer>("bruteforce", BruteForceConfig{bound, 0.01});
}

TrainerPtr logistic(std::size_t epochs = 200) {
    TrainConfig config;
    config.epochs = epochs;
    return std::make_shared<LogisticTrainer>("logistic", config);
}

}  // namespace

TEST_CASE("constant trainer: LOO equals the full-data rate") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const Dataset data = testsupport::random_dataset(rng, 15, 2, 2, 9, true);
        const ScoringFunction fn = [](const Lot& lot, std::size_t i) { return lot.choice(i)[0] - lot.choice(i)[1]; };
        CHECK(leave_one_lot_out(*constant_trainer(fn), data) == success_rate(fn, data));
    }
}

TEST_CASE("LOO with an indicator-equivalent trainer") {
    const Dataset data({"x1"}, {Lot::from_rows("a", {{0.1}, {0.9}}, 1), Lot::from_rows("b", {{0.8}, {0.3}, {0.2}}, 0),
                                Lot::from_rows("c", {{0.4}, {0.5}}, 1)});
    CHECK(leave_one_lot_out(*brute_force(3), data) == 1.0);
}

TEST_CASE("planted brute force generalizes in LOO") {
    GenConfig gen = engine_preset();
    gen.noise_sigma = 0.0;
    gen.lots = 30;
    const Dataset data = generate(gen);
    CHECK(leave_one_lot_out(*brute_force(5), data) == 1.0);
}

TEST_CASE("the held-out lot never reaches the trainer") {
    std::mt19937_64 rng(42);
    const Dataset data = testsupport::random_dataset(rng, 9, 2, 2, 6);
    std::mutex mutex;
    std::vector<std::set<std::string>> seen;
    auto spy = std::make_shared<FunctionTrainer>("spy", [&](const Dataset& training) {
        std::set<std::string> ids;
        for (const auto& lot : training.lots()) ids.insert(lot.id());
        std::lock_guard lock(mutex);
        seen.push_back(ids);
        return ScoringFunction([](const Lot&, std::size_t i) { return static_cast<double>(i); });
    });
    leave_one_lot_out(*spy, data, 3);
    REQUIRE(seen.size() == 9);
    std::set<std::string> missing;
    for (const auto& ids : seen) {
        CHECK(ids.size() == 8);
        for (const auto& lot : data.lots())
            if (!ids.count(lot.id())) missing.insert(lot.id());
    }
    CHECK(missing.size() == 9);
}

TEST_CASE("fold failures name the fold") {
    std::mt19937_64 rng(43);
    const Dataset data = testsupport::random_dataset(rng, 5, 1, 2, 4);
    const std::string victim = data.lot(2).id();
    auto fragile = std::make_shared<FunctionTrainer>("fragile", [&](const Dataset& training) -> ScoringFunction {
        for (const auto& lot : training.lots())
            if (lot.id() == victim) return [](const Lot&, std::size_t) { return 0.0; };
        fail(ErrorKind::Training, "boom");
    });
    try {
        leave_one_lot_out(*fragile, data);
        FAIL("expected a harness error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Harness);
        CHECK(std::string(e.what()).find(victim) != std::string::npos);
        CHECK(std::string(e.what()).find("boom") != std::string::npos);
    }
}

TEST_CASE("augmenting trainer scores held-out lots with their own aggregates") {
    const Dataset data = testsupport::lot_relative_dataset(3, 20);
    const AugmentationSpec spec{{"f1", Aggregate::Min, "min.f1"}};
    std::size_t trained_dimension = 0;
    auto inner = std::make_shared<FunctionTrainer>("inner", [&](const Dataset& training) {
        trained_dimension = training.dimension();
        // x1 - min x1 over the lot, read from the appended column
        return ScoringFunction([](const Lot& lot, std::size_t i) { return lot.choice(i)[0] - lot.choice(i)[2]; });
    });
    const AugmentingTrainer trainer(inner, spec);
    CHECK(trainer.name() == "inner");
    const ScoringFunction fn = trainer.train(data);
    CHECK(trained_dimension == 3);
    CHECK(success_rate(fn, data) == 1.0);
}

TEST_CASE("report rows") {
    GenConfig gen = engine_preset();
    gen.lots = 12;
    const Dataset data = generate(gen);

    const auto one = build_report(data, {brute_force(2)}, std::nullopt, {EvalMode::Full, 1});
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].method == "bruteforce");
    CHECK(one.rows[0].variant == Variant::Original);
    CHECK(one.rows[0].full_data_rate.has_value());
    CHECK_FALSE(one.rows[0].loo_rate.has_value());
    CHECK(one.rows[0].lots == 12);
    CHECK(one.rows[0].choices == data.choice_count());

    const AugmentationSpec spec{{"f1", Aggregate::Min, "min.f1"}, {"f2", Aggregate::Min, "min.f2"}};
    const auto four = build_report(data, {logistic(), brute_force(1)}, spec, {EvalMode::Both, 1});
    REQUIRE(four.rows.size() == 4);
    CHECK(four.rows[0].method == "logistic");
    CHECK(four.rows[0].variant == Variant::Original);
    CHECK(four.rows[1].method == "logistic");
    CHECK(four.rows[1].variant == Variant::Extended);
    CHECK(four.rows[2].method == "bruteforce");
    CHECK(four.rows[3].variant == Variant::Extended);
    for (const auto& row : four.rows) {
        CHECK(row.full_data_rate.has_value());
        CHECK(row.loo_rate.has_value());
    }

    const auto loo = build_report(data, {brute_force(1)}, std::nullopt, {EvalMode::Loo, 1});
    CHECK_FALSE(loo.rows[0].full_data_rate.has_value());
    CHECK(loo.rows[0].loo_rate.has_value());
}

TEST_CASE("report on the engine preset counts 114 lots") {
    const Dataset data = generate(engine_preset());
    const auto report = build_report(data, {brute_force(1)}, std::nullopt, {EvalMode::Full, 1});
    CHECK(report.rows[0].lots == 114);
}

TEST_CASE("report formats") {
    EvalReport report;
    report.rows.push_back({"bf", Variant::Original, 0.5, std::nullopt, 2, 5});
    report.rows.push_back({"bf", Variant::Extended, 1.0, 0.25, 2, 5});
    CHECK(format_tsv(report) == "bf\toriginal\t0.5000\t-\t2\t5\nbf\textended\t1.0000\t0.2500\t2\t5\n");
    const std::string text = format_text(report);
    CHECK(text.find("method") == 0);
    CHECK(text.find("0.2500") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("property: results do not depend on the thread count") {
    GenConfig gen = engine_preset();
    gen.lots = 16;
    const Dataset data = generate(gen);
    const AugmentationSpec spec{{"f1", Aggregate::Max, "max.f1"}};
    const std::vector<TrainerPtr> trainers{brute_force(2), logistic(50)};
    const auto serial = format_tsv(build_report(data, trainers, spec, {EvalMode::Both, 1}));
    const auto threaded = format_tsv(build_report(data, trainers, spec, {EvalMode::Both, 4}));
    CHECK(serial == threaded);
}
