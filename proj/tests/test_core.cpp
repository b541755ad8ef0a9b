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

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "optchoice/core.hpp"
#include "optchoice/error.hpp"
#include "test_support.hpp"

using namespace optchoice;

namespace {

Lot three_choice_lot(std::optional<std::size_t> prime) {
    return Lot::from_rows("x", {{0.1}, {0.2}, {0.3}}, prime);
}

ScoringFunction first_feature() {
    return [](const Lot& lot, std::size_t i) { return lot.choice(i)[0]; };
}

ScoringFunction constant_scorer() {
    return [](const Lot&, std::size_t) { return 0.0; };
}

ScoringFunction indicator_scorer() {
    return [](const Lot& lot, std::size_t i) { return static_cast<double>(indicator(lot, i)); };
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an optchoice::Error");
    return ErrorKind::Harness;
}

}  // namespace

TEST_CASE("lot and dataset invariants") {
    CHECK(kind_of([] { Lot::from_rows("a", {{1.0}}, std::nullopt); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Lot::from_rows("a", {{1.0}, {2.0}}, 2); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Lot::from_rows("a", {{1.0}, {NAN}}, 0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Lot::from_rows("a", {{1.0}, {2.0, 3.0}}, 0); }) == ErrorKind::InvalidArgument);

    const Lot two_d = Lot::from_rows("a", {{1.0, 2.0}, {3.0, 4.0}}, 0);
    CHECK(kind_of([&] { Dataset({"f1"}, {two_d}); }) == ErrorKind::Schema);
    CHECK(kind_of([&] { Dataset({"f1", "f1"}, {two_d}); }) == ErrorKind::Schema);
    CHECK(kind_of([&] { Dataset({"f1", "f2"}, {two_d}, true); }) == ErrorKind::InvalidArgument);
    CHECK_NOTHROW(Dataset({"f1", "f2"}, {two_d}, false));

    const Dataset data({"f1", "f2"}, {two_d, Lot::from_rows("b", {{0, 0}, {1, 1}, {0, 1}}, std::nullopt)});
    CHECK(data.choice_count() == 5);
    CHECK(data.feature_index("f2") == 1);
    CHECK_FALSE(data.feature_index("zz").has_value());
    CHECK(data.without_lot(0).lot(0).id() == "b");
}

TEST_CASE("indicator") {
    const Lot lot = Lot::from_rows("x", {{0}, {1}, {2}}, 2);
    CHECK(indicator(lot, 2) == 1);
    CHECK(indicator(lot, 0) == 0);
    const Lot primeless = three_choice_lot(std::nullopt);
    for (std::size_t i = 0; i < 3; ++i) CHECK(indicator(primeless, i) == 0);
    CHECK(kind_of([&] { indicator(lot, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("predict") {
    const std::vector<double> unique{0.2, 0.9, 0.5};
    const std::vector<double> tied{0.7, 0.7, 0.1};
    const std::vector<double> flat{0.0, 0.0, 0.0};
    CHECK(predict(unique) == 1);
    CHECK_FALSE(predict(tied).has_value());
    CHECK_FALSE(predict(flat).has_value());
    // a tie below the maximum does not matter
    CHECK(predict(std::vector<double>{0.1, 0.1, 0.5}) == 2);
    CHECK(predict(std::vector<double>{0.5, 0.1, 0.1}) == 0);
    CHECK(kind_of([] { predict(std::vector<double>{}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { predict(std::vector<double>{1.0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("lot_success") {
    const Lot lot = three_choice_lot(1);
    CHECK(lot_success(lot, 1));
    CHECK_FALSE(lot_success(lot, 0));
    CHECK_FALSE(lot_success(lot, std::nullopt));
    const Lot primeless = three_choice_lot(std::nullopt);
    CHECK(lot_success(primeless, std::nullopt));
    CHECK_FALSE(lot_success(primeless, 0));
    CHECK(kind_of([&] { lot_success(lot, 7); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("success_rate examples") {
    std::mt19937_64 rng(3);
    const Dataset five = testsupport::random_dataset(rng, 5, 3, 2, 8);
    CHECK(success_rate(indicator_scorer(), five) == 1.0);
    CHECK(success_rate(constant_scorer(), five) == 0.0);

    const Dataset second = testsupport::ranked_dataset(10, 10, 2);
    CHECK(success_rate(first_feature(), second) == 0.0);
    const Dataset first = testsupport::ranked_dataset(10, 10, 1);
    CHECK(success_rate(first_feature(), first) == 1.0);

    const Dataset empty({"f1"}, {});
    CHECK(kind_of([&] { success_rate(constant_scorer(), empty); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("non-finite scores name the lot") {
    const Dataset data({"f1"}, {Lot::from_rows("culprit", {{0.0}, {1.0}}, 0)});
    const ScoringFunction bad = [](const Lot& lot, std::size_t i) { return std::log(lot.choice(i)[0]); };
    try {
        success_rate(bad, data);
        FAIL("expected an evaluation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Evaluation);
        CHECK(std::string(e.what()).find("culprit") != std::string::npos);
    }
}

TEST_CASE("pointwise_accuracy") {
    const Dataset ten = testsupport::ranked_dataset(7, 10, 3);
    std::vector<Prediction> none;
    for (std::size_t l = 0; l < ten.lot_count(); ++l) none.push_back({l, std::nullopt});
    CHECK(pointwise_accuracy(none, ten) == doctest::Approx(0.9).epsilon(1e-15));

    std::vector<Prediction> perfect;
    for (std::size_t l = 0; l < ten.lot_count(); ++l) perfect.push_back({l, ten.lot(l).prime()});
    CHECK(pointwise_accuracy(perfect, ten) == 1.0);

    const Dataset four = testsupport::ranked_dataset(5, 4, 1);
    std::vector<Prediction> none4;
    for (std::size_t l = 0; l < four.lot_count(); ++l) none4.push_back({l, std::nullopt});
    CHECK(pointwise_accuracy(none4, four) == 0.75);

    none4.pop_back();
    CHECK(kind_of([&] { pointwise_accuracy(none4, four); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("lotwise_auc") {
    CHECK(lotwise_auc(first_feature(), testsupport::ranked_dataset(4, 10, 2)) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(lotwise_auc(first_feature(), testsupport::ranked_dataset(4, 10, 1)) == 1.0);
    CHECK(lotwise_auc(first_feature(), testsupport::ranked_dataset(4, 10, 10)) == 0.0);

    // prime tied with one of two non-primes, strictly above the other: (1 + 0.5) / 2
    const Dataset tied({"f1"}, {Lot::from_rows("t", {{1.0}, {1.0}, {0.0}}, 0)});
    CHECK(lotwise_auc(first_feature(), tied) == 0.75);

    const Dataset primeless({"f1"}, {three_choice_lot(std::nullopt)});
    CHECK(kind_of([&] { lotwise_auc(first_feature(), primeless); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("property: lotwise_auc of rank r in k-choice lots is (k-r)/(k-1)") {
    for (std::size_t k = 2; k <= 10; ++k) {
        for (std::size_t r = 1; r <= k; ++r) {
            const Dataset data = testsupport::ranked_dataset(3, k, r);
            // brute-force count of non-primes strictly below the prime
            std::size_t below = 0;
            const Lot& lot = data.lot(0);
            for (std::size_t i = 0; i < k; ++i)
                if (i != *lot.prime() && lot.choice(i)[0] < lot.choice(*lot.prime())[0]) ++below;
            const double expected = static_cast<double>(k - r) / static_cast<double>(k - 1);
            CHECK(static_cast<double>(below) / static_cast<double>(k - 1) == doctest::Approx(expected));
            CHECK(lotwise_auc(first_feature(), data) == doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("property: accuracy/success separation for k = 2..20") {
    for (std::size_t k = 2; k <= 20; ++k) {
        const Dataset data = testsupport::ranked_dataset(6, k, 1);
        std::vector<Prediction> none;
        for (std::size_t l = 0; l < data.lot_count(); ++l) none.push_back({l, std::nullopt});
        const double expected = static_cast<double>(k - 1) / static_cast<double>(k);
        CHECK(pointwise_accuracy(none, data) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(success_rate(constant_scorer(), data) == 0.0);
    }
}

TEST_CASE("property: predict is permutation-equivariant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coarse(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 9;
        std::vector<double> scores(n);
        for (auto& s : scores) s = coarse(rng);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> permuted(n);
        for (std::size_t i = 0; i < n; ++i) permuted[i] = scores[perm[i]];
        const auto original = predict(scores);
        const auto moved = predict(permuted);
        REQUIRE(original.has_value() == moved.has_value());
        if (original) CHECK(perm[*moved] == *original);
    }
}

TEST_CASE("property: predict is invariant under strictly increasing transforms") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> coarse(-3, 3);
    std::uniform_real_distribution<double> fine(-2.0, 2.0);
    const std::vector<std::function<double(double)>> transforms{
        [](double x) { return std::exp(x); },
        [](double x) { return x * x * x; },
        [](double x) { return 3.0 * x + 7.0; },
        [](double x) { return std::atan(x); },
        [](double x) { return 1.0 / (1.0 + std::exp(-x)); },
    };
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 7;
        std::vector<double> scores(n);
        for (auto& s : scores) s = trial % 2 ? coarse(rng) : fine(rng);
        for (const auto& h : transforms) {
            std::vector<double> mapped(n);
            for (std::size_t i = 0; i < n; ++i) mapped[i] = h(scores[i]);
            CHECK(predict(mapped) == predict(scores));
        }
    }
}

TEST_CASE("property: success_rate depends only on the per-lot argmax") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Dataset data = testsupport::random_dataset(rng, 15, 2, 2, 9, true);
        const ScoringFunction g = [](const Lot& lot, std::size_t i) {
            return lot.choice(i)[0] - 0.5 * lot.choice(i)[1];
        };
        // same argmax per lot, different values
        const ScoringFunction h = [&g](const Lot& lot, std::size_t i) { return std::exp(2.0 * g(lot, i)) - 4.0; };
        CHECK(success_rate(g, data) == success_rate(h, data));
        const double rate = success_rate(g, data);
        CHECK(rate >= 0.0);
        CHECK(rate <= 1.0);
        // primeless lots make the indicator scorer tie, which counts as success
        CHECK(success_rate(indicator_scorer(), data) == 1.0);
    }
}
