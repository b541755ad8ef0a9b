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

#include "optchoice/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "optchoice/error.hpp"
#include "parallel.hpp"

namespace optchoice {

namespace {

// Rates within this distance of the tolerance boundary count as inside it, so
// that k/L - tol comparisons do not hinge on the last bit.
constexpr double kRateSlack = 1e-12;

std::string format_point(std::span<const double> x) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ')';
    return os.str();
}

}  // namespace

double LinearScorer::score(std::span<const double> features) const {
    if (features.size() != coefficients.size())
        fail(ErrorKind::InvalidArgument, "choice has " + std::to_string(features.size()) +
                                             " features, scorer expects " + std::to_string(coefficients.size()));
    double s = 0.0;
    for (std::size_t j = 0; j < features.size(); ++j) s += coefficients[j] * features[j];
    return s;
}

ScoringFunction LinearScorer::scoring_function() const {
    return [scorer = *this](const Lot& lot, std::size_t index) { return scorer.score(lot.choice(index)); };
}

std::size_t linear_success_count(std::span<const double> coefficients, const Dataset& dataset) {
    const std::size_t d = dataset.dimension();
    if (coefficients.size() != d)
        fail(ErrorKind::InvalidArgument, "scorer has " + std::to_string(coefficients.size()) +
                                             " coefficients, dataset has " + std::to_string(d) + " features");
    std::size_t successes = 0;
    for (const auto& lot : dataset.lots()) {
        const double* row = lot.values().data();
        double best = 0.0;
        std::size_t best_index = 0;
        bool tied = false;
        for (std::size_t i = 0; i < lot.size(); ++i, row += d) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += coefficients[j] * row[j];
            if (!std::isfinite(s))
                fail(ErrorKind::Evaluation, "non-finite score for choice " + std::to_string(i) + " of lot '" +
                                                lot.id() + "'");
            if (i == 0 || s > best) {
                best = s;
                best_index = i;
                tied = false;
            } else if (s == best) {
                tied = true;
            }
        }
        const auto prime = lot.prime();
        if (prime ? (!tied && best_index == *prime) : tied) ++successes;
    }
    return successes;
}

double linear_success_rate(std::span<const double> coefficients, const Dataset& dataset) {
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "success rate of an empty dataset");
    return static_cast<double>(linear_success_count(coefficients, dataset)) /
           static_cast<double>(dataset.lot_count());
}

void BruteForceConfig::validate() const {
    if (bound < 1) fail(ErrorKind::InvalidArgument, "coefficient bound n must be >= 1");
    if (!(tolerance >= 0.0 && tolerance < 1.0))
        fail(ErrorKind::InvalidArgument, "tolerance must lie in [0, 1)");
}

std::uint64_t grid_size(unsigned bound, std::size_t dimension) {
    std::uint64_t size = 1;
    const std::uint64_t base = static_cast<std::uint64_t>(bound) + 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        size *= base;
    }
    return size;
}

namespace {

// Best candidate seen for one success count: minimal sum, then maximal index.
struct Slot {
    std::uint64_t sum = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    bool filled = false;

    bool improves_on(const Slot& other) const {
        if (!other.filled) return filled;
        return filled && (sum < other.sum || (sum == other.sum && index > other.index));
    }
};

std::vector<unsigned> decode(std::uint64_t index, unsigned bound, std::size_t dimension) {
    std::vector<unsigned> digits(dimension);
    for (std::size_t j = dimension; j-- > 0;) {
        digits[j] = static_cast<unsigned>(index % (bound + 1));
        index /= bound + 1;
    }
    return digits;
}

}  // namespace

SearchResult brute_force_search(const Dataset& dataset, const BruteForceConfig& config) {
    config.validate();
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "brute-force search on an empty dataset");
    const std::size_t d = dataset.dimension();
    const std::size_t lots = dataset.lot_count();
    const std::uint64_t grid = grid_size(config.bound, d);
    if (grid == std::numeric_limits<std::uint64_t>::max() || grid > config.pair_cap / lots)
        fail(ErrorKind::Resource, "grid of (n+1)^d = " + std::to_string(config.bound + 1) + "^" + std::to_string(d) +
                                      " = " + (grid == std::numeric_limits<std::uint64_t>::max()
                                                   ? std::string("overflow")
                                                   : std::to_string(grid)) +
                                      " candidates over " + std::to_string(lots) + " lots exceeds the cap of " +
                                      std::to_string(config.pair_cap) + " evaluations");

    const std::size_t threads = std::max<std::size_t>(1, config.threads);
    std::vector<std::vector<Slot>> per_worker(threads, std::vector<Slot>(lots + 1));

    detail::parallel_chunks(static_cast<std::size_t>(grid), threads,
                            [&](std::size_t worker, std::size_t begin, std::size_t end) {
        auto& slots = per_worker[worker];
        std::vector<unsigned> digits = decode(begin, config.bound, d);
        std::vector<double> coefficients(d);
        std::uint64_t sum = std::accumulate(digits.begin(), digits.end(), std::uint64_t{0});
        for (std::size_t index = begin; index < end; ++index) {
            for (std::size_t j = 0; j < d; ++j) coefficients[j] = digits[j];
            const std::size_t count = linear_success_count(coefficients, dataset);
            Slot candidate{sum, index, true};
            if (candidate.improves_on(slots[count])) slots[count] = candidate;
            // odometer step, last coefficient fastest
            for (std::size_t j = d; j-- > 0;) {
                if (digits[j] < config.bound) {
                    ++digits[j];
                    ++sum;
                    break;
                }
                sum -= digits[j];
                digits[j] = 0;
            }
        }
    });

    std::vector<Slot> merged(lots + 1);
    for (const auto& slots : per_worker)
        for (std::size_t c = 0; c <= lots; ++c)
            if (slots[c].improves_on(merged[c])) merged[c] = slots[c];

    std::size_t best_count = lots;
    while (!merged[best_count].filled) --best_count;
    const double best_rate = static_cast<double>(best_count) / static_cast<double>(lots);

    Slot chosen;
    std::size_t chosen_count = best_count;
    for (std::size_t c = 0; c <= lots; ++c) {
        const double rate = static_cast<double>(c) / static_cast<double>(lots);
        if (rate < best_rate - config.tolerance - kRateSlack) continue;
        if (merged[c].improves_on(chosen)) {
            chosen = merged[c];
            chosen_count = c;
        }
    }

    SearchResult result;
    for (unsigned digit : decode(chosen.index, config.bound, d)) result.scorer.coefficients.push_back(digit);
    result.rate = static_cast<double>(chosen_count) / static_cast<double>(lots);
    return result;
}

void NelderMeadConfig::validate() const {
    if (starts.empty()) fail(ErrorKind::InvalidArgument, "Nelder-Mead needs at least one start");
    const std::size_t d = starts.front().size();
    if (d == 0) fail(ErrorKind::InvalidArgument, "Nelder-Mead start points must be non-empty");
    for (const auto& s : starts) {
        if (s.size() != d) fail(ErrorKind::InvalidArgument, "Nelder-Mead starts differ in dimension");
        for (double v : s)
            if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, "Nelder-Mead start has a non-finite coordinate");
    }
    if (!(simplex_scale > 0.0)) fail(ErrorKind::InvalidArgument, "simplex scale must be > 0");
    if (!(convergence_diameter > 0.0)) fail(ErrorKind::InvalidArgument, "convergence diameter must be > 0");
    if (!(reflection > 0.0)) fail(ErrorKind::InvalidArgument, "reflection coefficient must be > 0");
    if (!(expansion > 1.0)) fail(ErrorKind::InvalidArgument, "expansion coefficient must be > 1");
    if (!(contraction > 0.0 && contraction < 1.0))
        fail(ErrorKind::InvalidArgument, "contraction coefficient must lie in (0, 1)");
    if (!(shrink > 0.0 && shrink < 1.0)) fail(ErrorKind::InvalidArgument, "shrink coefficient must lie in (0, 1)");
}

std::vector<std::vector<double>> default_starts(std::size_t dimension, std::size_t count, std::uint64_t seed) {
    if (dimension == 0 || count == 0) fail(ErrorKind::InvalidArgument, "need dimension >= 1 and at least one start");
    const std::size_t units = std::min({std::size_t{8}, 2 * dimension, count / 2});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<std::vector<double>> starts;
    for (std::size_t s = 0; s < count - units; ++s) {
        std::vector<double> x(dimension);
        for (auto& v : x) v = uniform(rng);
        starts.push_back(std::move(x));
    }
    for (std::size_t u = 0; u < units; ++u) {
        std::vector<double> x(dimension, 0.0);
        x[u / 2] = u % 2 == 0 ? 1.0 : -1.0;
        starts.push_back(std::move(x));
    }
    return starts;
}

namespace {

struct Vertex {
    std::vector<double> x;
    double cost;  // negated objective
};

class SimplexRun {
public:
    SimplexRun(const Objective& objective, const NelderMeadConfig& config, NelderMeadResult& result)
        : objective_(objective), config_(config), result_(result) {}

    void run(const std::vector<double>& start) {
        const std::size_t d = start.size();
        const std::size_t max_iterations = config_.max_iterations ? config_.max_iterations : 500 * d;
        std::vector<Vertex> simplex;
        simplex.push_back(evaluate(start));
        for (std::size_t i = 0; i < d; ++i) {
            auto x = start;
            x[i] += config_.simplex_scale;
            simplex.push_back(evaluate(std::move(x)));
        }

        for (std::size_t iter = 0; iter < max_iterations; ++iter) {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex& a, const Vertex& b) { return a.cost < b.cost; });
            if (diameter(simplex) < config_.convergence_diameter) break;

            const Vertex& worst = simplex.back();
            std::vector<double> centroid(d, 0.0);
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[v].x[j] / static_cast<double>(d);

            Vertex reflected = evaluate(towards(centroid, worst.x, -config_.reflection));
            if (reflected.cost < simplex.front().cost) {
                Vertex expanded = evaluate(towards(centroid, reflected.x, config_.expansion));
                simplex.back() = expanded.cost < reflected.cost ? std::move(expanded) : std::move(reflected);
                continue;
            }
            if (reflected.cost < simplex[d - 1].cost) {
                simplex.back() = std::move(reflected);
                continue;
            }
            if (reflected.cost < worst.cost) {
                Vertex outside = evaluate(towards(centroid, reflected.x, config_.contraction));
                if (outside.cost <= reflected.cost) {
                    simplex.back() = std::move(outside);
                    continue;
                }
            } else {
                Vertex inside = evaluate(towards(centroid, worst.x, config_.contraction));
                if (inside.cost < worst.cost) {
                    simplex.back() = std::move(inside);
                    continue;
                }
            }
            for (std::size_t v = 1; v <= d; ++v)
                simplex[v] = evaluate(towards(simplex.front().x, simplex[v].x, config_.shrink));
        }
    }

private:
    // from + t * (to - from)
    static std::vector<double> towards(const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> x(from.size());
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = from[j] + t * (to[j] - from[j]);
        return x;
    }

    static double diameter(const std::vector<Vertex>& simplex) {
        double widest = 0.0;
        for (std::size_t v = 1; v < simplex.size(); ++v) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < simplex[v].x.size(); ++j) {
                const double delta = simplex[v].x[j] - simplex.front().x[j];
                d2 += delta * delta;
            }
            widest = std::max(widest, std::sqrt(d2));
        }
        return widest;
    }

    Vertex evaluate(std::vector<double> x) {
        const double value = objective_(x);
        ++result_.evaluations;
        if (!std::isfinite(value))
            fail(ErrorKind::Optimization, "objective is not finite at " + format_point(x));
        if (result_.best_point.empty() || value > result_.best_value) {
            result_.best_point = x;
            result_.best_value = value;
        }
        return Vertex{std::move(x), -value};
    }

    const Objective& objective_;
    const NelderMeadConfig& config_;
    NelderMeadResult& result_;
};

}  // namespace

NelderMeadResult nelder_mead_maximize(const Objective& objective, const NelderMeadConfig& config) {
    config.validate();
    NelderMeadResult result;
    SimplexRun run(objective, config, result);
    for (const auto& start : config.starts) run.run(start);
    return result;
}

SearchResult maximize_success_rate(const Dataset& dataset, const NelderMeadConfig& config) {
    if (dataset.empty()) fail(ErrorKind::InvalidArgument, "Nelder-Mead search on an empty dataset");
    config.validate();
    if (config.starts.front().size() != dataset.dimension())
        fail(ErrorKind::InvalidArgument, "start points have dimension " +
                                             std::to_string(config.starts.front().size()) + ", dataset has " +
                                             std::to_string(dataset.dimension()));
    const auto found = nelder_mead_maximize(
        [&dataset](std::span<const double> a) { return linear_success_rate(a, dataset); }, config);
    return SearchResult{LinearScorer{found.best_point}, found.best_value};
}

}  // namespace optchoice
