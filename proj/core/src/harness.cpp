// Copyright 2026 The DDQCL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ddqcl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ddqcl/bas.hpp"
#include "ddqcl/sampling.hpp"

namespace ddqcl {

namespace {

constexpr std::uint64_t kFinalReadoutTag = 0x66696e616cULL; // "final"

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace

CircuitCost make_cost(const ExperimentConfig &cfg, const std::optional<ConfusionMatrix> &correction,
                      std::uint64_t run_seed) {
    CircuitCost::Options options;
    options.shots = cfg.optimizer.shots;
    options.exact_mode = cfg.exact_mode;
    options.seed = run_seed;
    if (cfg.readout.enabled && !cfg.exact_mode) {
        options.readout = ReadoutStage{cfg.readout.model, cfg.readout.correction ? correction : std::nullopt,
                                       cfg.readout.max_condition};
    }
    return CircuitCost(cfg.make_ansatz(), bas_target_distribution(cfg.bas), std::move(options));
}

Calibration calibrate_batch(const ExperimentConfig &cfg) {
    if (!cfg.readout.enabled) {
        throw std::invalid_argument("calibration requested but the readout channel is disabled");
    }
    return calibrate(cfg.readout.model, cfg.readout.calibration_shots, cfg.seed);
}

FinalMetrics final_metrics(const CircuitCost &cost, std::span<const double> params, const std::vector<BitString> &patterns,
                           std::uint64_t shots, double kl_epsilon, std::uint64_t run_seed) {
    Rng rng = make_stream(run_seed, {kFinalReadoutTag});
    FinalMetrics out;
    out.shots = shots;
    const Distribution born = cost.exact_distribution(params);
    out.exact_kl = kl_divergence(cost.target(), born, kl_epsilon);
    if (cost.options().exact_mode) {
        out.js = js_divergence(born, cost.target());
        out.kl = out.exact_kl;
        out.qbas = qbas_score(sample(born, shots, rng), patterns);
        return out;
    }
    const Readout readout = cost.measure(params, shots, rng);
    out.js = js_divergence(readout.model, cost.target());
    out.kl = kl_divergence(cost.target(), readout.model, kl_epsilon);
    out.qbas = qbas_score(*readout.raw, patterns);
    return out;
}

AggregateSeries aggregate(const std::vector<LearningCurve> &curves) {
    if (curves.empty()) {
        throw std::invalid_argument("aggregate: no curves");
    }
    const std::size_t length = curves.front().points.size();
    for (const auto &c : curves) {
        if (c.points.size() != length) {
            throw std::invalid_argument("aggregate: curves have different lengths");
        }
    }
    AggregateSeries out;
    out.median.resize(length);
    out.min.resize(length);
    out.max.resize(length);
    std::vector<double> column(curves.size());
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t r = 0; r < curves.size(); ++r) {
            column[r] = curves[r].points[i].best_cost;
        }
        out.min[i] = *std::min_element(column.begin(), column.end());
        out.max[i] = *std::max_element(column.begin(), column.end());
        out.median[i] = median_of(column);
    }
    return out;
}

BatchResult run_batch(const ExperimentConfig &cfg) {
    cfg.validate();

    BatchResult result{cfg, cfg.make_ansatz(), {}, {}, {}, std::nullopt, {}};
    std::optional<ConfusionMatrix> correction;
    if (cfg.calibrates()) {
        result.calibration = calibrate_batch(cfg);
        correction = result.calibration->matrix;
    }

    const auto patterns = bas_patterns(cfg.bas);
    result.curves.resize(cfg.runs);
    result.runs.resize(cfg.runs);

    auto train = [&](std::size_t run) {
        const std::uint64_t seed = cfg.seed + run;
        CircuitCost cost = make_cost(cfg, correction, seed);
        CostContext ctx(cost, cfg.optimizer.budget, seed);
        LearningCurve curve = run_optimizer(ctx, cfg.optimizer);

        RunResult &r = result.runs[run];
        r.run = run;
        r.seed = seed;
        r.evaluations = curve.points.size();
        r.best_cost = curve.best_cost();
        r.best_params = curve.best_params();
        r.training_shots = cost.shots_used();
        r.final = final_metrics(cost, r.best_params, patterns, cfg.report_shots(), cfg.kl_epsilon, seed);
        result.curves[run] = std::move(curve);
    };

    std::size_t threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    threads = std::min(threads, cfg.runs);
    if (threads <= 1) {
        for (std::size_t run = 0; run < cfg.runs; ++run) {
            train(run);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> workers;
        for (std::size_t t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t run = next++; run < cfg.runs; run = next++) {
                    try {
                        train(run);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        workers.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    result.aggregate = aggregate(result.curves);

    ProtocolCounters &c = result.counters;
    c.runs = cfg.runs;
    c.budget = cfg.optimizer.budget;
    c.shots_per_evaluation = cfg.exact_mode ? 0 : cfg.optimizer.shots;
    for (const auto &r : result.runs) {
        c.evaluations_total += r.evaluations;
        c.training_shots_total += r.training_shots;
        c.report_shots_total += r.final.shots;
    }
    if (result.calibration) {
        c.calibrations = 1;
        c.calibration_experiments = result.calibration->experiments;
        c.calibration_shots_per_experiment = result.calibration->shots_per_experiment;
    }
    return result;
}

} // namespace ddqcl
