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

/**
 * @file
 * Batch runner: one readout calibration, then `runs` independent seeded
 * training runs (seed = base seed + run index), per-run reporting metrics,
 * a median/min/max envelope over the best-so-far curves, and file export.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ddqcl/ansatz.hpp"
#include "ddqcl/cost.hpp"
#include "ddqcl/experiment_config.hpp"
#include "ddqcl/metrics.hpp"
#include "ddqcl/readout.hpp"

namespace ddqcl {

/// Reporting metrics of a trained model, measured once more after training.
struct FinalMetrics {
    /// JS of the final readout's (processed) distribution to the target.
    double js = 0.0;
    /// KL(target || final readout distribution), model clamped at epsilon.
    double kl = 0.0;
    /// KL(target || Born distribution), noise free.
    double exact_kl = 0.0;
    /// qBAS on the raw histogram of the final readout.
    QbasScore qbas;
    std::uint64_t shots = 0;
};

struct RunResult {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    /// Lowest training cost recorded.
    double best_cost = 0.0;
    std::vector<double> best_params;
    FinalMetrics final;
    std::uint64_t training_shots = 0;
};

struct AggregateSeries {
    std::vector<double> median;
    std::vector<double> min;
    std::vector<double> max;
};

struct ProtocolCounters {
    std::size_t runs = 0;
    std::uint64_t budget = 0;
    std::uint64_t evaluations_total = 0;
    std::uint64_t shots_per_evaluation = 0;
    std::uint64_t training_shots_total = 0;
    std::uint64_t report_shots_total = 0;
    std::size_t calibration_experiments = 0;
    std::uint64_t calibration_shots_per_experiment = 0;
    std::size_t calibrations = 0;
};

struct BatchResult {
    ExperimentConfig config;
    Ansatz ansatz;
    std::vector<LearningCurve> curves;
    std::vector<RunResult> runs;
    AggregateSeries aggregate;
    std::optional<Calibration> calibration;
    ProtocolCounters counters;
};

/// Builds the cost pipeline for one run of `cfg`.
CircuitCost make_cost(const ExperimentConfig &cfg, const std::optional<ConfusionMatrix> &correction,
                      std::uint64_t run_seed);

/// Calibrates the configured readout channel; the result every run of a
/// batch shares.
Calibration calibrate_batch(const ExperimentConfig &cfg);

/// Final readout of `params` through the run's measurement pipeline. In
/// exact mode the distribution is exact and the qBAS histogram is sampled
/// from it. Deterministic in `run_seed`.
FinalMetrics final_metrics(const CircuitCost &cost, std::span<const double> params, const std::vector<BitString> &patterns,
                           std::uint64_t shots, double kl_epsilon, std::uint64_t run_seed);

/// Validates `cfg`, then calibrates (if correction is on) and trains every
/// run. Throws std::invalid_argument before any run on a bad config.
BatchResult run_batch(const ExperimentConfig &cfg);

/// Pointwise median and min/max of best-so-far cost. Throws
/// std::invalid_argument for an empty list or curves of unequal length.
AggregateSeries aggregate(const std::vector<LearningCurve> &curves);

/// summary.json document.
nlohmann::json summary_json(const BatchResult &result);

/// Writes config.json, curve_run<i>.csv, aggregate.csv, summary.json and,
/// when calibrated, confusion.json into `dir` (created if missing).
/// Returns the written paths. IO failures throw std::runtime_error naming
/// the path.
std::vector<std::filesystem::path> export_result(const BatchResult &result, const std::filesystem::path &dir);

} // namespace ddqcl
