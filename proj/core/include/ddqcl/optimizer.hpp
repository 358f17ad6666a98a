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
 * Classical optimizers for noisy circuit costs.
 *
 * Every optimizer runs until its CostContext throws BudgetExhausted, so a
 * run always consumes exactly the configured budget. Randomness comes from
 * streams keyed by the context seed.
 *
 * - ADAM: central finite-difference gradients (2L evaluations per step) and
 *   the usual bias-corrected moment update. Starts from a uniform random
 *   point.
 * - SVHC: stochastic hill climbing. Starts from the best of n_ini random
 *   circuits, perturbs a random subset of coordinates with Gaussian steps
 *   and accepts strict improvements.
 * - ZOO: elite-set region search. Each elite owns a sampling box; a
 *   candidate is drawn inside the box of a random elite (probability
 *   lambda) or uniformly. A better candidate replaces its elite and widens
 *   the box, failures narrow it. Elites that stop making relative progress,
 *   or whose box collapses, restart from a uniform draw.
 *
 * SVHC and ZOO periodically re-evaluate their incumbents and keep the fresh
 * value ("value suppression").
 * The SVHC and ZOO hyperparameter defaults are our own choices, not values
 * taken from the reference implementations of those methods.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ddqcl/cost.hpp"
#include "ddqcl/sampling.hpp"

namespace ddqcl {

enum class OptimizerKind { adam, svhc, zoo };

std::string to_string(OptimizerKind kind);
/// Throws std::invalid_argument for unknown names.
OptimizerKind optimizer_kind_from_string(const std::string &name);

struct AdamConfig {
    double learning_rate = 0.2;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    /// Finite-difference half-step h; gradient_i = (f(x + h e_i) - f(x - h e_i)) / 2h.
    double fd_step = 0.15707963267948966; // pi / 20
};

struct SvhcConfig {
    /// Coordinates perturbed per move; 0 selects ceil(L / 4).
    std::size_t subset_size = 0;
    double sigma = 0.3;
    /// Iterations between incumbent re-evaluations; 0 disables.
    std::size_t suppression_period = 25;
};

struct ZooConfig {
    std::size_t elite_size = 1;
    /// Probability of sampling around an elite instead of uniformly.
    double local_probability = 0.95;
    /// Half-width of a fresh elite's sampling box, radians.
    double initial_radius = 1.0;
    /// An elite whose box shrinks below this restarts.
    double min_radius = 1e-3;
    /// Box scaling after an improving sample (capped at initial_radius).
    double grow_factor = 1.5;
    /// Box scaling after `stagnation_window` consecutive failed samples.
    double shrink_factor = 0.904;
    std::size_t stagnation_window = 1;
    /// Coordinates resampled per candidate; 0 resamples all of them.
    std::size_t region_dims = 0;
    /// Samples per progress check; an elite whose cost fell by less than
    /// `restart_threshold` (relative) over one window restarts. 0 disables.
    std::size_t restart_window = 65;
    double restart_threshold = 0.2;
    /// Iterations between elite re-evaluations; 0 disables.
    std::size_t suppression_period = 25;
};

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::zoo;
    std::uint64_t budget = 2000;
    std::uint64_t shots = 3000;
    /// n_ini = multiplier * L random circuits seed SVHC and ZOO.
    std::size_t n_ini_multiplier = 3;
    AdamConfig adam;
    SvhcConfig svhc;
    ZooConfig zoo;
    /// Starting point for ADAM instead of a random draw.
    std::optional<std::vector<double>> initial_params;

    std::size_t n_ini(std::size_t param_count) const { return n_ini_multiplier * param_count; }

    /// Throws std::invalid_argument when hyperparameters are out of range or
    /// the budget cannot cover initialization plus one step.
    void validate(std::size_t param_count) const;
};

struct InitResult {
    std::vector<double> params;
    double cost;
    std::uint64_t evaluations;
};

/// Uniform draw in [0, 2pi)^dim.
std::vector<double> random_point(std::size_t dim, Rng &rng);

/// Evaluates n_ini uniform random points once each and returns the best.
InitResult init_search(CostContext &ctx, std::size_t n_ini, Rng &rng);

LearningCurve run_adam(CostContext &ctx, const OptimizerConfig &cfg);
LearningCurve run_svhc(CostContext &ctx, const OptimizerConfig &cfg);
LearningCurve run_zoo(CostContext &ctx, const OptimizerConfig &cfg);

/// Dispatches on cfg.kind. The context's budget must equal cfg.budget.
LearningCurve run_optimizer(CostContext &ctx, const OptimizerConfig &cfg);

void to_json(nlohmann::json &j, const OptimizerConfig &cfg);
/// Reads "kind", "n_ini_multiplier", "adam", "svhc", "zoo"; rejects
/// unknown keys. Budget and shots are left untouched.
void optimizer_from_json(const nlohmann::json &j, OptimizerConfig &cfg);

namespace detail {
/// Stream tags for optimizer-owned randomness.
inline constexpr std::uint64_t kOptimizerStreamTag = 0x6f7074ULL;
} // namespace detail

} // namespace ddqcl
