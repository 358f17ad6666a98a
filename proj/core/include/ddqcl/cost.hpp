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
 * Cost evaluation for training: the circuit-to-divergence pipeline, plus the
 * budgeted context every optimizer evaluates through.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ddqcl/ansatz.hpp"
#include "ddqcl/distribution.hpp"
#include "ddqcl/readout.hpp"
#include "ddqcl/sampling.hpp"

namespace ddqcl {

/// Black-box objective over a fixed number of real parameters.
///
/// `evaluation_index` is the 0-based position of the call within a run; a
/// stochastic cost must derive all of its randomness from it (and its own
/// seed) so that results do not depend on call order.
class CostFunction {
  public:
    virtual ~CostFunction() = default;
    virtual std::size_t dimension() const = 0;
    virtual double cost(std::span<const double> params, std::uint64_t evaluation_index) = 0;
};

/// Wraps a plain function; used for analytic surrogates.
class FunctionCost final : public CostFunction {
  public:
    using Fn = std::function<double(std::span<const double>)>;
    FunctionCost(std::size_t dimension, Fn fn) : dimension_(dimension), fn_(std::move(fn)) {}
    std::size_t dimension() const override { return dimension_; }
    double cost(std::span<const double> params, std::uint64_t) override { return fn_(params); }

  private:
    std::size_t dimension_;
    Fn fn_;
};

/// Readout stage of the measurement pipeline.
struct ReadoutStage {
    /// Synthetic channel applied to every shot.
    PerQubitFlipModel channel;
    /// Calibrated matrix used to invert the channel; no correction if empty.
    std::optional<ConfusionMatrix> correction;
    double max_condition = kDefaultMaxCondition;
};

/// Result of one pass of the measurement pipeline.
struct Readout {
    /// Raw shot counts after the readout channel; empty in exact mode.
    std::optional<Histogram> raw;
    /// Distribution handed to scoring (corrected when correction is on).
    Distribution model;
};

/**
 * JS divergence between an ansatz's measured distribution and a target.
 *
 * Exact mode uses the Born probabilities directly. Otherwise each
 * evaluation samples `shots` outcomes, passes them through the readout
 * channel, normalizes, and optionally corrects with the confusion matrix.
 */
class CircuitCost final : public CostFunction {
  public:
    struct Options {
        std::uint64_t shots = 3000;
        bool exact_mode = false;
        std::optional<ReadoutStage> readout;
        std::uint64_t seed = 0;
    };

    CircuitCost(Ansatz ansatz, Distribution target, Options options);

    std::size_t dimension() const override { return ansatz_.param_count(); }
    double cost(std::span<const double> params, std::uint64_t evaluation_index) override;

    /// Runs the measurement pipeline with an explicit generator.
    Readout measure(std::span<const double> params, std::uint64_t shots, Rng &rng) const;
    /// Exact-mode pipeline: Born probabilities, no readout.
    Distribution exact_distribution(std::span<const double> params) const;

    const Ansatz &ansatz() const { return ansatz_; }
    const Distribution &target() const { return target_; }
    const Options &options() const { return options_; }
    /// Shots drawn by cost() so far.
    std::uint64_t shots_used() const { return shots_used_; }

  private:
    Ansatz ansatz_;
    Distribution target_;
    Options options_;
    std::uint64_t shots_used_ = 0;
};

/// Thrown by CostContext::evaluate once the budget is spent. Optimizers let
/// it end their loop.
class BudgetExhausted : public std::runtime_error {
  public:
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

struct CurvePoint {
    std::uint64_t evaluation;
    double cost;
    double best_cost;
};

struct Snapshot {
    std::uint64_t evaluation;
    double cost;
    std::vector<double> params;
};

/// Per-evaluation record of one training run.
struct LearningCurve {
    std::vector<CurvePoint> points;
    /// Parameters at every strict improvement of best_cost.
    std::vector<Snapshot> improvements;
    std::uint64_t seed = 0;

    double best_cost() const;
    /// Parameters of the last improvement.
    const std::vector<double> &best_params() const;
};

/// Budgeted, recording view of a CostFunction.
class CostContext {
  public:
    CostContext(CostFunction &cost, std::uint64_t budget, std::uint64_t seed = 0);

    /// Evaluates, records the point and advances the counter by one.
    /// Throws BudgetExhausted if the budget is already spent.
    double evaluate(std::span<const double> params);

    std::size_t dimension() const { return cost_.dimension(); }
    std::uint64_t budget() const { return budget_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t remaining() const { return budget_ - used_; }
    const LearningCurve &curve() const { return curve_; }
    LearningCurve take_curve() { return std::move(curve_); }

  private:
    CostFunction &cost_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    LearningCurve curve_;
};

/// Free-function spelling of CostContext::evaluate.
inline double evaluate_cost(std::span<const double> params, CostContext &ctx) { return ctx.evaluate(params); }

} // namespace ddqcl
