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

#include "ddqcl/cost.hpp"

#include <limits>

#include "ddqcl/metrics.hpp"

namespace ddqcl {

namespace {
constexpr std::uint64_t kEvaluationStreamTag = 0x6576616cULL; // "eval"
}

CircuitCost::CircuitCost(Ansatz ansatz, Distribution target, Options options)
    : ansatz_(std::move(ansatz)), target_(std::move(target)), options_(std::move(options)) {
    if (target_.n_qubits() != ansatz_.n_qubits()) {
        throw std::invalid_argument("target distribution width does not match the ansatz");
    }
    if (!options_.exact_mode && options_.shots == 0) {
        throw std::invalid_argument("shot-based cost needs shots >= 1");
    }
    if (options_.readout) {
        options_.readout->channel.validate();
        if (options_.readout->channel.n_qubits() != ansatz_.n_qubits()) {
            throw std::invalid_argument("readout channel width does not match the ansatz");
        }
        if (options_.readout->correction && options_.readout->correction->n_qubits() != ansatz_.n_qubits()) {
            throw std::invalid_argument("confusion matrix width does not match the ansatz");
        }
    }
}

Distribution CircuitCost::exact_distribution(std::span<const double> params) const {
    return probabilities(ansatz_.execute(params));
}

Readout CircuitCost::measure(std::span<const double> params, std::uint64_t shots, Rng &rng) const {
    const Distribution born = exact_distribution(params);
    Histogram counts = sample(born, shots, rng);
    if (options_.readout) {
        counts = apply_channel_sampled(counts, options_.readout->channel, rng);
    }
    Distribution observed = histogram_to_distribution(counts);
    if (options_.readout && options_.readout->correction) {
        observed = correct(observed, *options_.readout->correction, options_.readout->max_condition);
    }
    return Readout{std::move(counts), std::move(observed)};
}

double CircuitCost::cost(std::span<const double> params, std::uint64_t evaluation_index) {
    if (options_.exact_mode) {
        return js_divergence(exact_distribution(params), target_);
    }
    Rng rng = make_stream(options_.seed, {kEvaluationStreamTag, evaluation_index});
    const Readout readout = measure(params, options_.shots, rng);
    shots_used_ += options_.shots;
    return js_divergence(readout.model, target_);
}

double LearningCurve::best_cost() const {
    return points.empty() ? std::numeric_limits<double>::infinity() : points.back().best_cost;
}

const std::vector<double> &LearningCurve::best_params() const {
    if (improvements.empty()) {
        throw std::logic_error("learning curve has no evaluations");
    }
    return improvements.back().params;
}

CostContext::CostContext(CostFunction &cost, std::uint64_t budget, std::uint64_t seed)
    : cost_(cost), budget_(budget) {
    curve_.seed = seed;
    curve_.points.reserve(budget);
}

double CostContext::evaluate(std::span<const double> params) {
    if (used_ >= budget_) {
        throw BudgetExhausted();
    }
    if (params.size() != cost_.dimension()) {
        throw std::invalid_argument("cost expects " + std::to_string(cost_.dimension()) + " parameters, got " +
                                    std::to_string(params.size()));
    }
    const std::uint64_t index = used_;
    const double value = cost_.cost(params, index);
    ++used_;
    const double best = curve_.best_cost();
    if (value < best) {
        curve_.improvements.push_back(Snapshot{index, value, std::vector<double>(params.begin(), params.end())});
    }
    curve_.points.push_back(CurvePoint{index, value, std::min(value, best)});
    return value;
}

} // namespace ddqcl
