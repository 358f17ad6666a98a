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
 * Readout assignment errors: a synthetic per-qubit flip channel, calibration
 * of the full 2^N x 2^N confusion matrix by preparing every basis state, and
 * correction by solving M * P_true = P_observed.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ddqcl/distribution.hpp"
#include "ddqcl/sampling.hpp"

namespace ddqcl {

/// Column-stochastic matrix, entry(y, x) = p(read y | prepared x).
class ConfusionMatrix {
  public:
    /// Row-major entries. Validates shape, non-negativity and that every
    /// column sums to 1 within 1e-9.
    ConfusionMatrix(std::size_t n_qubits, std::vector<double> entries);

    static ConfusionMatrix identity(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }
    double operator()(std::size_t observed, std::size_t prepared) const { return entries_[observed * dim_ + prepared]; }
    std::span<const double> entries() const { return entries_; }

    double max_abs_difference(const ConfusionMatrix &other) const;

    friend bool operator==(const ConfusionMatrix &, const ConfusionMatrix &) = default;

  private:
    std::size_t n_qubits_;
    std::size_t dim_;
    std::vector<double> entries_;
};

/// Independent bit-flip readout error per qubit.
struct PerQubitFlipModel {
    /// p(read 1 | true 0), per qubit.
    std::vector<double> p10;
    /// p(read 0 | true 1), per qubit.
    std::vector<double> p01;

    static PerQubitFlipModel uniform(std::size_t n_qubits, double p10, double p01);
    static PerQubitFlipModel noiseless(std::size_t n_qubits) { return uniform(n_qubits, 0.0, 0.0); }

    std::size_t n_qubits() const { return p10.size(); }
    bool is_noiseless() const;
    /// Throws std::invalid_argument unless both vectors have the same
    /// non-zero length and every probability is in [0, 0.5).
    void validate() const;
};

/// Raised when the confusion matrix is too close to singular.
class IllConditionedError : public std::runtime_error {
  public:
    IllConditionedError(double condition_estimate, double bound);
    double condition_estimate() const { return condition_estimate_; }

  private:
    double condition_estimate_;
};

inline constexpr double kDefaultMaxCondition = 1e8;

/// Tensor product of the per-qubit 2x2 confusion blocks.
ConfusionMatrix synth_confusion(const PerQubitFlipModel &model);

/// M * p.
Distribution apply_channel_exact(const Distribution &p, const ConfusionMatrix &m);

/// Flips every shot's bits independently according to `model`.
Histogram apply_channel_sampled(const Histogram &h, const PerQubitFlipModel &model, Rng &rng);

struct Calibration {
    ConfusionMatrix matrix;
    std::size_t experiments = 0;
    std::uint64_t shots_per_experiment = 0;
};

/**
 * Estimates the confusion matrix of `channel` by preparing every basis state
 * x, reading it `shots_per_basis_state` times through the sampled channel and
 * storing the empirical frequencies as column x. Column x draws from its own
 * stream keyed by (seed, x).
 */
Calibration calibrate(const PerQubitFlipModel &channel, std::uint64_t shots_per_basis_state, std::uint64_t seed);

/// Solution of M * x = observed without any post-processing. Entries may be
/// negative. Throws IllConditionedError when cond(M) exceeds `max_condition`.
std::vector<double> correct_raw(const Distribution &observed, const ConfusionMatrix &m,
                                double max_condition = kDefaultMaxCondition);

/// correct_raw() followed by clamping negatives to 0 and renormalizing.
Distribution correct(const Distribution &observed, const ConfusionMatrix &m,
                     double max_condition = kDefaultMaxCondition);

void to_json(nlohmann::json &j, const ConfusionMatrix &m);
ConfusionMatrix confusion_from_json(const nlohmann::json &j);

void to_json(nlohmann::json &j, const PerQubitFlipModel &model);

} // namespace ddqcl
