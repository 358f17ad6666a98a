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
 * Divergences between distributions over basis states, and the qBAS score.
 * All logarithms are natural.
 */

#pragma once

#include <vector>

#include "ddqcl/bit_string.hpp"
#include "ddqcl/distribution.hpp"

namespace ddqcl {

inline constexpr double kDefaultKlEpsilon = 1e-8;

/**
 * Kullback-Leibler divergence KL(x || m).
 *
 * Terms with x(s) == 0 contribute 0. m(s) is clamped below at `epsilon`
 * before the logarithm so that models with empty bins stay finite.
 *
 * @throws std::invalid_argument on width mismatch or epsilon <= 0.
 */
double kl_divergence(const Distribution &x, const Distribution &m, double epsilon = kDefaultKlEpsilon);

/**
 * Jensen-Shannon divergence: mean KL of p and q to their midpoint.
 * Symmetric bit-for-bit, and in [0, ln 2].
 */
double js_divergence(const Distribution &p, const Distribution &q);

/// counts / shots. Throws std::invalid_argument for an empty histogram.
Distribution histogram_to_distribution(const Histogram &h);

struct QbasScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Harmonic mean of precision and recall, 0 when both are 0.
double f1_score(double precision, double recall);

/**
 * precision = fraction of shots that land on a pattern;
 * recall = fraction of patterns observed at least once.
 */
QbasScore qbas_score(const Histogram &h, const std::vector<BitString> &patterns);

} // namespace ddqcl
