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

#include "ddqcl/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ddqcl/bit_string.hpp"

namespace ddqcl {

std::size_t state_space_size(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
    return std::size_t{1} << n_qubits;
}

Distribution::Distribution(std::size_t n_qubits, std::vector<double> probs)
    : n_qubits_(n_qubits), probs_(std::move(probs)) {
    const std::size_t dim = state_space_size(n_qubits);
    if (probs_.size() != dim) {
        throw std::invalid_argument("distribution over " + std::to_string(n_qubits) + " qubits needs " +
                                    std::to_string(dim) + " entries, got " + std::to_string(probs_.size()));
    }
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("distribution entries must be finite and non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kDistributionTolerance) {
        throw std::invalid_argument("distribution sums to " + std::to_string(total) + ", expected 1");
    }
}

Distribution Distribution::uniform(std::size_t n_qubits) {
    const std::size_t dim = state_space_size(n_qubits);
    return Distribution(n_qubits, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

Distribution Distribution::delta(std::size_t n_qubits, std::size_t index) {
    const std::size_t dim = state_space_size(n_qubits);
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<double> probs(dim, 0.0);
    probs[index] = 1.0;
    return Distribution(n_qubits, std::move(probs));
}

Histogram::Histogram(std::size_t n_qubits) : n_qubits_(n_qubits), counts_(state_space_size(n_qubits), 0) {}

Histogram::Histogram(std::size_t n_qubits, std::vector<std::uint64_t> counts)
    : n_qubits_(n_qubits), counts_(std::move(counts)) {
    if (counts_.size() != state_space_size(n_qubits)) {
        throw std::invalid_argument("histogram length does not match qubit count");
    }
    shots_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

void Histogram::add(std::size_t index, std::uint64_t count) {
    if (index >= counts_.size()) {
        throw std::out_of_range("histogram index " + std::to_string(index) + " out of range");
    }
    counts_[index] += count;
    shots_ += count;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        sum += std::abs(p[i] - q[i]);
    }
    return 0.5 * sum;
}

} // namespace ddqcl
