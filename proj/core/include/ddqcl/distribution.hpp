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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ddqcl {

/// Sum tolerance accepted by the Distribution constructor.
inline constexpr double kDistributionTolerance = 1e-9;

/// Probability mass over the 2^n_qubits basis indices.
class Distribution {
  public:
    /// Validates length (2^n_qubits), non-negativity and unit sum.
    Distribution(std::size_t n_qubits, std::vector<double> probs);

    static Distribution uniform(std::size_t n_qubits);
    static Distribution delta(std::size_t n_qubits, std::size_t index);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return probs_.size(); }
    std::span<const double> probs() const { return probs_; }
    double operator[](std::size_t index) const { return probs_[index]; }

    friend bool operator==(const Distribution &, const Distribution &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<double> probs_;
};

/// Shot counts over the 2^n_qubits basis indices.
class Histogram {
  public:
    explicit Histogram(std::size_t n_qubits);
    Histogram(std::size_t n_qubits, std::vector<std::uint64_t> counts);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return counts_.size(); }
    std::uint64_t shots() const { return shots_; }
    std::span<const std::uint64_t> counts() const { return counts_; }
    std::uint64_t operator[](std::size_t index) const { return counts_[index]; }

    void add(std::size_t index, std::uint64_t count = 1);

    friend bool operator==(const Histogram &, const Histogram &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t shots_ = 0;
};

/// 2^n_qubits, after checking n_qubits against kMaxQubits.
std::size_t state_space_size(std::size_t n_qubits);

/// Half the L1 distance.
double total_variation(std::span<const double> p, std::span<const double> q);

} // namespace ddqcl
