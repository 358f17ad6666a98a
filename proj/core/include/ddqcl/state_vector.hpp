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
 * Dense statevector with the two gates the circuit family needs: Ry and CZ.
 *
 * Amplitudes are indexed so that qubit 0 is the most significant bit of the
 * basis index (see qubit_mask()).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ddqcl/distribution.hpp"

namespace ddqcl {

using Amplitude = std::complex<double>;

class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits);

    /// Adopts explicit amplitudes. Length must be a power of two no larger
    /// than 2^kMaxQubits and the norm must be 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    /// Computational basis state |index>.
    static StateVector basis(std::size_t n_qubits, std::size_t index);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    const Amplitude &operator[](std::size_t index) const { return amplitudes_[index]; }

    /// exp(-i theta Y / 2) on `qubit`.
    StateVector &apply_ry(std::size_t qubit, double theta);

    /// Negates every amplitude whose basis index has both qubits set.
    StateVector &apply_cz(std::size_t qubit_a, std::size_t qubit_b);

    double norm_squared() const;

  private:
    StateVector() = default;

    std::size_t n_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

StateVector apply_ry(StateVector state, std::size_t qubit, double theta);
StateVector apply_cz(StateVector state, std::size_t qubit_a, std::size_t qubit_b);

/// Born-rule probabilities |alpha_x|^2.
Distribution probabilities(const StateVector &state);

} // namespace ddqcl
