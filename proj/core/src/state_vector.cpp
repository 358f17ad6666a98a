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

#include "ddqcl/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ddqcl/bit_string.hpp"

namespace ddqcl {

namespace {

void check_qubit(std::size_t qubit, std::size_t n_qubits) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amplitudes_(state_space_size(n_qubits), Amplitude{0.0, 0.0}) {
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2, got " + std::to_string(dim));
    }
    StateVector state;
    state.n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
    state_space_size(state.n_qubits_);
    state.amplitudes_ = std::move(amplitudes);
    if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return state;
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    StateVector state(n_qubits);
    if (index >= state.size()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
    }
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

StateVector &StateVector::apply_ry(std::size_t qubit, double theta) {
    check_qubit(qubit, n_qubits_);
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::uint64_t mask = qubit_mask(n_qubits_, qubit);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) != 0) {
            continue;
        }
        const Amplitude a0 = amplitudes_[i];
        const Amplitude a1 = amplitudes_[i | mask];
        amplitudes_[i] = c * a0 - s * a1;
        amplitudes_[i | mask] = s * a0 + c * a1;
    }
    return *this;
}

StateVector &StateVector::apply_cz(std::size_t qubit_a, std::size_t qubit_b) {
    check_qubit(qubit_a, n_qubits_);
    check_qubit(qubit_b, n_qubits_);
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("CZ needs two distinct qubits, got " + std::to_string(qubit_a) + " twice");
    }
    const std::uint64_t both = qubit_mask(n_qubits_, qubit_a) | qubit_mask(n_qubits_, qubit_b);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & both) == both) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
    return *this;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector apply_ry(StateVector state, std::size_t qubit, double theta) {
    state.apply_ry(qubit, theta);
    return state;
}

StateVector apply_cz(StateVector state, std::size_t qubit_a, std::size_t qubit_b) {
    state.apply_cz(qubit_a, qubit_b);
    return state;
}

Distribution probabilities(const StateVector &state) {
    std::vector<double> probs(state.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(state[i]);
        total += probs[i];
    }
    // Absorb accumulated rounding so the result sums to 1 to machine precision.
    for (double &p : probs) {
        p /= total;
    }
    return Distribution(state.n_qubits(), std::move(probs));
}

} // namespace ddqcl
