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
 * Real-amplitude circuit layout built from Ry rotations and CZ entanglers.
 *
 * The program is: one Ry on every qubit, then for each layer and each edge
 * (a, b) of the topology in listed order: CZ(a, b), Ry(a), Ry(b). Every Ry
 * owns its own parameter slot, numbered in program order, so a circuit on
 * n qubits with E edges and `layers` layers has n + 2 * E * layers
 * parameters. For 4 qubits and 3 edges that is 10 (one layer) or 16 (two).
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ddqcl/state_vector.hpp"

namespace ddqcl {

using Edge = std::pair<std::size_t, std::size_t>;

/// Entangling connectivity graph.
class Topology {
  public:
    /// Throws std::invalid_argument on out-of-range, self-loop or duplicate
    /// edges (either orientation).
    Topology(std::size_t n_qubits, std::vector<Edge> edges);

    /// Chain 0-1-2-...-(n-1).
    static Topology line(std::size_t n_qubits);
    /// Qubit 0 is the hub connected to every other qubit.
    static Topology star(std::size_t n_qubits);
    /// "line" or "star".
    static Topology preset(const std::string &name, std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Edge> &edges() const { return edges_; }

    friend bool operator==(const Topology &, const Topology &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<Edge> edges_;
};

struct RyGate {
    std::size_t qubit;
    std::size_t slot;
    friend bool operator==(const RyGate &, const RyGate &) = default;
};

struct CzGate {
    std::size_t qubit_a;
    std::size_t qubit_b;
    friend bool operator==(const CzGate &, const CzGate &) = default;
};

using Gate = std::variant<RyGate, CzGate>;

/// Immutable gate program with parameter slots.
class Ansatz {
  public:
    /// layers == 0 yields the initial rotation column only. Throws
    /// std::invalid_argument for layers > 0 on an empty edge list or a
    /// topology on a different qubit count.
    static Ansatz build(std::size_t n_qubits, const Topology &topology, std::size_t layers);

    std::size_t n_qubits() const { return n_qubits_; }
    const Topology &topology() const { return topology_; }
    std::size_t layers() const { return layers_; }
    std::size_t param_count() const { return param_count_; }
    const std::vector<Gate> &gates() const { return gates_; }

    std::size_t ry_count() const;
    std::size_t cz_count() const;

    /// Runs the program on |0...0>. Angles are reduced modulo 2*pi first.
    /// Throws std::invalid_argument if params.size() != param_count().
    StateVector execute(std::span<const double> params) const;

  private:
    Ansatz(Topology topology, std::size_t layers);

    std::size_t n_qubits_;
    Topology topology_;
    std::size_t layers_;
    std::size_t param_count_ = 0;
    std::vector<Gate> gates_;
};

/// Two-qubit block R_1(beta) R_0(gamma) CZ_01 R_0(theta) |00>.
StateVector u2_block(double theta, double gamma, double beta);

/// Maps an angle into [0, 2*pi).
double wrap_angle(double theta);

void to_json(nlohmann::json &j, const Topology &topology);
void to_json(nlohmann::json &j, const Ansatz &ansatz);

} // namespace ddqcl
