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

#include "ddqcl/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ddqcl {

Topology::Topology(std::size_t n_qubits, std::vector<Edge> edges) : n_qubits_(n_qubits), edges_(std::move(edges)) {
    state_space_size(n_qubits);
    std::set<Edge> seen;
    for (const auto &[a, b] : edges_) {
        if (a >= n_qubits || b >= n_qubits) {
            throw std::invalid_argument("topology edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") references a qubit outside [0, " + std::to_string(n_qubits) + ")");
        }
        if (a == b) {
            throw std::invalid_argument("topology edge on a single qubit " + std::to_string(a));
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
            throw std::invalid_argument("duplicate topology edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ")");
        }
    }
}

Topology Topology::line(std::size_t n_qubits) {
    std::vector<Edge> edges;
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
        edges.emplace_back(q, q + 1);
    }
    return Topology(n_qubits, std::move(edges));
}

Topology Topology::star(std::size_t n_qubits) {
    std::vector<Edge> edges;
    for (std::size_t q = 1; q < n_qubits; ++q) {
        edges.emplace_back(0, q);
    }
    return Topology(n_qubits, std::move(edges));
}

Topology Topology::preset(const std::string &name, std::size_t n_qubits) {
    if (name == "line") {
        return line(n_qubits);
    }
    if (name == "star") {
        return star(n_qubits);
    }
    throw std::invalid_argument("unknown topology preset '" + name + "' (expected \"line\" or \"star\")");
}

Ansatz::Ansatz(Topology topology, std::size_t layers)
    : n_qubits_(topology.n_qubits()), topology_(std::move(topology)), layers_(layers) {}

Ansatz Ansatz::build(std::size_t n_qubits, const Topology &topology, std::size_t layers) {
    if (topology.n_qubits() != n_qubits) {
        throw std::invalid_argument("topology is defined on " + std::to_string(topology.n_qubits()) +
                                    " qubits, ansatz on " + std::to_string(n_qubits));
    }
    if (layers > 0 && topology.edges().empty()) {
        throw std::invalid_argument("an entangling layer needs at least one topology edge");
    }

    Ansatz ansatz(topology, layers);
    std::size_t slot = 0;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        ansatz.gates_.push_back(RyGate{q, slot++});
    }
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (const auto &[a, b] : topology.edges()) {
            ansatz.gates_.push_back(CzGate{a, b});
            ansatz.gates_.push_back(RyGate{a, slot++});
            ansatz.gates_.push_back(RyGate{b, slot++});
        }
    }
    ansatz.param_count_ = slot;
    return ansatz;
}

std::size_t Ansatz::ry_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return std::holds_alternative<RyGate>(g); }));
}

std::size_t Ansatz::cz_count() const { return gates_.size() - ry_count(); }

StateVector Ansatz::execute(std::span<const double> params) const {
    if (params.size() != param_count_) {
        throw std::invalid_argument("ansatz expects " + std::to_string(param_count_) + " parameters, got " +
                                    std::to_string(params.size()));
    }
    StateVector state(n_qubits_);
    for (const Gate &gate : gates_) {
        if (const auto *ry = std::get_if<RyGate>(&gate)) {
            state.apply_ry(ry->qubit, wrap_angle(params[ry->slot]));
        } else {
            const auto &cz = std::get<CzGate>(gate);
            state.apply_cz(cz.qubit_a, cz.qubit_b);
        }
    }
    return state;
}

StateVector u2_block(double theta, double gamma, double beta) {
    StateVector state(2);
    state.apply_ry(0, theta).apply_cz(0, 1).apply_ry(0, gamma).apply_ry(1, beta);
    return state;
}

double wrap_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("angle must be finite");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (theta >= 0.0 && theta < two_pi) {
        return theta;
    }
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    return r >= two_pi ? 0.0 : r;
}

void to_json(nlohmann::json &j, const Topology &topology) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[a, b] : topology.edges()) {
        edges.push_back({a, b});
    }
    j = {{"n_qubits", topology.n_qubits()}, {"edges", std::move(edges)}};
}

void to_json(nlohmann::json &j, const Ansatz &ansatz) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate &gate : ansatz.gates()) {
        if (const auto *ry = std::get_if<RyGate>(&gate)) {
            gates.push_back({{"op", "ry"}, {"qubit", ry->qubit}, {"param", ry->slot}});
        } else {
            const auto &cz = std::get<CzGate>(gate);
            gates.push_back({{"op", "cz"}, {"qubits", {cz.qubit_a, cz.qubit_b}}});
        }
    }
    j = {{"n_qubits", ansatz.n_qubits()},
         {"topology", ansatz.topology()},
         {"layers", ansatz.layers()},
         {"param_count", ansatz.param_count()},
         {"gates", std::move(gates)}};
}

} // namespace ddqcl
