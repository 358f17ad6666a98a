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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ddqcl/ansatz.hpp"
#include "ddqcl/bas.hpp"
#include "ddqcl/metrics.hpp"
#include "ddqcl/optimizer.hpp"
#include "ddqcl/readout.hpp"

namespace ddqcl {

struct ReadoutConfig {
    /// Push every shot through `model`.
    bool enabled = false;
    PerQubitFlipModel model;
    /// Calibrate once per batch and invert the channel before scoring.
    bool correction = true;
    std::uint64_t calibration_shots = 10000;
    double max_condition = kDefaultMaxCondition;
};

/// One batch of independent training runs.
///
/// JSON form (every key optional, unknown keys rejected):
///
///     {
///       "bas": {"rows": 2, "cols": 2},
///       "topology": "line" | "star" | {"edges": [[0, 1], ...]},
///       "layers": 2,
///       "optimizer": {"kind": "zoo", "n_ini_multiplier": 3,
///                     "adam": {...}, "svhc": {...}, "zoo": {...}},
///       "runs": 5, "shots": 3000, "budget": 2000,
///       "readout": {"enabled": true, "p10": 0.05, "p01": [..per qubit..],
///                   "correction": true, "calibration_shots": 10000,
///                   "max_condition": 1e8},
///       "exact_mode": false, "seed": 0, "output_dir": "ddqcl_out",
///       "kl_epsilon": 1e-8, "qbas_shots": 3000, "threads": 1
///     }
struct ExperimentConfig {
    BasSpec bas;
    /// "line", "star" or "custom" (uses custom_edges).
    std::string topology = "line";
    std::vector<Edge> custom_edges;
    std::size_t layers = 2;
    OptimizerConfig optimizer;
    std::size_t runs = 5;
    ReadoutConfig readout;
    bool exact_mode = false;
    std::uint64_t seed = 0;
    std::filesystem::path output_dir = "ddqcl_out";
    double kl_epsilon = kDefaultKlEpsilon;
    /// Shots of the final readout used for reporting; 0 means optimizer.shots.
    std::uint64_t qbas_shots = 0;
    /// Worker threads for the runs of a batch; 0 uses hardware concurrency.
    std::size_t threads = 1;

    std::size_t n_qubits() const { return bas.n_qubits(); }
    std::uint64_t report_shots() const { return qbas_shots > 0 ? qbas_shots : optimizer.shots; }
    bool calibrates() const { return readout.enabled && readout.correction && !exact_mode; }

    Topology make_topology() const;
    Ansatz make_ansatz() const;

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json &j);
void to_json(nlohmann::json &j, const ExperimentConfig &cfg);

/// Reads and parses a JSON config file; errors carry the path.
ExperimentConfig load_config(const std::filesystem::path &path);

} // namespace ddqcl
