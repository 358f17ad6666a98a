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

#include "ddqcl/experiment_config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ddqcl {

namespace {

using nlohmann::json;

void reject_unknown(const json &j, const std::set<std::string> &allowed, const std::string &where) {
    if (!j.is_object()) {
        throw std::invalid_argument(where + " must be a JSON object");
    }
    for (const auto &[key, _] : j.items()) {
        if (!allowed.contains(key)) {
            throw std::invalid_argument(where + ": unknown key '" + key + "'");
        }
    }
}

template <class T>
void read_optional(const json &j, const char *key, T &out) {
    if (auto it = j.find(key); it != j.end()) {
        try {
            out = it->get<T>();
        } catch (const json::exception &e) {
            throw std::invalid_argument(std::string("config key '") + key + "': " + e.what());
        }
    }
}

// A scalar applies to every qubit; an array gives one value per qubit.
std::vector<double> per_qubit(const json &value, std::size_t n_qubits, const char *key) {
    if (value.is_number()) {
        return std::vector<double>(n_qubits, value.get<double>());
    }
    if (value.is_array()) {
        auto v = value.get<std::vector<double>>();
        if (v.size() != n_qubits) {
            throw std::invalid_argument(std::string("readout.") + key + " needs " + std::to_string(n_qubits) +
                                        " entries, got " + std::to_string(v.size()));
        }
        return v;
    }
    throw std::invalid_argument(std::string("readout.") + key + " must be a number or an array");
}

} // namespace

Topology ExperimentConfig::make_topology() const {
    if (topology == "custom") {
        return Topology(n_qubits(), custom_edges);
    }
    return Topology::preset(topology, n_qubits());
}

Ansatz ExperimentConfig::make_ansatz() const { return Ansatz::build(n_qubits(), make_topology(), layers); }

void ExperimentConfig::validate() const {
    bas.validate();
    if (runs == 0) {
        throw std::invalid_argument("runs must be >= 1");
    }
    const Ansatz ansatz = make_ansatz();
    optimizer.validate(ansatz.param_count());
    if (!exact_mode && optimizer.shots == 0) {
        throw std::invalid_argument("shots must be >= 1 outside exact mode");
    }
    if (!(kl_epsilon > 0.0)) {
        throw std::invalid_argument("kl_epsilon must be positive");
    }
    if (readout.enabled) {
        readout.model.validate();
        if (readout.model.n_qubits() != n_qubits()) {
            throw std::invalid_argument("readout model covers " + std::to_string(readout.model.n_qubits()) +
                                        " qubits, experiment uses " + std::to_string(n_qubits()));
        }
        if (readout.correction && readout.calibration_shots == 0) {
            throw std::invalid_argument("readout.calibration_shots must be >= 1");
        }
        if (!(readout.max_condition > 1.0)) {
            throw std::invalid_argument("readout.max_condition must exceed 1");
        }
    }
}

ExperimentConfig config_from_json(const json &j) {
    reject_unknown(j,
                   {"bas", "topology", "layers", "optimizer", "runs", "shots", "budget", "readout", "exact_mode", "seed",
                    "output_dir", "kl_epsilon", "qbas_shots", "threads"},
                   "config");
    ExperimentConfig cfg;
    if (auto it = j.find("bas"); it != j.end()) {
        reject_unknown(*it, {"rows", "cols"}, "bas");
        read_optional(*it, "rows", cfg.bas.rows);
        read_optional(*it, "cols", cfg.bas.cols);
    }
    if (auto it = j.find("topology"); it != j.end()) {
        if (it->is_string()) {
            cfg.topology = it->get<std::string>();
            if (cfg.topology != "line" && cfg.topology != "star") {
                throw std::invalid_argument("topology must be \"line\", \"star\" or {\"edges\": [...]}");
            }
        } else {
            reject_unknown(*it, {"edges"}, "topology");
            cfg.topology = "custom";
            for (const auto &e : it->at("edges")) {
                if (!e.is_array() || e.size() != 2) {
                    throw std::invalid_argument("topology edges must be [a, b] pairs");
                }
                cfg.custom_edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
            }
        }
    }
    read_optional(j, "layers", cfg.layers);
    if (auto it = j.find("optimizer"); it != j.end()) {
        optimizer_from_json(*it, cfg.optimizer);
    }
    read_optional(j, "runs", cfg.runs);
    read_optional(j, "shots", cfg.optimizer.shots);
    read_optional(j, "budget", cfg.optimizer.budget);
    read_optional(j, "exact_mode", cfg.exact_mode);
    read_optional(j, "seed", cfg.seed);
    if (auto it = j.find("output_dir"); it != j.end()) {
        cfg.output_dir = it->get<std::string>();
    }
    read_optional(j, "kl_epsilon", cfg.kl_epsilon);
    read_optional(j, "qbas_shots", cfg.qbas_shots);
    read_optional(j, "threads", cfg.threads);

    const std::size_t n = cfg.n_qubits();
    cfg.readout.model = PerQubitFlipModel::noiseless(n == 0 ? 1 : n);
    if (auto it = j.find("readout"); it != j.end()) {
        reject_unknown(*it, {"enabled", "p10", "p01", "correction", "calibration_shots", "max_condition"}, "readout");
        read_optional(*it, "enabled", cfg.readout.enabled);
        read_optional(*it, "correction", cfg.readout.correction);
        read_optional(*it, "calibration_shots", cfg.readout.calibration_shots);
        read_optional(*it, "max_condition", cfg.readout.max_condition);
        if (auto p = it->find("p10"); p != it->end()) {
            cfg.readout.model.p10 = per_qubit(*p, n, "p10");
        }
        if (auto p = it->find("p01"); p != it->end()) {
            cfg.readout.model.p01 = per_qubit(*p, n, "p01");
        }
        cfg.readout.model.validate();
    }
    cfg.validate();
    return cfg;
}

void to_json(json &j, const ExperimentConfig &cfg) {
    json topology;
    if (cfg.topology == "custom") {
        json edges = json::array();
        for (const auto &[a, b] : cfg.custom_edges) {
            edges.push_back({a, b});
        }
        topology = {{"edges", edges}};
    } else {
        topology = cfg.topology;
    }
    // A default-constructed readout model is empty; write it out as noiseless
    // so the document reloads.
    const PerQubitFlipModel model =
        cfg.readout.model.n_qubits() == 0 ? PerQubitFlipModel::noiseless(cfg.n_qubits()) : cfg.readout.model;
    j = {{"bas", {{"rows", cfg.bas.rows}, {"cols", cfg.bas.cols}}},
         {"topology", topology},
         {"layers", cfg.layers},
         {"optimizer", cfg.optimizer},
         {"runs", cfg.runs},
         {"shots", cfg.optimizer.shots},
         {"budget", cfg.optimizer.budget},
         {"readout",
          {{"enabled", cfg.readout.enabled},
           {"p10", model.p10},
           {"p01", model.p01},
           {"correction", cfg.readout.correction},
           {"calibration_shots", cfg.readout.calibration_shots},
           {"max_condition", cfg.readout.max_condition}}},
         {"exact_mode", cfg.exact_mode},
         {"seed", cfg.seed},
         {"output_dir", cfg.output_dir.generic_string()},
         {"kl_epsilon", cfg.kl_epsilon},
         {"qbas_shots", cfg.report_shots()},
         {"threads", cfg.threads}};
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::runtime_error("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const std::exception &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

} // namespace ddqcl
