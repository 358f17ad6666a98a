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

// ddqcl: train circuit Born machines on bars-and-stripes in batches.
//
//   ddqcl run       --config exp.json [--out dir] [--seed N]
//   ddqcl validate  --config exp.json
//   ddqcl calibrate --config exp.json [--out dir] [--seed N]
//   ddqcl patterns  --rows 2 --cols 2

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ddqcl/bas.hpp"
#include "ddqcl/experiment_config.hpp"
#include "ddqcl/harness.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
};

ddqcl::ExperimentConfig load(const CommonArgs &args) {
    ddqcl::ExperimentConfig cfg = ddqcl::load_config(args.config_path);
    if (!args.out_dir.empty()) {
        cfg.output_dir = args.out_dir;
    }
    if (args.seed) {
        cfg.seed = *args.seed;
    }
    cfg.validate();
    return cfg;
}

int cmd_run(const CommonArgs &args) {
    const ddqcl::ExperimentConfig cfg = load(args);
    const ddqcl::BatchResult result = ddqcl::run_batch(cfg);
    const auto files = ddqcl::export_result(result, cfg.output_dir);
    for (const auto &r : result.runs) {
        std::cout << "run " << r.run << " seed " << r.seed << ": best_cost " << r.best_cost << "  kl "
                  << r.final.kl << "  qbas_f1 " << r.final.qbas.f1 << "\n";
    }
    std::cout << "wrote " << files.size() << " files to " << cfg.output_dir.string() << "\n";
    return 0;
}

int cmd_validate(const CommonArgs &args) {
    const ddqcl::ExperimentConfig cfg = load(args);
    const ddqcl::Ansatz ansatz = cfg.make_ansatz();
    std::cout << "config OK: " << cfg.n_qubits() << " qubits, " << ansatz.param_count() << " parameters, "
              << cfg.runs << " runs x " << cfg.optimizer.budget << " evaluations ("
              << ddqcl::to_string(cfg.optimizer.kind) << ")\n";
    return 0;
}

int cmd_calibrate(const CommonArgs &args) {
    const ddqcl::ExperimentConfig cfg = load(args);
    const ddqcl::Calibration cal = ddqcl::calibrate_batch(cfg);
    nlohmann::json doc = cal.matrix;
    doc["shots_per_basis_state"] = cal.shots_per_experiment;
    if (args.out_dir.empty()) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::filesystem::create_directories(cfg.output_dir);
    const auto path = cfg.output_dir / "confusion.json";
    std::ofstream out(path, std::ios::binary);
    out << doc.dump(2) << "\n";
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Data-driven quantum circuit learning on bars-and-stripes"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CommonArgs validate_args;
    CommonArgs calibrate_args;
    auto add_common = [](CLI::App *sub, CommonArgs &args, bool with_output) {
        sub->add_option("--config", args.config_path, "Experiment config (JSON)")->required();
        if (with_output) {
            sub->add_option("--out", args.out_dir, "Output directory (overrides output_dir)");
            sub->add_option("--seed", args.seed, "Base seed (overrides seed)");
        }
    };

    auto *run = app.add_subcommand("run", "Run a batch of training runs and export results");
    add_common(run, run_args, true);
    auto *validate = app.add_subcommand("validate", "Check a config without running it");
    add_common(validate, validate_args, false);
    auto *calibrate = app.add_subcommand("calibrate", "Calibrate the readout channel and emit the confusion matrix");
    add_common(calibrate, calibrate_args, true);

    std::size_t rows = 2;
    std::size_t cols = 2;
    auto *patterns = app.add_subcommand("patterns", "Print the bars-and-stripes patterns, one per line");
    patterns->add_option("--rows", rows, "Image rows")->check(CLI::PositiveNumber);
    patterns->add_option("--cols", cols, "Image columns")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(run_args);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_args);
        }
        if (calibrate->parsed()) {
            return cmd_calibrate(calibrate_args);
        }
        if (patterns->parsed()) {
            std::cout << ddqcl::format_patterns(ddqcl::bas_patterns(ddqcl::BasSpec{rows, cols}));
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "ddqcl: error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
