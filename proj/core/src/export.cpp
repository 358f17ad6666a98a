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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "ddqcl/harness.hpp"

namespace ddqcl {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

json qbas_json(const QbasScore &s) { return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}}; }

json stats_json(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const double median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    return {{"min", values.front()}, {"median", median}, {"max", values.back()}};
}

} // namespace

json summary_json(const BatchResult &result) {
    json runs = json::array();
    std::vector<double> best_costs;
    std::vector<double> kls;
    std::vector<double> f1s;
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const RunResult &r = result.runs[i];
        json improvements = json::array();
        for (const Snapshot &s : result.curves[i].improvements) {
            improvements.push_back({{"evaluation", s.evaluation}, {"cost", s.cost}, {"params", s.params}});
        }
        runs.push_back({{"run", r.run},
                        {"seed", r.seed},
                        {"evaluations", r.evaluations},
                        {"best_cost", r.best_cost},
                        {"best_params", r.best_params},
                        {"final",
                         {{"js", r.final.js},
                          {"kl", r.final.kl},
                          {"exact_kl", r.final.exact_kl},
                          {"qbas", qbas_json(r.final.qbas)},
                          {"shots", r.final.shots}}},
                        {"training_shots", r.training_shots},
                        {"improvements", std::move(improvements)}});
        best_costs.push_back(r.best_cost);
        kls.push_back(r.final.kl);
        f1s.push_back(r.final.qbas.f1);
    }

    const ProtocolCounters &c = result.counters;
    json protocol = {{"runs", c.runs},
                     {"budget", c.budget},
                     {"evaluations_total", c.evaluations_total},
                     {"shots_per_evaluation", c.shots_per_evaluation},
                     {"training_shots_total", c.training_shots_total},
                     {"report_shots_total", c.report_shots_total},
                     {"calibrations", c.calibrations},
                     {"calibration_experiments", c.calibration_experiments},
                     {"calibration_shots_per_experiment", c.calibration_shots_per_experiment}};

    return {{"batch",
             {{"best_cost", stats_json(best_costs)}, {"kl", stats_json(kls)}, {"qbas_f1", stats_json(f1s)}}},
            {"protocol", std::move(protocol)},
            {"ansatz", result.ansatz},
            {"runs", std::move(runs)}};
}

std::vector<std::filesystem::path> export_result(const BatchResult &result, const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    std::vector<std::filesystem::path> written;

    auto emit = [&](const std::string &name, const std::string &contents) {
        const auto path = dir / name;
        write_file(path, contents);
        written.push_back(path);
    };

    emit("config.json", json(result.config).dump(2) + "\n");

    for (std::size_t i = 0; i < result.curves.size(); ++i) {
        std::string csv = "evaluation,cost,best_cost\n";
        for (const CurvePoint &p : result.curves[i].points) {
            csv += std::to_string(p.evaluation) + "," + format_double(p.cost) + "," + format_double(p.best_cost) + "\n";
        }
        emit("curve_run" + std::to_string(i) + ".csv", csv);
    }

    std::string csv = "evaluation,median,min,max\n";
    for (std::size_t i = 0; i < result.aggregate.median.size(); ++i) {
        csv += std::to_string(i) + "," + format_double(result.aggregate.median[i]) + "," +
               format_double(result.aggregate.min[i]) + "," + format_double(result.aggregate.max[i]) + "\n";
    }
    emit("aggregate.csv", csv);

    emit("summary.json", summary_json(result).dump(2) + "\n");

    if (result.calibration) {
        json doc = result.calibration->matrix;
        doc["shots_per_basis_state"] = result.calibration->shots_per_experiment;
        emit("confusion.json", doc.dump(2) + "\n");
    }
    return written;
}

} // namespace ddqcl
