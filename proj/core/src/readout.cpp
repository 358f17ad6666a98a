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

#include "ddqcl/readout.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "ddqcl/bit_string.hpp"

namespace ddqcl {

ConfusionMatrix::ConfusionMatrix(std::size_t n_qubits, std::vector<double> entries)
    : n_qubits_(n_qubits), dim_(state_space_size(n_qubits)), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("confusion matrix over " + std::to_string(n_qubits) + " qubits needs " +
                                    std::to_string(dim_ * dim_) + " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t x = 0; x < dim_; ++x) {
        double column = 0.0;
        for (std::size_t y = 0; y < dim_; ++y) {
            const double v = (*this)(y, x);
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("confusion matrix entries must be finite and non-negative");
            }
            column += v;
        }
        if (std::abs(column - 1.0) > 1e-9) {
            throw std::invalid_argument("confusion matrix column " + std::to_string(x) + " sums to " +
                                        std::to_string(column));
        }
    }
}

ConfusionMatrix ConfusionMatrix::identity(std::size_t n_qubits) {
    const std::size_t dim = state_space_size(n_qubits);
    std::vector<double> entries(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        entries[i * dim + i] = 1.0;
    }
    return ConfusionMatrix(n_qubits, std::move(entries));
}

double ConfusionMatrix::max_abs_difference(const ConfusionMatrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("confusion matrices have different sizes");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

PerQubitFlipModel PerQubitFlipModel::uniform(std::size_t n_qubits, double p10, double p01) {
    PerQubitFlipModel model{std::vector<double>(n_qubits, p10), std::vector<double>(n_qubits, p01)};
    model.validate();
    return model;
}

bool PerQubitFlipModel::is_noiseless() const {
    return std::all_of(p10.begin(), p10.end(), [](double p) { return p == 0.0; }) &&
           std::all_of(p01.begin(), p01.end(), [](double p) { return p == 0.0; });
}

void PerQubitFlipModel::validate() const {
    if (p10.empty() || p10.size() != p01.size()) {
        throw std::invalid_argument("flip model needs one p10 and one p01 per qubit");
    }
    state_space_size(p10.size());
    auto in_range = [](double p) { return p >= 0.0 && p < 0.5; };
    for (std::size_t q = 0; q < p10.size(); ++q) {
        if (!in_range(p10[q]) || !in_range(p01[q])) {
            throw std::invalid_argument("flip probabilities for qubit " + std::to_string(q) + " must be in [0, 0.5)");
        }
    }
}

IllConditionedError::IllConditionedError(double condition_estimate, double bound)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "confusion matrix is ill-conditioned: condition estimate " << condition_estimate
              << " exceeds bound " << bound;
          return msg.str();
      }()),
      condition_estimate_(condition_estimate) {}

ConfusionMatrix synth_confusion(const PerQubitFlipModel &model) {
    model.validate();
    const std::size_t n = model.n_qubits();
    const std::size_t dim = state_space_size(n);
    std::vector<double> entries(dim * dim);
    for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t x = 0; x < dim; ++x) {
            double p = 1.0;
            for (std::size_t q = 0; q < n; ++q) {
                const std::uint64_t mask = qubit_mask(n, q);
                const bool truth = (x & mask) != 0;
                const bool read = (y & mask) != 0;
                if (!truth) {
                    p *= read ? model.p10[q] : 1.0 - model.p10[q];
                } else {
                    p *= read ? 1.0 - model.p01[q] : model.p01[q];
                }
            }
            entries[y * dim + x] = p;
        }
    }
    return ConfusionMatrix(n, std::move(entries));
}

Distribution apply_channel_exact(const Distribution &p, const ConfusionMatrix &m) {
    if (p.n_qubits() != m.n_qubits()) {
        throw std::invalid_argument("apply_channel_exact: distribution and matrix widths differ");
    }
    const std::size_t dim = m.dim();
    std::vector<double> out(dim, 0.0);
    for (std::size_t y = 0; y < dim; ++y) {
        double acc = 0.0;
        for (std::size_t x = 0; x < dim; ++x) {
            acc += m(y, x) * p[x];
        }
        out[y] = acc;
    }
    double total = 0.0;
    for (double v : out) {
        total += v;
    }
    for (double &v : out) {
        v /= total;
    }
    return Distribution(p.n_qubits(), std::move(out));
}

Histogram apply_channel_sampled(const Histogram &h, const PerQubitFlipModel &model, Rng &rng) {
    model.validate();
    const std::size_t n = h.n_qubits();
    if (model.n_qubits() != n) {
        throw std::invalid_argument("apply_channel_sampled: model and histogram widths differ");
    }
    if (model.is_noiseless()) {
        return h;
    }
    Histogram out(n);
    for (std::size_t x = 0; x < h.size(); ++x) {
        for (std::uint64_t shot = 0; shot < h[x]; ++shot) {
            std::size_t y = x;
            for (std::size_t q = 0; q < n; ++q) {
                const std::uint64_t mask = qubit_mask(n, q);
                const double flip = (x & mask) ? model.p01[q] : model.p10[q];
                if (uniform01(rng) < flip) {
                    y ^= mask;
                }
            }
            out.add(y);
        }
    }
    return out;
}

Calibration calibrate(const PerQubitFlipModel &channel, std::uint64_t shots_per_basis_state, std::uint64_t seed) {
    channel.validate();
    if (shots_per_basis_state == 0) {
        throw std::invalid_argument("calibrate: shots per basis state must be >= 1");
    }
    const std::size_t n = channel.n_qubits();
    const std::size_t dim = state_space_size(n);
    std::vector<double> entries(dim * dim, 0.0);
    for (std::size_t x = 0; x < dim; ++x) {
        Rng rng = make_stream(seed, {0x63616c6962ULL, x});
        Histogram prepared(n);
        prepared.add(x, shots_per_basis_state);
        const Histogram read = apply_channel_sampled(prepared, channel, rng);
        for (std::size_t y = 0; y < dim; ++y) {
            entries[y * dim + x] = static_cast<double>(read[y]) / static_cast<double>(shots_per_basis_state);
        }
    }
    return Calibration{ConfusionMatrix(n, std::move(entries)), dim, shots_per_basis_state};
}

std::vector<double> correct_raw(const Distribution &observed, const ConfusionMatrix &m, double max_condition) {
    if (observed.n_qubits() != m.n_qubits()) {
        throw std::invalid_argument("correct: distribution and matrix widths differ");
    }
    const auto dim = static_cast<Eigen::Index>(m.dim());
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> matrix(
        m.entries().data(), dim, dim);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(matrix);
    const double rcond = lu.rcond();
    const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(condition <= max_condition)) {
        throw IllConditionedError(condition, max_condition);
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(observed.probs().data(), dim);
    const Eigen::VectorXd solution = lu.solve(rhs);
    return {solution.data(), solution.data() + solution.size()};
}

Distribution correct(const Distribution &observed, const ConfusionMatrix &m, double max_condition) {
    std::vector<double> x = correct_raw(observed, m, max_condition);
    double total = 0.0;
    for (double &v : x) {
        v = std::max(v, 0.0);
        total += v;
    }
    if (!(total > 0.0)) {
        throw std::runtime_error("correct: corrected distribution has no positive mass");
    }
    for (double &v : x) {
        v /= total;
    }
    return Distribution(observed.n_qubits(), std::move(x));
}

void to_json(nlohmann::json &j, const ConfusionMatrix &m) {
    j = {{"n_qubits", m.n_qubits()},
         {"entries", std::vector<double>(m.entries().begin(), m.entries().end())}};
}

ConfusionMatrix confusion_from_json(const nlohmann::json &j) {
    for (const auto &[key, _] : j.items()) {
        if (key != "n_qubits" && key != "entries" && key != "shots_per_basis_state") {
            throw std::invalid_argument("confusion matrix document has unknown key '" + key + "'");
        }
    }
    return ConfusionMatrix(j.at("n_qubits").get<std::size_t>(), j.at("entries").get<std::vector<double>>());
}

void to_json(nlohmann::json &j, const PerQubitFlipModel &model) { j = {{"p10", model.p10}, {"p01", model.p01}}; }

} // namespace ddqcl
