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

#include "ddqcl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddqcl {

namespace {

void check_widths(const Distribution &a, const Distribution &b, const char *what) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument(std::string(what) + ": distributions over " + std::to_string(a.n_qubits()) +
                                    " and " + std::to_string(b.n_qubits()) + " qubits");
    }
}

// Sum of x ln(x / m) over x > 0, m taken as given (no clamping).
double kl_to_midpoint(std::span<const double> x, std::span<const double> mid) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) {
            total += x[i] * std::log(x[i] / mid[i]);
        }
    }
    return total;
}

} // namespace

double kl_divergence(const Distribution &x, const Distribution &m, double epsilon) {
    check_widths(x, m, "kl_divergence");
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("kl_divergence: epsilon must be positive");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        if (xi > 0.0) {
            total += xi * std::log(xi) - xi * std::log(std::max(m[i], epsilon));
        }
    }
    return total;
}

double js_divergence(const Distribution &p, const Distribution &q) {
    check_widths(p, q, "js_divergence");
    std::vector<double> mid(p.size());
    for (std::size_t i = 0; i < mid.size(); ++i) {
        mid[i] = 0.5 * (p[i] + q[i]);
    }
    const double js = 0.5 * kl_to_midpoint(p.probs(), mid) + 0.5 * kl_to_midpoint(q.probs(), mid);
    return std::clamp(js, 0.0, std::numbers::ln2);
}

Distribution histogram_to_distribution(const Histogram &h) {
    if (h.shots() == 0) {
        throw std::invalid_argument("histogram_to_distribution: histogram has no shots");
    }
    std::vector<double> probs(h.size());
    const double shots = static_cast<double>(h.shots());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = static_cast<double>(h[i]) / shots;
    }
    return Distribution(h.n_qubits(), std::move(probs));
}

double f1_score(double precision, double recall) {
    const double denom = precision + recall;
    return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

QbasScore qbas_score(const Histogram &h, const std::vector<BitString> &patterns) {
    if (h.shots() == 0) {
        throw std::invalid_argument("qbas_score: histogram has no shots");
    }
    if (patterns.empty()) {
        throw std::invalid_argument("qbas_score: empty pattern set");
    }
    std::uint64_t valid_shots = 0;
    std::size_t observed = 0;
    for (const auto &p : patterns) {
        if (p.width != h.n_qubits()) {
            throw std::invalid_argument("qbas_score: pattern width does not match histogram");
        }
        const std::uint64_t c = h[p.value];
        valid_shots += c;
        observed += c > 0 ? 1 : 0;
    }
    QbasScore score;
    score.precision = static_cast<double>(valid_shots) / static_cast<double>(h.shots());
    score.recall = static_cast<double>(observed) / static_cast<double>(patterns.size());
    score.f1 = f1_score(score.precision, score.recall);
    return score;
}

} // namespace ddqcl
