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

#include <cmath>

#include "ddqcl/optimizer.hpp"
#include "optimizer_internal.hpp"

namespace ddqcl {

LearningCurve run_adam(CostContext &ctx, const OptimizerConfig &cfg) {
    const std::size_t dim = ctx.dimension();
    cfg.validate(dim);
    const AdamConfig &hp = cfg.adam;

    Rng rng = detail::optimizer_stream(ctx, OptimizerKind::adam);
    std::vector<double> x = cfg.initial_params ? *cfg.initial_params : random_point(dim, rng);
    std::vector<double> m(dim, 0.0);
    std::vector<double> v(dim, 0.0);
    std::vector<double> grad(dim, 0.0);
    std::vector<double> probe = x;

    double beta1_t = 1.0;
    double beta2_t = 1.0;
    try {
        for (;;) {
            for (std::size_t i = 0; i < dim; ++i) {
                probe[i] = x[i] + hp.fd_step;
                const double plus = ctx.evaluate(probe);
                probe[i] = x[i] - hp.fd_step;
                const double minus = ctx.evaluate(probe);
                probe[i] = x[i];
                grad[i] = (plus - minus) / (2.0 * hp.fd_step);
            }
            beta1_t *= hp.beta1;
            beta2_t *= hp.beta2;
            for (std::size_t i = 0; i < dim; ++i) {
                m[i] = hp.beta1 * m[i] + (1.0 - hp.beta1) * grad[i];
                v[i] = hp.beta2 * v[i] + (1.0 - hp.beta2) * grad[i] * grad[i];
                const double m_hat = m[i] / (1.0 - beta1_t);
                const double v_hat = v[i] / (1.0 - beta2_t);
                x[i] -= hp.learning_rate * m_hat / (std::sqrt(v_hat) + hp.epsilon);
            }
            probe = x;
        }
    } catch (const BudgetExhausted &) {
    }
    return ctx.take_curve();
}

} // namespace ddqcl
