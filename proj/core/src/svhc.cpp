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
#include <numeric>
#include <random>

#include "ddqcl/optimizer.hpp"
#include "optimizer_internal.hpp"

namespace ddqcl {

LearningCurve run_svhc(CostContext &ctx, const OptimizerConfig &cfg) {
    const std::size_t dim = ctx.dimension();
    cfg.validate(dim);
    const SvhcConfig &hp = cfg.svhc;
    const std::size_t subset = hp.subset_size > 0 ? hp.subset_size : (dim + 3) / 4;

    Rng rng = detail::optimizer_stream(ctx, OptimizerKind::svhc);
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<std::size_t> coords(dim);
    std::iota(coords.begin(), coords.end(), std::size_t{0});

    try {
        InitResult start = init_search(ctx, cfg.n_ini(dim), rng);
        std::vector<double> incumbent = std::move(start.params);
        double incumbent_cost = start.cost;
        std::vector<double> candidate(dim);

        for (std::size_t iteration = 1;; ++iteration) {
            if (hp.suppression_period > 0 && iteration % hp.suppression_period == 0) {
                incumbent_cost = ctx.evaluate(incumbent);
            }
            candidate = incumbent;
            // Partial Fisher-Yates: the first `subset` entries are a uniform sample.
            for (std::size_t k = 0; k < subset; ++k) {
                std::uniform_int_distribution<std::size_t> pick(k, dim - 1);
                std::swap(coords[k], coords[pick(rng)]);
                candidate[coords[k]] += hp.sigma * step(rng);
            }
            const double c = ctx.evaluate(candidate);
            if (c < incumbent_cost) {
                incumbent.swap(candidate);
                incumbent_cost = c;
            }
        }
    } catch (const BudgetExhausted &) {
    }
    return ctx.take_curve();
}

} // namespace ddqcl
