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

namespace detail {

bool EliteSet::offer(Candidate candidate) {
    if (capacity_ == 0) {
        return false;
    }
    if (items_.size() == capacity_) {
        if (!(candidate.cost < items_.back().cost)) {
            return false;
        }
        items_.pop_back();
    }
    auto pos = std::upper_bound(items_.begin(), items_.end(), candidate.cost,
                                [](double v, const Candidate &e) { return v < e.cost; });
    items_.insert(pos, std::move(candidate));
    return true;
}

void EliteSet::resort() {
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Candidate &a, const Candidate &b) { return a.cost < b.cost; });
}

} // namespace detail

namespace {

detail::Candidate fresh(std::vector<double> params, double cost, double radius) {
    return detail::Candidate{std::move(params), cost, radius, 0, cost, 0};
}

} // namespace

LearningCurve run_zoo(CostContext &ctx, const OptimizerConfig &cfg) {
    const std::size_t dim = ctx.dimension();
    cfg.validate(dim);
    const ZooConfig &hp = cfg.zoo;
    const std::size_t region_dims = hp.region_dims > 0 ? hp.region_dims : dim;

    Rng rng = detail::optimizer_stream(ctx, OptimizerKind::zoo);
    std::vector<std::size_t> coords(dim);
    std::iota(coords.begin(), coords.end(), std::size_t{0});

    try {
        detail::EliteSet elites(hp.elite_size);
        for (auto &c : detail::random_population(ctx, cfg.n_ini(dim), rng)) {
            elites.offer(fresh(std::move(c.params), c.cost, hp.initial_radius));
        }

        auto restart = [&](detail::Candidate &elite) {
            std::vector<double> x = random_point(dim, rng);
            const double c = ctx.evaluate(x);
            elite = fresh(std::move(x), c, hp.initial_radius);
            elites.resort();
        };

        for (std::size_t iteration = 1;; ++iteration) {
            if (hp.suppression_period > 0 && iteration % hp.suppression_period == 0) {
                for (auto &e : elites.items()) {
                    e.cost = ctx.evaluate(e.params);
                }
                elites.resort();
            }

            if (!(uniform01(rng) < hp.local_probability)) {
                std::vector<double> x = random_point(dim, rng);
                const double c = ctx.evaluate(x);
                elites.offer(fresh(std::move(x), c, hp.initial_radius));
                continue;
            }

            std::uniform_int_distribution<std::size_t> pick_elite(0, elites.size() - 1);
            detail::Candidate &elite = elites.items()[pick_elite(rng)];
            std::vector<double> x = elite.params;
            // Partial Fisher-Yates: the first `region_dims` entries are a uniform sample.
            for (std::size_t k = 0; k < region_dims; ++k) {
                std::uniform_int_distribution<std::size_t> pick(k, dim - 1);
                std::swap(coords[k], coords[pick(rng)]);
                x[coords[k]] += elite.radius * (2.0 * uniform01(rng) - 1.0);
            }
            const double c = ctx.evaluate(x);

            if (hp.restart_window > 0 && ++elite.window_samples >= hp.restart_window) {
                if (elite.cost > (1.0 - hp.restart_threshold) * elite.checkpoint) {
                    restart(elite);
                    continue;
                }
                elite.checkpoint = elite.cost;
                elite.window_samples = 0;
            }

            if (c < elite.cost) {
                elite.params = std::move(x);
                elite.cost = c;
                elite.failures = 0;
                elite.radius = std::min(elite.radius * hp.grow_factor, hp.initial_radius);
                elites.resort();
            } else if (++elite.failures >= hp.stagnation_window) {
                elite.failures = 0;
                elite.radius *= hp.shrink_factor;
                if (elite.radius < hp.min_radius) {
                    restart(elite);
                }
            }
        }
    } catch (const BudgetExhausted &) {
    }
    return ctx.take_curve();
}

} // namespace ddqcl
