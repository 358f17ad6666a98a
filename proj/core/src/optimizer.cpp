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

#include "ddqcl/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "optimizer_internal.hpp"

namespace ddqcl {

std::string to_string(OptimizerKind kind) {
    switch (kind) {
    case OptimizerKind::adam:
        return "adam";
    case OptimizerKind::svhc:
        return "svhc";
    case OptimizerKind::zoo:
        return "zoo";
    }
    throw std::logic_error("unreachable optimizer kind");
}

OptimizerKind optimizer_kind_from_string(const std::string &name) {
    if (name == "adam") {
        return OptimizerKind::adam;
    }
    if (name == "svhc") {
        return OptimizerKind::svhc;
    }
    if (name == "zoo") {
        return OptimizerKind::zoo;
    }
    throw std::invalid_argument("unknown optimizer '" + name + "' (expected adam, svhc or zoo)");
}

void OptimizerConfig::validate(std::size_t param_count) const {
    auto fail = [](const std::string &msg) { throw std::invalid_argument("optimizer config: " + msg); };
    if (param_count == 0) {
        fail("parameter count must be positive");
    }
    switch (kind) {
    case OptimizerKind::adam:
        if (budget < 2 * param_count) {
            fail("budget " + std::to_string(budget) + " cannot cover one gradient estimate (" +
                 std::to_string(2 * param_count) + " evaluations)");
        }
        if (!(adam.learning_rate > 0.0) || !(adam.fd_step > 0.0) || !(adam.epsilon > 0.0)) {
            fail("adam learning_rate, fd_step and epsilon must be positive");
        }
        if (!(adam.beta1 >= 0.0 && adam.beta1 < 1.0) || !(adam.beta2 >= 0.0 && adam.beta2 < 1.0)) {
            fail("adam decay rates must be in [0, 1)");
        }
        if (initial_params && initial_params->size() != param_count) {
            fail("initial_params has the wrong length");
        }
        break;
    case OptimizerKind::svhc:
    case OptimizerKind::zoo:
        if (n_ini_multiplier == 0) {
            fail("n_ini_multiplier must be >= 1");
        }
        if (budget < n_ini(param_count) + 1) {
            fail("budget " + std::to_string(budget) + " must exceed n_ini = " + std::to_string(n_ini(param_count)));
        }
        break;
    }
    if (kind == OptimizerKind::svhc) {
        if (!(svhc.sigma >= 0.0) || svhc.subset_size > param_count) {
            fail("svhc sigma must be >= 0 and subset_size <= L");
        }
    }
    if (kind == OptimizerKind::zoo) {
        if (zoo.elite_size == 0) {
            fail("zoo elite_size must be >= 1");
        }
        if (!(zoo.local_probability >= 0.0 && zoo.local_probability <= 1.0)) {
            fail("zoo local_probability must be in [0, 1]");
        }
        if (!(zoo.initial_radius > 0.0) || !(zoo.min_radius > 0.0) || zoo.min_radius > zoo.initial_radius) {
            fail("zoo radii must satisfy 0 < min_radius <= initial_radius");
        }
        if (!(zoo.shrink_factor > 0.0 && zoo.shrink_factor < 1.0)) {
            fail("zoo shrink_factor must be in (0, 1)");
        }
        if (!(zoo.grow_factor >= 1.0) || !std::isfinite(zoo.grow_factor)) {
            fail("zoo grow_factor must be >= 1");
        }
        if (zoo.stagnation_window == 0) {
            fail("zoo stagnation_window must be >= 1");
        }
        if (!(zoo.restart_threshold >= 0.0 && zoo.restart_threshold < 1.0)) {
            fail("zoo restart_threshold must be in [0, 1)");
        }
        if (zoo.region_dims > param_count) {
            fail("zoo region_dims must be <= L");
        }
    }
}

std::vector<double> random_point(std::size_t dim, Rng &rng) {
    std::vector<double> x(dim);
    for (double &v : x) {
        v = 2.0 * std::numbers::pi * uniform01(rng);
    }
    return x;
}

namespace detail {

std::vector<Candidate> random_population(CostContext &ctx, std::size_t count, Rng &rng) {
    std::vector<Candidate> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> x = random_point(ctx.dimension(), rng);
        const double c = ctx.evaluate(x);
        out.push_back(Candidate{std::move(x), c});
    }
    return out;
}

Rng optimizer_stream(const CostContext &ctx, OptimizerKind kind) {
    return make_stream(ctx.curve().seed, {kOptimizerStreamTag, static_cast<std::uint64_t>(kind)});
}

} // namespace detail

InitResult init_search(CostContext &ctx, std::size_t n_ini, Rng &rng) {
    if (n_ini == 0) {
        throw std::invalid_argument("init_search: n_ini must be >= 1");
    }
    auto population = detail::random_population(ctx, n_ini, rng);
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (population[i].cost < population[best].cost) {
            best = i;
        }
    }
    return InitResult{std::move(population[best].params), population[best].cost, n_ini};
}

LearningCurve run_optimizer(CostContext &ctx, const OptimizerConfig &cfg) {
    if (ctx.budget() != cfg.budget) {
        throw std::invalid_argument("run_optimizer: context budget differs from configured budget");
    }
    switch (cfg.kind) {
    case OptimizerKind::adam:
        return run_adam(ctx, cfg);
    case OptimizerKind::svhc:
        return run_svhc(ctx, cfg);
    case OptimizerKind::zoo:
        return run_zoo(ctx, cfg);
    }
    throw std::logic_error("unreachable optimizer kind");
}

namespace {

template <class T>
void read_optional(const nlohmann::json &j, const char *key, T &out) {
    if (auto it = j.find(key); it != j.end()) {
        out = it->get<T>();
    }
}

void reject_unknown(const nlohmann::json &j, std::initializer_list<const char *> allowed, const std::string &where) {
    if (!j.is_object()) {
        throw std::invalid_argument(where + " must be a JSON object");
    }
    for (const auto &[key, _] : j.items()) {
        bool known = false;
        for (const char *a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw std::invalid_argument(where + ": unknown key '" + key + "'");
        }
    }
}

} // namespace

void to_json(nlohmann::json &j, const OptimizerConfig &cfg) {
    j = {{"kind", to_string(cfg.kind)},
         {"n_ini_multiplier", cfg.n_ini_multiplier},
         {"adam",
          {{"learning_rate", cfg.adam.learning_rate},
           {"beta1", cfg.adam.beta1},
           {"beta2", cfg.adam.beta2},
           {"epsilon", cfg.adam.epsilon},
           {"fd_step", cfg.adam.fd_step}}},
         {"svhc",
          {{"subset_size", cfg.svhc.subset_size},
           {"sigma", cfg.svhc.sigma},
           {"suppression_period", cfg.svhc.suppression_period}}},
         {"zoo",
          {{"elite_size", cfg.zoo.elite_size},
           {"local_probability", cfg.zoo.local_probability},
           {"initial_radius", cfg.zoo.initial_radius},
           {"min_radius", cfg.zoo.min_radius},
           {"grow_factor", cfg.zoo.grow_factor},
           {"shrink_factor", cfg.zoo.shrink_factor},
           {"stagnation_window", cfg.zoo.stagnation_window},
           {"region_dims", cfg.zoo.region_dims},
           {"restart_window", cfg.zoo.restart_window},
           {"restart_threshold", cfg.zoo.restart_threshold},
           {"suppression_period", cfg.zoo.suppression_period}}}};
}

void optimizer_from_json(const nlohmann::json &j, OptimizerConfig &cfg) {
    reject_unknown(j, {"kind", "n_ini_multiplier", "adam", "svhc", "zoo"}, "optimizer");
    if (auto it = j.find("kind"); it != j.end()) {
        cfg.kind = optimizer_kind_from_string(it->get<std::string>());
    }
    read_optional(j, "n_ini_multiplier", cfg.n_ini_multiplier);
    if (auto it = j.find("adam"); it != j.end()) {
        reject_unknown(*it, {"learning_rate", "beta1", "beta2", "epsilon", "fd_step"}, "optimizer.adam");
        read_optional(*it, "learning_rate", cfg.adam.learning_rate);
        read_optional(*it, "beta1", cfg.adam.beta1);
        read_optional(*it, "beta2", cfg.adam.beta2);
        read_optional(*it, "epsilon", cfg.adam.epsilon);
        read_optional(*it, "fd_step", cfg.adam.fd_step);
    }
    if (auto it = j.find("svhc"); it != j.end()) {
        reject_unknown(*it, {"subset_size", "sigma", "suppression_period"}, "optimizer.svhc");
        read_optional(*it, "subset_size", cfg.svhc.subset_size);
        read_optional(*it, "sigma", cfg.svhc.sigma);
        read_optional(*it, "suppression_period", cfg.svhc.suppression_period);
    }
    if (auto it = j.find("zoo"); it != j.end()) {
        reject_unknown(*it,
                       {"elite_size", "local_probability", "initial_radius", "min_radius", "grow_factor",
                        "shrink_factor", "stagnation_window", "region_dims", "restart_window", "restart_threshold",
                        "suppression_period"},
                       "optimizer.zoo");
        read_optional(*it, "elite_size", cfg.zoo.elite_size);
        read_optional(*it, "local_probability", cfg.zoo.local_probability);
        read_optional(*it, "initial_radius", cfg.zoo.initial_radius);
        read_optional(*it, "min_radius", cfg.zoo.min_radius);
        read_optional(*it, "grow_factor", cfg.zoo.grow_factor);
        read_optional(*it, "shrink_factor", cfg.zoo.shrink_factor);
        read_optional(*it, "stagnation_window", cfg.zoo.stagnation_window);
        read_optional(*it, "region_dims", cfg.zoo.region_dims);
        read_optional(*it, "restart_window", cfg.zoo.restart_window);
        read_optional(*it, "restart_threshold", cfg.zoo.restart_threshold);
        read_optional(*it, "suppression_period", cfg.zoo.suppression_period);
    }
}

} // namespace ddqcl
