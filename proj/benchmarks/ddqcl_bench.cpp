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

#include <benchmark/benchmark.h>

#include <vector>

#include "ddqcl/ansatz.hpp"
#include "ddqcl/bas.hpp"
#include "ddqcl/cost.hpp"
#include "ddqcl/readout.hpp"
#include "ddqcl/sampling.hpp"

namespace {

using namespace ddqcl;

std::vector<double> fixed_params(std::size_t n) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = 0.37 * static_cast<double>(i + 1);
    }
    return p;
}

void BM_Ry(benchmark::State &state) {
    StateVector s(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        s.apply_ry(0, 0.3);
        benchmark::DoNotOptimize(s[0]);
    }
}
BENCHMARK(BM_Ry)->Arg(4)->Arg(10)->Arg(16);

void BM_Cz(benchmark::State &state) {
    StateVector s(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        s.apply_cz(0, 1);
        benchmark::DoNotOptimize(s[0]);
    }
}
BENCHMARK(BM_Cz)->Arg(4)->Arg(10)->Arg(16);

void BM_ExecuteLineTwoLayers(benchmark::State &state) {
    const Ansatz a = Ansatz::build(4, Topology::line(4), 2);
    const auto params = fixed_params(a.param_count());
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.execute(params));
    }
}
BENCHMARK(BM_ExecuteLineTwoLayers);

void BM_Sample3000(benchmark::State &state) {
    const Ansatz a = Ansatz::build(4, Topology::line(4), 2);
    const Distribution d = probabilities(a.execute(fixed_params(a.param_count())));
    Rng rng = make_stream(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(d, 3000, rng));
    }
}
BENCHMARK(BM_Sample3000);

void BM_EvaluateCost(benchmark::State &state) {
    CircuitCost::Options opt;
    opt.shots = 3000;
    opt.exact_mode = state.range(0) == 1;
    if (state.range(1) == 1) {
        const PerQubitFlipModel model = PerQubitFlipModel::uniform(4, 0.05, 0.05);
        opt.readout = ReadoutStage{model, synth_confusion(model)};
    }
    CircuitCost cost(Ansatz::build(4, Topology::line(4), 2), bas_target_distribution(BasSpec{2, 2}), opt);
    const auto params = fixed_params(cost.dimension());
    std::uint64_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cost.cost(params, index++));
    }
}
BENCHMARK(BM_EvaluateCost)->ArgNames({"exact", "readout"})->Args({1, 0})->Args({0, 0})->Args({0, 1});

void BM_Correct(benchmark::State &state) {
    const PerQubitFlipModel model = PerQubitFlipModel::uniform(4, 0.05, 0.05);
    const ConfusionMatrix m = synth_confusion(model);
    const Distribution observed = apply_channel_exact(bas_target_distribution(BasSpec{2, 2}), m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(correct(observed, m));
    }
}
BENCHMARK(BM_Correct);

} // namespace

BENCHMARK_MAIN();
