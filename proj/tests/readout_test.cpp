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
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

#include "ddqcl/metrics.hpp"
#include "ddqcl/readout.hpp"
#include "ddqcl/sampling.hpp"
#include "oracles.hpp"

namespace ddqcl {
namespace {

Distribution random_distribution(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(std::size_t{1} << n);
    double total = 0.0;
    for (double &v : p) {
        total += v = u(rng);
    }
    for (double &v : p) {
        v /= total;
    }
    return Distribution(n, std::move(p));
}

PerQubitFlipModel random_model(std::mt19937_64 &rng, std::size_t n, double max_p) {
    std::uniform_real_distribution<double> u(0.0, max_p);
    PerQubitFlipModel m{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t q = 0; q < n; ++q) {
        m.p10[q] = u(rng);
        m.p01[q] = u(rng);
    }
    return m;
}

TEST(ConfusionMatrix, ValidatesColumns) {
    EXPECT_THROW(ConfusionMatrix(1, {0.9, 0.1, 0.2, 0.9}), std::invalid_argument);
    EXPECT_THROW(ConfusionMatrix(1, {1.1, 0.0, -0.1, 1.0}), std::invalid_argument);
    EXPECT_THROW(ConfusionMatrix(1, {1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(ConfusionMatrix(1, {0.9, 0.2, 0.1, 0.8}));
}

TEST(FlipModel, Validates) {
    EXPECT_THROW(PerQubitFlipModel::uniform(2, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(PerQubitFlipModel::uniform(2, -0.1, 0.0), std::invalid_argument);
    EXPECT_THROW((PerQubitFlipModel{{0.1}, {0.1, 0.1}}.validate()), std::invalid_argument);
    EXPECT_TRUE(PerQubitFlipModel::noiseless(3).is_noiseless());
}

TEST(SynthConfusion, NoiselessIsIdentity) {
    EXPECT_EQ(synth_confusion(PerQubitFlipModel::noiseless(4)), ConfusionMatrix::identity(4));
}

TEST(SynthConfusion, SingleQubitBlock) {
    const ConfusionMatrix m = synth_confusion(PerQubitFlipModel{{0.05}, {0.1}});
    EXPECT_DOUBLE_EQ(m(0, 0), 0.95);
    EXPECT_DOUBLE_EQ(m(0, 1), 0.10);
    EXPECT_DOUBLE_EQ(m(1, 0), 0.05);
    EXPECT_DOUBLE_EQ(m(1, 1), 0.90);
}

TEST(SynthConfusion, MatchesKroneckerOracle) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const PerQubitFlipModel model = random_model(rng, 3, 0.2);
        oracle::Matrix ref = {{1.0}};
        for (std::size_t q = 0; q < 3; ++q) {
            ref = oracle::kron(ref, {{1.0 - model.p10[q], model.p01[q]}, {model.p10[q], 1.0 - model.p01[q]}});
        }
        const ConfusionMatrix m = synth_confusion(model);
        for (std::size_t y = 0; y < 8; ++y) {
            for (std::size_t x = 0; x < 8; ++x) {
                ASSERT_NEAR(m(y, x), ref[y][x], 1e-15);
            }
        }
    }
    const ConfusionMatrix two = synth_confusion(PerQubitFlipModel{{0.05, 0.05}, {0.1, 0.1}});
    EXPECT_NEAR(two(0, 0), 0.9025, 1e-15);
}

TEST(ApplyChannelExact, WorkedExamples) {
    std::mt19937_64 rng(8);
    const Distribution p = random_distribution(rng, 3);
    EXPECT_EQ(apply_channel_exact(p, ConfusionMatrix::identity(3)), p);

    const ConfusionMatrix m = synth_confusion(PerQubitFlipModel{{0.05}, {0.1}});
    const Distribution out = apply_channel_exact(Distribution::delta(1, 0), m);
    EXPECT_DOUBLE_EQ(out[0], 0.95);
    EXPECT_DOUBLE_EQ(out[1], 0.05);

    const Distribution u = apply_channel_exact(Distribution::uniform(2), synth_confusion(random_model(rng, 2, 0.3)));
    EXPECT_NEAR(u[0] + u[1] + u[2] + u[3], 1.0, 1e-15);
}

TEST(ApplyChannelSampled, NoiselessAndDeterministic) {
    Histogram h(3, {10, 0, 5, 0, 0, 7, 0, 1});
    Rng rng = make_stream(1);
    EXPECT_EQ(apply_channel_sampled(h, PerQubitFlipModel::noiseless(3), rng), h);

    const PerQubitFlipModel model = PerQubitFlipModel::uniform(3, 0.1, 0.2);
    Rng a = make_stream(5);
    Rng b = make_stream(5);
    const Histogram ha = apply_channel_sampled(h, model, a);
    EXPECT_EQ(ha, apply_channel_sampled(h, model, b));
    EXPECT_EQ(ha.shots(), h.shots());
}

TEST(ApplyChannelSampled, BinomialFlipRate) {
    Histogram h(1);
    h.add(0, 1'000'000);
    Rng rng = make_stream(12);
    const Histogram out = apply_channel_sampled(h, PerQubitFlipModel{{0.05}, {0.0}}, rng);
    const double sigma = std::sqrt(1e6 * 0.05 * 0.95);
    EXPECT_NEAR(static_cast<double>(out[1]), 50000.0, 3.0 * sigma);
}

TEST(Calibrate, NoiselessIsExactIdentity) {
    for (std::uint64_t shots : {1ULL, 17ULL, 1000ULL}) {
        const Calibration c = calibrate(PerQubitFlipModel::noiseless(2), shots, 3);
        EXPECT_EQ(c.matrix, ConfusionMatrix::identity(2));
    }
}

TEST(Calibrate, OneExperimentPerBasisState) {
    const Calibration c = calibrate(PerQubitFlipModel::uniform(4, 0.03, 0.05), 100, 0);
    EXPECT_EQ(c.experiments, 16u);
    EXPECT_EQ(c.shots_per_experiment, 100u);
    EXPECT_THROW(calibrate(PerQubitFlipModel::noiseless(1), 0, 0), std::invalid_argument);
}

TEST(Calibrate, SingleQubitWithinBinomialBars) {
    const PerQubitFlipModel model{{0.05}, {0.1}};
    const ConfusionMatrix exact = synth_confusion(model);
    const Calibration c = calibrate(model, 10000, 21);
    // Widest 3-sigma bar over the entries: sqrt(0.1 * 0.9 / 1e4) * 3 = 0.009.
    for (std::size_t y = 0; y < 2; ++y) {
        for (std::size_t x = 0; x < 2; ++x) {
            const double p = exact(y, x);
            EXPECT_NEAR(c.matrix(y, x), p, 3.0 * std::sqrt(p * (1.0 - p) / 1e4));
        }
    }
}

TEST(Calibrate, ErrorShrinksWithShots) {
    const PerQubitFlipModel model = PerQubitFlipModel::uniform(2, 0.05, 0.08);
    const ConfusionMatrix exact = synth_confusion(model);
    const double e2 = calibrate(model, 100, 1).matrix.max_abs_difference(exact);
    const double e4 = calibrate(model, 10'000, 1).matrix.max_abs_difference(exact);
    const double e6 = calibrate(model, 1'000'000, 1).matrix.max_abs_difference(exact);
    EXPECT_LT(e4, e2);
    EXPECT_LT(e6, e4);
    EXPECT_LT(e6, 2e-3);
}

TEST(Calibrate, SeedDeterminism) {
    const PerQubitFlipModel model = PerQubitFlipModel::uniform(3, 0.05, 0.05);
    EXPECT_EQ(calibrate(model, 500, 9).matrix, calibrate(model, 500, 9).matrix);
    EXPECT_NE(calibrate(model, 500, 9).matrix, calibrate(model, 500, 10).matrix);
}

TEST(Correct, IdentityLeavesInputUnchanged) {
    std::mt19937_64 rng(2);
    const Distribution p = random_distribution(rng, 3);
    const Distribution c = correct(p, ConfusionMatrix::identity(3));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(c[i], p[i], 1e-15);
    }
}

TEST(Correct, InvertsExactChannel) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const Distribution p = random_distribution(rng, 4);
        const ConfusionMatrix m = synth_confusion(random_model(rng, 4, 0.1));
        const Distribution c = correct(apply_channel_exact(p, m), m);
        for (std::size_t i = 0; i < 16; ++i) {
            ASSERT_NEAR(c[i], p[i], 1e-10);
        }
    }
}

TEST(Correct, ClampsNegativeSolution) {
    const ConfusionMatrix m = synth_confusion(PerQubitFlipModel{{0.05}, {0.1}});
    const Distribution observed(1, {0.96, 0.04});
    const std::vector<double> raw = correct_raw(observed, m);
    EXPECT_NEAR(raw[0], 0.86 / 0.85, 1e-12);
    EXPECT_NEAR(raw[1], -0.01 / 0.85, 1e-12);
    const Distribution c = correct(observed, m);
    EXPECT_EQ(c[0], 1.0);
    EXPECT_EQ(c[1], 0.0);
}

TEST(Correct, RejectsIllConditionedMatrix) {
    const ConfusionMatrix singular(1, {0.5, 0.5, 0.5, 0.5});
    EXPECT_THROW(correct(Distribution::uniform(1), singular), IllConditionedError);

    const double d = 1e-10;
    const ConfusionMatrix nearly(1, {0.5 + d, 0.5, 0.5 - d, 0.5});
    try {
        correct(Distribution::uniform(1), nearly);
        FAIL() << "expected IllConditionedError";
    } catch (const IllConditionedError &e) {
        EXPECT_GT(e.condition_estimate(), 1e8);
    }
    EXPECT_NO_THROW(correct(Distribution::uniform(1), nearly, 1e12));
}

// With calibration and readout both sampled, correction should bring the
// estimate closer to the truth than the raw noisy histogram nearly always.
TEST(Correct, SampledPipelineBeatsRawEstimate) {
    const PerQubitFlipModel model = PerQubitFlipModel::uniform(4, 0.05, 0.05);
    const ConfusionMatrix m = calibrate(model, 10'000, 4).matrix;
    std::mt19937_64 rng(31);
    int better = 0;
    constexpr int kTrials = 100;
    for (int trial = 0; trial < kTrials; ++trial) {
        const Distribution p = random_distribution(rng, 4);
        Rng stream = make_stream(100 + trial);
        const Histogram noisy = apply_channel_sampled(sample(p, 100'000, stream), model, stream);
        const Distribution raw = histogram_to_distribution(noisy);
        const Distribution fixed = correct(raw, m);
        if (total_variation(fixed.probs(), p.probs()) < total_variation(raw.probs(), p.probs())) {
            ++better;
        }
    }
    EXPECT_GE(better, 95);
}

TEST(ConfusionJson, RoundTrip) {
    const ConfusionMatrix m = synth_confusion(PerQubitFlipModel::uniform(2, 0.03, 0.07));
    const nlohmann::json j = m;
    EXPECT_EQ(confusion_from_json(j), m);
    EXPECT_EQ(confusion_from_json(nlohmann::json::parse(j.dump())), m);

    nlohmann::json extra = j;
    extra["shots_per_basis_state"] = 10000;
    EXPECT_EQ(confusion_from_json(extra), m);
    extra["bogus"] = 1;
    EXPECT_THROW(confusion_from_json(extra), std::invalid_argument);
}

} // namespace
} // namespace ddqcl
