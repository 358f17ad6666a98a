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

#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

#include "ddqcl/ansatz.hpp"
#include "ddqcl/bas.hpp"
#include "ddqcl/metrics.hpp"
#include "oracles.hpp"

namespace ddqcl {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST(Topology, Presets) {
    EXPECT_EQ(Topology::line(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(Topology::star(4).edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(Topology::preset("star", 4), Topology::star(4));
    EXPECT_THROW(Topology::preset("ring", 4), std::invalid_argument);
}

TEST(Topology, RejectsInvalidEdges) {
    EXPECT_THROW(Topology(4, {{0, 4}}), std::invalid_argument);
    EXPECT_THROW(Topology(4, {{2, 2}}), std::invalid_argument);
    EXPECT_THROW(Topology(4, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_NO_THROW(Topology(4, {{3, 0}, {1, 2}}));
}

TEST(Ansatz, CountsForFourQubits) {
    const Ansatz line1 = Ansatz::build(4, Topology::line(4), 1);
    EXPECT_EQ(line1.param_count(), 10u);
    EXPECT_EQ(line1.ry_count(), 10u);
    EXPECT_EQ(line1.cz_count(), 3u);

    const Ansatz star2 = Ansatz::build(4, Topology::star(4), 2);
    EXPECT_EQ(star2.param_count(), 16u);
    EXPECT_EQ(star2.ry_count(), 16u);
    EXPECT_EQ(star2.cz_count(), 6u);
}

TEST(Ansatz, ParamCountFormula) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t layers = 0; layers <= 3; ++layers) {
            const Ansatz a = Ansatz::build(n, Topology::line(n), layers);
            EXPECT_EQ(a.param_count(), n + 2 * (n - 1) * layers);
        }
    }
}

TEST(Ansatz, EverySlotUsedOnce) {
    const Ansatz a = Ansatz::build(4, Topology::star(4), 3);
    std::set<std::size_t> slots;
    for (const Gate &g : a.gates()) {
        if (const auto *ry = std::get_if<RyGate>(&g)) {
            EXPECT_TRUE(slots.insert(ry->slot).second);
        }
    }
    EXPECT_EQ(slots.size(), a.param_count());
    EXPECT_EQ(*slots.rbegin(), a.param_count() - 1);
}

TEST(Ansatz, TwoQubitGateOrder) {
    const Ansatz a = Ansatz::build(2, Topology(2, {{0, 1}}), 1);
    const std::vector<Gate> expected = {RyGate{0, 0}, RyGate{1, 1}, CzGate{0, 1}, RyGate{0, 2}, RyGate{1, 3}};
    EXPECT_EQ(a.gates(), expected);
}

TEST(Ansatz, BuildErrors) {
    EXPECT_THROW(Ansatz::build(4, Topology(4, {}), 1), std::invalid_argument);
    EXPECT_THROW(Ansatz::build(3, Topology::line(4), 1), std::invalid_argument);
    EXPECT_NO_THROW(Ansatz::build(1, Topology(1, {}), 0));
}

TEST(Ansatz, ZeroParamsGiveAllZeros) {
    const Ansatz a = Ansatz::build(4, Topology::line(4), 2);
    const StateVector s = a.execute(std::vector<double>(16, 0.0));
    EXPECT_EQ(s[0], Amplitude(1.0));
}

TEST(Ansatz, RejectsWrongParamLength) {
    const Ansatz a = Ansatz::build(4, Topology::line(4), 1);
    EXPECT_THROW(a.execute(std::vector<double>(9, 0.0)), std::invalid_argument);
}

TEST(Ansatz, MatchesDenseOracle) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (const std::string topo : {"line", "star"}) {
        const Ansatz a = Ansatz::build(4, Topology::preset(topo, 4), 2);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> params(a.param_count());
            for (double &p : params) {
                p = angle(rng);
            }
            std::vector<double> ref = oracle::basis(16, 0);
            for (const Gate &g : a.gates()) {
                if (const auto *ry = std::get_if<RyGate>(&g)) {
                    ref = oracle::apply(oracle::embed(oracle::ry(params[ry->slot]), ry->qubit, 4), ref);
                } else {
                    const auto &cz = std::get<CzGate>(g);
                    ref = oracle::apply(oracle::cz(cz.qubit_a, cz.qubit_b, 4), ref);
                }
            }
            const StateVector s = a.execute(params);
            for (std::size_t i = 0; i < 16; ++i) {
                ASSERT_NEAR(s[i].real(), ref[i], 1e-12);
            }
        }
    }
}

TEST(Ansatz, AnglesArePeriodicInProbability) {
    const Ansatz a = Ansatz::build(4, Topology::line(4), 1);
    std::vector<double> p(10, 0.7);
    std::vector<double> q = p;
    q[3] += 3.0 * kTwoPi;
    q[7] -= kTwoPi;
    const Distribution dp = probabilities(a.execute(p));
    const Distribution dq = probabilities(a.execute(q));
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(dp[i], dq[i], 1e-12);
    }
}

TEST(WrapAngle, MapsIntoHalfOpenRange) {
    EXPECT_EQ(wrap_angle(1.0), 1.0);
    EXPECT_NEAR(wrap_angle(-1.0), kTwoPi - 1.0, 1e-15);
    EXPECT_NEAR(wrap_angle(kTwoPi + 0.5), 0.5, 1e-15);
    EXPECT_GE(wrap_angle(-1e-300), 0.0);
    EXPECT_LT(wrap_angle(-1e-300), kTwoPi);
    EXPECT_THROW(wrap_angle(NAN), std::invalid_argument);
}

TEST(U2Block, WorkedExamples) {
    const StateVector s0 = u2_block(0.0, 0.0, 0.0);
    EXPECT_EQ(s0[0], Amplitude(1.0));

    const double r = 1.0 / std::sqrt(2.0);
    const StateVector s1 = u2_block(std::numbers::pi / 2.0, 0.0, 0.0);
    EXPECT_NEAR(s1[0b00].real(), r, 1e-15);
    EXPECT_NEAR(s1[0b10].real(), r, 1e-15);

    const Distribution d = probabilities(u2_block(std::numbers::pi / 2.0, 0.0, std::numbers::pi / 2.0));
    for (double p : d.probs()) {
        EXPECT_NEAR(p, 0.25, 1e-15);
    }
}

TEST(U2Block, EqualsAnsatzWithZeroSecondRotation) {
    const Ansatz a = Ansatz::build(2, Topology(2, {{0, 1}}), 1);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < 100; ++trial) {
        const double t = angle(rng), g = angle(rng), b = angle(rng);
        const StateVector u = u2_block(t, g, b);
        const StateVector s = a.execute(std::vector<double>{t, 0.0, g, b});
        for (std::size_t i = 0; i < 4; ++i) {
            ASSERT_NEAR(u[i].real(), s[i].real(), 1e-12);
        }
    }
}

TEST(Ansatz, JsonLayout) {
    const nlohmann::json j = Ansatz::build(2, Topology(2, {{0, 1}}), 1);
    EXPECT_EQ(j.at("param_count"), 4);
    EXPECT_EQ(j.at("layers"), 1);
    EXPECT_EQ(j.at("topology").at("edges"), nlohmann::json::parse("[[0,1]]"));
    EXPECT_EQ(j.at("gates").size(), 5u);
    EXPECT_EQ(j.at("gates")[0], nlohmann::json::parse(R"({"op":"ry","qubit":0,"param":0})"));
    EXPECT_EQ(j.at("gates")[2], nlohmann::json::parse(R"({"op":"cz","qubits":[0,1]})"));
}

// Parameters produced once by an exact-mode training run and frozen.
TEST(Regression, FrozenLineTwoLayerParams) {
    std::ifstream in(DDQCL_FIXTURE_DIR "/line4_layers2_bas22.json");
    ASSERT_TRUE(in) << "missing fixture";
    const nlohmann::json fx = nlohmann::json::parse(in);
    const Ansatz a = Ansatz::build(4, Topology::preset(fx.at("topology"), 4), fx.at("layers"));
    const auto params = fx.at("params").get<std::vector<double>>();
    const double js = js_divergence(probabilities(a.execute(params)), bas_target_distribution(BasSpec{2, 2}));
    EXPECT_LT(js, 0.05);
    EXPECT_NEAR(js, fx.at("js").get<double>(), 1e-12);
}

} // namespace
} // namespace ddqcl
