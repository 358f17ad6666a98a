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

#include "ddqcl/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ddqcl {

Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    std::vector<std::uint32_t> words;
    words.reserve(2 * (tags.size() + 1));
    auto push = [&words](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    for (std::uint64_t tag : tags) {
        push(tag);
    }
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

double uniform01(Rng &rng) {
    // 53 random mantissa bits; identical across standard libraries.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Histogram sample(const Distribution &dist, std::uint64_t shots, Rng &rng) {
    if (shots == 0) {
        throw std::invalid_argument("sample: shots must be >= 1");
    }
    const auto probs = dist.probs();
    std::vector<double> cdf(probs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cdf[i] = running;
    }
    const double total = cdf.back();

    Histogram hist(dist.n_qubits());
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        // u < total always, so `it` is in range; clamp against rounding anyway.
        const std::size_t index = it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
        hist.add(index);
    }
    return hist;
}

} // namespace ddqcl
