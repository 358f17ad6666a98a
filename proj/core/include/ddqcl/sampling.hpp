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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "ddqcl/distribution.hpp"

namespace ddqcl {

using Rng = std::mt19937_64;

/// Independent generator keyed by (seed, tags...). Distinct tag tuples give
/// statistically independent streams, which lets parallel work stay
/// reproducible without sharing a generator.
Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {});

/// Uniform double in [0, 1).
double uniform01(Rng &rng);

/// Draws `shots` i.i.d. outcomes from `dist` by inverse-CDF lookup.
/// Throws std::invalid_argument when shots == 0.
Histogram sample(const Distribution &dist, std::uint64_t shots, Rng &rng);

} // namespace ddqcl
