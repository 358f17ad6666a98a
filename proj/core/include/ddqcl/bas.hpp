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

#include <cstddef>
#include <string>
#include <vector>

#include "ddqcl/bit_string.hpp"
#include "ddqcl/distribution.hpp"

namespace ddqcl {

/// Bars-and-stripes image geometry.
struct BasSpec {
    std::size_t rows = 2;
    std::size_t cols = 2;

    std::size_t n_qubits() const { return rows * cols; }
    /// 2^rows + 2^cols - 2.
    std::size_t pattern_count() const;
    /// Throws std::invalid_argument for zero dimensions or more than
    /// kMaxQubits pixels.
    void validate() const;
};

/// Binary image, image[r][c], true = dark pixel.
using Image = std::vector<std::vector<bool>>;

/// Row-major flatten, top-left pixel becomes qubit 0 (leftmost bit), dark = 1.
BitString encode_image(const BasSpec &spec, const Image &image);
Image decode_image(const BasSpec &spec, const BitString &bits);

/// True when every row is constant or every column is constant.
bool is_bar_or_stripe(const Image &image);

/// All bars-and-stripes patterns, sorted by value, without duplicates.
std::vector<BitString> bas_patterns(const BasSpec &spec);

/// Uniform over bas_patterns(spec), zero elsewhere.
Distribution bas_target_distribution(const BasSpec &spec);

/// One bitstring per line, LF-terminated.
std::string format_patterns(const std::vector<BitString> &patterns);

} // namespace ddqcl
