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

#include "ddqcl/bas.hpp"

#include <set>
#include <stdexcept>

namespace ddqcl {

std::size_t BasSpec::pattern_count() const {
    validate();
    return (std::size_t{1} << rows) + (std::size_t{1} << cols) - 2;
}

void BasSpec::validate() const {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("BAS dimensions must be positive");
    }
    if (rows * cols > kMaxQubits) {
        throw std::invalid_argument("BAS image of " + std::to_string(rows * cols) + " pixels exceeds " +
                                    std::to_string(kMaxQubits) + " qubits");
    }
}

BitString encode_image(const BasSpec &spec, const Image &image) {
    spec.validate();
    if (image.size() != spec.rows) {
        throw std::invalid_argument("image has " + std::to_string(image.size()) + " rows, expected " +
                                    std::to_string(spec.rows));
    }
    std::uint64_t value = 0;
    for (const auto &row : image) {
        if (row.size() != spec.cols) {
            throw std::invalid_argument("image row has " + std::to_string(row.size()) + " pixels, expected " +
                                        std::to_string(spec.cols));
        }
        for (bool dark : row) {
            value = (value << 1) | (dark ? 1u : 0u);
        }
    }
    return BitString(spec.n_qubits(), value);
}

Image decode_image(const BasSpec &spec, const BitString &bits) {
    spec.validate();
    if (bits.width != spec.n_qubits()) {
        throw std::invalid_argument("bitstring width does not match image size");
    }
    Image image(spec.rows, std::vector<bool>(spec.cols));
    for (std::size_t r = 0; r < spec.rows; ++r) {
        for (std::size_t c = 0; c < spec.cols; ++c) {
            image[r][c] = bits.bit(r * spec.cols + c);
        }
    }
    return image;
}

bool is_bar_or_stripe(const Image &image) {
    bool rows_constant = true;
    bool cols_constant = true;
    for (std::size_t r = 0; r < image.size(); ++r) {
        for (std::size_t c = 0; c < image[r].size(); ++c) {
            rows_constant = rows_constant && image[r][c] == image[r][0];
            cols_constant = cols_constant && image[r][c] == image[0][c];
        }
    }
    return rows_constant || cols_constant;
}

std::vector<BitString> bas_patterns(const BasSpec &spec) {
    spec.validate();
    std::set<std::uint64_t> values;
    // Each row constant: one choice per row.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.rows); ++mask) {
        Image image(spec.rows, std::vector<bool>(spec.cols));
        for (std::size_t r = 0; r < spec.rows; ++r) {
            const bool dark = (mask >> r) & 1u;
            image[r].assign(spec.cols, dark);
        }
        values.insert(encode_image(spec, image).value);
    }
    // Each column constant.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.cols); ++mask) {
        Image image(spec.rows, std::vector<bool>(spec.cols));
        for (std::size_t r = 0; r < spec.rows; ++r) {
            for (std::size_t c = 0; c < spec.cols; ++c) {
                image[r][c] = (mask >> c) & 1u;
            }
        }
        values.insert(encode_image(spec, image).value);
    }
    std::vector<BitString> out;
    out.reserve(values.size());
    for (std::uint64_t v : values) {
        out.emplace_back(spec.n_qubits(), v);
    }
    return out;
}

Distribution bas_target_distribution(const BasSpec &spec) {
    const auto patterns = bas_patterns(spec);
    std::vector<double> probs(state_space_size(spec.n_qubits()), 0.0);
    const double weight = 1.0 / static_cast<double>(patterns.size());
    for (const auto &p : patterns) {
        probs[p.value] = weight;
    }
    return Distribution(spec.n_qubits(), std::move(probs));
}

std::string format_patterns(const std::vector<BitString> &patterns) {
    std::string out;
    for (const auto &p : patterns) {
        out += p.format();
        out += '\n';
    }
    return out;
}

} // namespace ddqcl
