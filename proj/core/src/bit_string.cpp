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

#include "ddqcl/bit_string.hpp"

#include <stdexcept>

namespace ddqcl {

BitString::BitString(std::size_t width, std::uint64_t value) : width(width), value(value) {
    if (width == 0 || width > 64) {
        throw std::invalid_argument("BitString width must be in [1, 64], got " + std::to_string(width));
    }
    if (width < 64 && (value >> width) != 0) {
        throw std::invalid_argument(
            "BitString value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.empty() || text.size() > 64) {
        throw std::invalid_argument("BitString text must have 1..64 characters");
    }
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString text contains non-binary character '" + std::string(1, c) + "'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(text.size(), value);
}

std::string BitString::format() const {
    std::string out(width, '0');
    for (std::size_t q = 0; q < width; ++q) {
        if (bit(q)) {
            out[q] = '1';
        }
    }
    return out;
}

bool BitString::bit(std::size_t qubit) const {
    if (qubit >= width) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside width " + std::to_string(width));
    }
    return (value & qubit_mask(width, qubit)) != 0;
}

} // namespace ddqcl
