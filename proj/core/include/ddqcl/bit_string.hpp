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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ddqcl {

/// Largest register the simulator accepts.
inline constexpr std::size_t kMaxQubits = 20;

/// Bit mask selecting qubit `qubit` in an `n_qubits`-wide basis index.
///
/// Qubit 0 is the most significant bit, so the textual form "q1q2...qN"
/// reads left to right in qubit order.
constexpr std::uint64_t qubit_mask(std::size_t n_qubits, std::size_t qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

/// A fixed-width measurement outcome / basis-state label.
struct BitString {
    std::size_t width = 0;
    std::uint64_t value = 0;

    BitString() = default;
    BitString(std::size_t width, std::uint64_t value);

    /// Parses "0101"-style text. Throws std::invalid_argument on any other
    /// character or on an empty / over-long string.
    static BitString parse(std::string_view text);

    std::string format() const;

    /// Value of qubit `qubit` (0 = leftmost character).
    bool bit(std::size_t qubit) const;

    friend auto operator<=>(const BitString &, const BitString &) = default;
};

} // namespace ddqcl
