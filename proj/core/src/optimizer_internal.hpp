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

#include <vector>

#include "ddqcl/optimizer.hpp"

namespace ddqcl::detail {

struct Candidate {
    std::vector<double> params;
    double cost;
    /// ZOO search state: half-width of the box sampled around this point,
    /// consecutive failures since the last box update, and the cost at the
    /// start of the current progress window with the samples drawn since.
    double radius = 0.0;
    std::size_t failures = 0;
    double checkpoint = 0.0;
    std::size_t window_samples = 0;
};

/// Best-first list of at most `capacity` candidates.
class EliteSet {
  public:
    explicit EliteSet(std::size_t capacity) : capacity_(capacity) {}

    /// Keeps the candidate if there is room or it beats the worst member.
    /// Returns true when it was kept.
    bool offer(Candidate candidate);
    /// Re-sorts after members' costs were refreshed in place.
    void resort();

    std::size_t size() const { return items_.size(); }
    std::size_t capacity() const { return capacity_; }
    const Candidate &best() const { return items_.front(); }
    const Candidate &worst() const { return items_.back(); }
    std::vector<Candidate> &items() { return items_; }
    const std::vector<Candidate> &items() const { return items_; }

  private:
    std::size_t capacity_;
    std::vector<Candidate> items_;
};

/// Evaluates `count` uniform random points in draw order.
std::vector<Candidate> random_population(CostContext &ctx, std::size_t count, Rng &rng);

Rng optimizer_stream(const CostContext &ctx, OptimizerKind kind);

} // namespace ddqcl::detail
