// Copyright 2026 The nsp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nsp/bit_vector.hpp"
#include "nsp/qubo.hpp"
#include "nsp/sample_set.hpp"

namespace nsp {

inline constexpr std::size_t kExactVariableCap = 28;
// Upper bound on the size of a reported degenerate set.
inline constexpr std::size_t kMaxGroundStates = std::size_t{1} << 22;

// Minimum energy and every assignment attaining it (within 1e-9), sorted by
// ascending bit-vector value.
struct GroundStateSet {
  double energy = 0.0;
  std::vector<BitVector> states;
  std::uint64_t search_space_size = 0;

  friend bool operator==(const GroundStateSet&, const GroundStateSet&) = default;
};

// Exhaustive Gray-code enumeration of all 2^n assignments. The space is split
// by high-order bit prefixes across `jobs` workers; output does not depend on
// the worker count.
//
// Throws CapacityError when p.num_vars() > max_vars or when the degenerate set
// exceeds kMaxGroundStates.
GroundStateSet enumerate_ground_states(const QuboProblem& p,
                                       std::size_t max_vars = kExactVariableCap,
                                       std::size_t jobs = 1);

using StatePredicate = std::function<bool(const BitVector&)>;

// Minimum over the assignments accepted by `predicate`; std::nullopt when no
// assignment is accepted. The predicate may be called concurrently.
std::optional<GroundStateSet> min_energy_under(const QuboProblem& p,
                                               const StatePredicate& predicate,
                                               std::size_t max_vars = kExactVariableCap,
                                               std::size_t jobs = 1);

// One sample per ground state, count 1 each.
SampleSet to_sample_set(const GroundStateSet& ground, const QuboProblem& p);

}  // namespace nsp
