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
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "nsp/bit_vector.hpp"
#include "nsp/qubo.hpp"
#include "nsp/sample_set.hpp"

namespace nsp {

struct TabuConfig {
  std::size_t tenure = 10;
  std::size_t max_restarts = 16;
  // Restarts launched together per round; each perturbs the round's incumbent.
  std::size_t restarts_per_round = 4;
  // Non-improving moves tolerated before a restart ends; 0 means
  // max(1000, 20 * num_vars).
  std::size_t stall_moves = 0;
  // Fraction of bits flipped when perturbing the incumbent for a restart.
  double perturbation = 0.1;
  std::size_t subproblem_size = 40;
  double time_budget = 60.0;  // seconds
  // Stop as soon as an assignment at or below this energy is found.
  std::optional<double> target_energy;
  std::uint64_t seed = 0;

  // Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
  static TabuConfig from_json(const nlohmann::json& j);

  friend bool operator==(const TabuConfig&, const TabuConfig&) = default;
};

// Single-bit-flip tabu search with aspiration, restarted from perturbations of
// the incumbent. Samples hold the final best of each restart; a run cut short
// by the time budget sets `truncated`. `initial`, when given, seeds the first
// restart of the first round.
SampleSet tabu_solve(const QuboProblem& p, const TabuConfig& cfg, std::size_t jobs = 1,
                     const std::optional<BitVector>& initial = std::nullopt);

// Sub-QUBO over `free_vars` with every other variable clamped to its value in
// `assignment`. Its offset absorbs the clamped part, so
// energy(sub, x_free) == energy(p, merged) for every x_free.
struct ClampedProblem {
  QuboProblem sub;
  std::vector<std::size_t> free_vars;
};

ClampedProblem clamp(const QuboProblem& p, std::span<const std::size_t> free_vars,
                     const BitVector& assignment);

// Writes sub-assignment values back into `assignment`.
void merge(BitVector& assignment, std::span<const std::size_t> free_vars,
           const BitVector& sub_assignment);

// Flip deltas of every variable at `x`.
std::vector<double> flip_deltas(const QuboProblem& p, const BitVector& x);

// Decomposition solver: start from tabu_solve on the whole problem, then in
// passes order variables by |flip delta| (largest first), solve consecutive
// blocks of subproblem_size variables with the rest clamped (exactly when the
// block has at most 20 variables, by tabu otherwise), and keep improvements.
// Stops after a pass without improvement. Falls back to tabu_solve when
// num_vars <= subproblem_size.
SampleSet decompose_solve(const QuboProblem& p, const TabuConfig& cfg, std::size_t jobs = 1);

}  // namespace nsp
