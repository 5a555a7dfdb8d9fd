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
#include <string_view>

#include <nlohmann/json.hpp>

#include "nsp/bit_vector.hpp"
#include "nsp/qubo.hpp"
#include "nsp/sample_set.hpp"

namespace nsp {

// Anneal durations are specified in sweeps; physical schedule times convert at
// this fixed rate.
inline constexpr double kSweepsPerMicrosecond = 10.0;

constexpr std::size_t microseconds_to_sweeps(double us) {
  return static_cast<std::size_t>(us * kSweepsPerMicrosecond + 0.5);
}

enum class AnnealMode { forward, reverse };

// Temperature schedule for the Metropolis sampler.
//
// The anneal fraction s in [0, 1] maps to a temperature by geometric
// interpolation, T(s) = T_min * (T_max / T_min)^(1 - s): s = 0 is hottest and
// s = 1 is the problem-only end point.
//
// Forward: total_sweeps sweeps with s rising linearly 0 -> 1.
// Reverse: ramp_sweeps with s falling 1 -> s_target, hold_sweeps at
// s_target, ramp_sweeps back to s = 1. With s_target = 1 no sweeps run.
struct AnnealSchedule {
  AnnealMode mode = AnnealMode::forward;
  std::size_t total_sweeps = microseconds_to_sweeps(200.0);
  double s_target = 0.8;
  std::size_t ramp_sweeps = microseconds_to_sweeps(2.0);
  std::size_t hold_sweeps = microseconds_to_sweeps(10.0);
  // Unset means default_t_max(problem).
  std::optional<double> t_max;
  double t_min = 0.05;
  std::uint64_t seed = 0;

  static AnnealSchedule forward_default(std::uint64_t seed = 0);
  static AnnealSchedule reverse_default(std::uint64_t seed = 0);

  // Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
  static AnnealSchedule from_json(const nlohmann::json& j);

  friend bool operator==(const AnnealSchedule&, const AnnealSchedule&) = default;
};

// 2 * max_i (|h_i| + sum_j |J_ij|): twice the largest possible local field.
double default_t_max(const IsingProblem& p);

double anneal_temperature(double s, double t_min, double t_max);

// num_reads independent chains from uniformly random spins. Each read uses a
// PRNG stream derived from (seed, read index), so the result does not depend on
// `jobs`. Throws ConfigError unless sched.mode is forward.
SampleSet forward_anneal(const IsingProblem& p, const AnnealSchedule& sched,
                         std::size_t num_reads, std::size_t jobs = 1);

// num_reads chains started from `initial`. Throws ConfigError unless
// sched.mode is reverse, DimensionError if initial has the wrong length.
SampleSet reverse_anneal(const IsingProblem& p, const BitVector& initial,
                         const AnnealSchedule& sched, std::size_t num_reads,
                         std::size_t jobs = 1);

enum class SelectionPolicy { uniform_random, lowest_energy };

std::string_view to_string(SelectionPolicy policy) noexcept;
// Accepts "uniform-random"/"uniform" and "lowest-energy"/"lowest".
SelectionPolicy parse_selection_policy(std::string_view text);

// Reverse-anneals states drawn from `candidates`: lowest_energy always starts
// from the best candidate, uniform_random draws one per read weighted by
// multiplicity. Throws ConfigError on empty candidates.
SampleSet refine(const IsingProblem& p, const SampleSet& candidates,
                 const AnnealSchedule& sched, std::size_t num_reads,
                 SelectionPolicy policy, std::size_t jobs = 1);

}  // namespace nsp
