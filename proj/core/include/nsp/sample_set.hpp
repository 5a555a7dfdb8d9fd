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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nsp/bit_vector.hpp"

namespace nsp {

struct Sample {
  BitVector bits;
  double energy = 0.0;
  std::size_t count = 1;

  friend bool operator==(const Sample&, const Sample&) = default;
};

// A batch of solver reads with provenance.
//
// Samples are unique by bit-vector and sorted by (energy, bits); the sum of
// counts equals num_reads.
struct SampleSet {
  std::vector<Sample> samples;
  std::size_t num_reads = 0;

  std::string solver;
  std::uint64_t seed = 0;
  // Solver configuration (anneal schedule, tabu config, selection policy...).
  nlohmann::json schedule = nlohmann::json::object();
  std::string fingerprint;
  // Set when a time budget cut the run short; samples hold best-so-far.
  bool truncated = false;

  // Best energy after each outer iteration, for solvers that track one.
  // In-memory diagnostics only; not serialized.
  std::vector<double> best_trace;

  bool empty() const noexcept { return samples.empty(); }
  // Lowest-energy sample. Requires !empty().
  const Sample& best() const;
  // Multiplicity-weighted mean energy. Throws UndefinedStatisticError when
  // empty.
  double mean_energy() const;

  friend bool operator==(const SampleSet& a, const SampleSet& b) {
    return a.samples == b.samples && a.num_reads == b.num_reads &&
           a.solver == b.solver && a.seed == b.seed &&
           a.schedule == b.schedule && a.fingerprint == b.fingerprint &&
           a.truncated == b.truncated;
  }
};

// Collapses per-read results into unique samples with counts, sorted by
// (energy, bits). Equal bit-vectors must carry equal energies.
std::vector<Sample> aggregate_reads(std::vector<Sample> reads);

}  // namespace nsp
