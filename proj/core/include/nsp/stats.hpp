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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsp/bit_vector.hpp"
#include "nsp/engine.hpp"
#include "nsp/nsp_model.hpp"
#include "nsp/sample_set.hpp"

namespace nsp {

// Multiplicity-weighted fraction of samples that satisfy every hard and
// duty-target constraint. Throws UndefinedStatisticError on an empty set.
double satisfaction_frequency(const NspInstance& inst, const SampleSet& samples);

struct HammingStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

// Distance of each sample to its nearest reference state, then the weighted
// mean and population standard deviation over all reads.
HammingStats hamming_stats(const SampleSet& samples, std::span<const BitVector> reference);

enum class ReferenceKind { exact, best_found };
std::string_view to_string(ReferenceKind kind) noexcept;

struct EvaluationReport {
  double satisfaction_frequency = 0.0;
  double mean_hamming = 0.0;
  double std_hamming = 0.0;
  double mean_energy = 0.0;
  double best_energy = 0.0;
  ReferenceKind reference_kind = ReferenceKind::exact;
  std::size_t reference_size = 0;
  std::size_t sample_count = 0;
};

EvaluationReport evaluate(const NspInstance& inst, const SampleSet& samples,
                          std::span<const BitVector> reference, ReferenceKind kind);

// The states of `samples` within 1e-9 of its lowest energy.
std::vector<BitVector> best_found_reference(const SampleSet& samples);

using InstanceFactory = std::function<NspInstance(std::size_t nurses, std::size_t days)>;

struct SweepOptions {
  EngineConfig engine;
  // Defaults to make_paper_base.
  InstanceFactory make_instance;
};

struct SweepRow {
  std::size_t nurses = 0;
  std::size_t days = 0;
  Engine engine = Engine::forward;
  std::size_t num_reads = 0;
  std::uint64_t seed = 0;
  std::optional<EvaluationReport> report;  // empty when the cell failed
  std::string error;
};

// One row per (N, D), N outer. Cells with at most engine.exact_cap variables
// are scored against the exact ground set, larger ones against the best
// sampled states. A failing cell yields a row with an error and no report.
std::vector<SweepRow> sweep_experiment(std::span<const std::size_t> nurse_counts,
                                       std::span<const std::size_t> day_counts,
                                       const SweepOptions& options);

// Header plus one line per row:
// N,D,engine,num_reads,satisfaction_frequency,mean_hamming,std_hamming,
// mean_energy,best_energy,reference_kind,seed
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace nsp
