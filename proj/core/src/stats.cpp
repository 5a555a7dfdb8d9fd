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

#include "nsp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "nsp/error.hpp"
#include "nsp/exact.hpp"

namespace nsp {

double satisfaction_frequency(const NspInstance& inst, const SampleSet& samples) {
  std::size_t total = 0;
  std::size_t satisfied = 0;
  for (const auto& s : samples.samples) {
    total += s.count;
    if (is_fully_satisfying(inst, s.bits)) satisfied += s.count;
  }
  if (total == 0) throw UndefinedStatisticError("satisfaction_frequency: no samples");
  return static_cast<double>(satisfied) / static_cast<double>(total);
}

HammingStats hamming_stats(const SampleSet& samples, std::span<const BitVector> reference) {
  if (reference.empty()) throw UndefinedStatisticError("hamming_stats: empty reference set");
  std::size_t total = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& s : samples.samples) {
    std::size_t nearest = std::numeric_limits<std::size_t>::max();
    for (const auto& r : reference) nearest = std::min(nearest, hamming_distance(s.bits, r));
    const double d = static_cast<double>(nearest);
    const double w = static_cast<double>(s.count);
    total += s.count;
    sum += w * d;
    sum_sq += w * d * d;
  }
  if (total == 0) throw UndefinedStatisticError("hamming_stats: no samples");
  const double n = static_cast<double>(total);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  return {mean, std::sqrt(var)};
}

std::string_view to_string(ReferenceKind kind) noexcept {
  return kind == ReferenceKind::exact ? "exact" : "best-found";
}

EvaluationReport evaluate(const NspInstance& inst, const SampleSet& samples,
                          std::span<const BitVector> reference, ReferenceKind kind) {
  EvaluationReport r;
  r.satisfaction_frequency = satisfaction_frequency(inst, samples);
  const auto h = hamming_stats(samples, reference);
  r.mean_hamming = h.mean;
  r.std_hamming = h.stddev;
  r.mean_energy = samples.mean_energy();
  r.best_energy = samples.best().energy;
  r.reference_kind = kind;
  r.reference_size = reference.size();
  for (const auto& s : samples.samples) r.sample_count += s.count;
  return r;
}

std::vector<BitVector> best_found_reference(const SampleSet& samples) {
  if (samples.empty()) throw UndefinedStatisticError("best_found_reference: no samples");
  const double best = samples.best().energy;
  std::vector<BitVector> out;
  for (const auto& s : samples.samples) {
    if (s.energy <= best + kInternalTolerance) out.push_back(s.bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SweepRow> sweep_experiment(std::span<const std::size_t> nurse_counts,
                                       std::span<const std::size_t> day_counts,
                                       const SweepOptions& options) {
  const InstanceFactory make = options.make_instance ? options.make_instance : make_paper_base;
  std::vector<SweepRow> rows;
  for (std::size_t n : nurse_counts) {
    for (std::size_t d : day_counts) {
      SweepRow row;
      row.nurses = n;
      row.days = d;
      row.engine = options.engine.engine;
      row.seed = options.engine.seed;
      try {
        const NspInstance inst = make(n, d);
        const QuboProblem qubo = build_qubo(inst);
        const SampleSet samples = run_engine(qubo, options.engine);
        row.num_reads = samples.num_reads;
        if (qubo.num_vars() <= options.engine.exact_cap) {
          const auto ground =
              options.engine.engine == Engine::exact
                  ? GroundStateSet{samples.best().energy, best_found_reference(samples), 0}
                  : enumerate_ground_states(qubo, options.engine.exact_cap, options.engine.jobs);
          row.report = evaluate(inst, samples, ground.states, ReferenceKind::exact);
        } else {
          const auto ref = best_found_reference(samples);
          row.report = evaluate(inst, samples, ref, ReferenceKind::best_found);
        }
      } catch (const std::exception& e) {
        row.report.reset();
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "N,D,engine,num_reads,satisfaction_frequency,mean_hamming,std_hamming,"
         "mean_energy,best_energy,reference_kind,seed\n";
  for (const auto& r : rows) {
    out << r.nurses << ',' << r.days << ',' << to_string(r.engine) << ',' << r.num_reads << ',';
    if (r.report) {
      const auto& e = *r.report;
      out << format_number(e.satisfaction_frequency) << ',' << format_number(e.mean_hamming) << ','
          << format_number(e.std_hamming) << ',' << format_number(e.mean_energy) << ','
          << format_number(e.best_energy) << ',' << to_string(e.reference_kind);
    } else {
      out << ",,,,,failed";
    }
    out << ',' << r.seed << '\n';
  }
}

}  // namespace nsp
