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

#include "nsp/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "nsp/error.hpp"
#include "parallel.hpp"

namespace nsp {
namespace {

// Slack used while pruning with incrementally updated energies. Candidates are
// re-evaluated exactly before the 1e-9 degeneracy cut.
constexpr double kPruneSlack = 1e-7;
constexpr std::size_t kMaxPrefixBits = 6;

struct ChunkResult {
  double energy = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> masks;  // candidates with exact energies below
  std::vector<double> energies;
};

double exact_energy(const QuboProblem& p, std::uint64_t mask) {
  double e = p.offset();
  for (const auto& t : p.terms()) {
    if (((mask >> t.i) & 1U) && ((mask >> t.j) & 1U)) e += t.value;
  }
  return e;
}

ChunkResult scan_chunk(const QuboProblem& p, const SparseModel& m, std::uint64_t prefix,
                       std::size_t low_bits, const StatePredicate* predicate) {
  const std::size_t n = m.size();
  std::uint64_t x = prefix << low_bits;

  // field[i] = c_ii + sum_j c_ij x_j, so flipping i changes E by (1 - 2 x_i) field[i].
  std::vector<double> field(m.diag);
  for (std::size_t i = 0; i < n; ++i) {
    if (!((x >> i) & 1U)) continue;
    for (std::size_t k = m.row_begin[i]; k < m.row_begin[i + 1]; ++k) field[m.col[k]] += m.val[k];
  }
  double e = exact_energy(p, x);

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> cand;
  BitVector scratch;

  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t t = 0;; ++t) {
    if (e <= best + kPruneSlack) {
      bool accept = true;
      if (predicate) {
        scratch = BitVector::from_mask(x, n);
        accept = (*predicate)(scratch);
      }
      if (accept) {
        if (e < best - kPruneSlack) cand.clear();
        if (e < best) best = e;
        cand.push_back(x);
        if (cand.size() > kMaxGroundStates) {
          throw CapacityError("degenerate ground set exceeds " +
                              std::to_string(kMaxGroundStates) + " states");
        }
      }
    }
    if (t + 1 == steps) break;
    const auto i = static_cast<std::size_t>(std::countr_zero(t + 1));
    const bool was_set = (x >> i) & 1U;
    e += was_set ? -field[i] : field[i];
    x ^= std::uint64_t{1} << i;
    const double sign = was_set ? -1.0 : 1.0;
    for (std::size_t k = m.row_begin[i]; k < m.row_begin[i + 1]; ++k) {
      field[m.col[k]] += sign * m.val[k];
    }
  }

  ChunkResult out;
  for (auto mask : cand) {
    const double exact = exact_energy(p, mask);
    out.masks.push_back(mask);
    out.energies.push_back(exact);
    out.energy = std::min(out.energy, exact);
  }
  return out;
}

std::optional<GroundStateSet> enumerate(const QuboProblem& p, std::size_t max_vars,
                                        std::size_t jobs, const StatePredicate* predicate) {
  const std::size_t n = p.num_vars();
  if (n > max_vars) {
    throw CapacityError("exact enumeration limited to " + std::to_string(max_vars) +
                        " variables; problem has " + std::to_string(n));
  }
  if (n >= 63) throw CapacityError("exact enumeration cannot address 2^" + std::to_string(n));

  const SparseModel model = SparseModel::from(p);
  const std::size_t prefix_bits = std::min(n, kMaxPrefixBits);
  const std::size_t low_bits = n - prefix_bits;
  const std::size_t chunks = std::size_t{1} << prefix_bits;

  std::vector<ChunkResult> results(chunks);
  detail::parallel_for(chunks, jobs, [&](std::size_t c) {
    results[c] = scan_chunk(p, model, c, low_bits, predicate);
  });

  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : results) best = std::min(best, r.energy);
  if (best == std::numeric_limits<double>::infinity()) return std::nullopt;

  std::vector<std::uint64_t> masks;
  for (const auto& r : results) {
    for (std::size_t k = 0; k < r.masks.size(); ++k) {
      if (r.energies[k] <= best + kInternalTolerance) masks.push_back(r.masks[k]);
    }
  }
  if (masks.size() > kMaxGroundStates) {
    throw CapacityError("degenerate ground set exceeds " + std::to_string(kMaxGroundStates) +
                        " states");
  }
  std::sort(masks.begin(), masks.end());

  GroundStateSet out;
  out.energy = best;
  out.search_space_size = std::uint64_t{1} << n;
  out.states.reserve(masks.size());
  for (auto mask : masks) out.states.push_back(BitVector::from_mask(mask, n));
  return out;
}

}  // namespace

GroundStateSet enumerate_ground_states(const QuboProblem& p, std::size_t max_vars,
                                       std::size_t jobs) {
  return *enumerate(p, max_vars, jobs, nullptr);
}

std::optional<GroundStateSet> min_energy_under(const QuboProblem& p,
                                               const StatePredicate& predicate,
                                               std::size_t max_vars, std::size_t jobs) {
  return enumerate(p, max_vars, jobs, &predicate);
}

SampleSet to_sample_set(const GroundStateSet& ground, const QuboProblem& p) {
  SampleSet out;
  out.solver = "exact";
  out.fingerprint = fingerprint(p);
  out.schedule = {{"engine", "exact"},
                  {"search_space_size", ground.search_space_size}};
  for (const auto& s : ground.states) out.samples.push_back({s, energy(p, s), 1});
  out.samples = aggregate_reads(std::move(out.samples));
  out.num_reads = ground.states.size();
  return out;
}

}  // namespace nsp
