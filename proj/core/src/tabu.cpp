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

#include "nsp/tabu.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "nsp/error.hpp"
#include "nsp/exact.hpp"
#include "parallel.hpp"

namespace nsp {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMoveEps = 1e-12;
constexpr std::size_t kExactBlockLimit = 20;
constexpr std::uint64_t kRestartStreamBase = 0x100;
constexpr std::uint64_t kDecomposeStream = 0x200;

struct RestartResult {
  BitVector best;
  double energy = 0.0;
  bool truncated = false;
};

BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, rng() >> 63);
  return x;
}

BitVector perturb(BitVector x, double fraction, std::mt19937_64& rng) {
  const std::size_t n = x.size();
  if (n == 0) return x;
  const auto flips = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))), 1, n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // Partial Fisher-Yates: the first `flips` entries are a uniform sample.
  for (std::size_t k = 0; k < flips; ++k) {
    const auto r = k + detail::uniform_below(rng, n - k);
    std::swap(idx[k], idx[r]);
    x.flip(idx[k]);
  }
  return x;
}

std::vector<double> deltas_at(const SparseModel& m, const BitVector& x) {
  std::vector<double> field(m.diag);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t k = m.row_begin[i]; k < m.row_begin[i + 1]; ++k) field[m.col[k]] += m.val[k];
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x[i]) field[i] = -field[i];
  }
  return field;
}

RestartResult run_restart(const QuboProblem& p, const SparseModel& m, BitVector x,
                          const TabuConfig& cfg, std::size_t stall, std::mt19937_64& rng,
                          Clock::time_point deadline) {
  const std::size_t n = m.size();
  const std::size_t tenure = std::min(cfg.tenure, n > 0 ? n - 1 : 0);
  std::vector<double> delta = deltas_at(m, x);
  std::vector<std::size_t> tabu_until(n, 0);

  double e = energy(p, x);
  RestartResult out{x, e, false};
  const bool has_target = cfg.target_energy.has_value();
  const double target = cfg.target_energy.value_or(0.0);
  if (has_target && e <= target + kInternalTolerance) return out;

  std::size_t since_improve = 0;
  for (std::size_t iter = 0; since_improve < stall && n > 0; ++iter) {
    std::size_t move = n;
    double move_delta = 0.0;
    std::uint64_t ties = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = delta[i];
      const bool allowed = tabu_until[i] <= iter || e + d < out.energy - kMoveEps;
      if (!allowed) continue;
      if (move == n || d < move_delta - kMoveEps) {
        move = i;
        move_delta = d;
        ties = 1;
      } else if (d <= move_delta + kMoveEps && detail::uniform_below(rng, ++ties) == 0) {
        move = i;
      }
    }
    if (move == n) break;

    const bool now_set = !x[move];
    x.flip(move);
    e += delta[move];
    delta[move] = -delta[move];
    const double sign = now_set ? 1.0 : -1.0;
    for (std::size_t k = m.row_begin[move]; k < m.row_begin[move + 1]; ++k) {
      const std::size_t j = m.col[k];
      delta[j] += (x[j] ? -1.0 : 1.0) * m.val[k] * sign;
    }
    tabu_until[move] = iter + 1 + tenure;

    if (e < out.energy - kMoveEps) {
      // Resync before trusting it: rounding in the running sums can otherwise
      // fake an endless series of tiny improvements.
      e = energy(p, x);
      delta = deltas_at(m, x);
    }
    if (e < out.energy - kMoveEps) {
      out.energy = e;
      out.best = x;
      since_improve = 0;
      if (has_target && e <= target + kInternalTolerance) break;
    } else {
      ++since_improve;
    }
    if ((iter & 0xFF) == 0xFF && Clock::now() >= deadline) {
      out.truncated = true;
      break;
    }
  }
  out.energy = energy(p, out.best);
  return out;
}

Clock::time_point deadline_after(double seconds) {
  const auto budget = std::chrono::duration<double>(seconds);
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
}

double seconds_left(Clock::time_point deadline) {
  return std::chrono::duration<double>(deadline - Clock::now()).count();
}

}  // namespace

void TabuConfig::validate() const {
  if (tenure < 1) throw ConfigError("tabu tenure must be >= 1");
  if (max_restarts < 1) throw ConfigError("tabu max_restarts must be >= 1");
  if (restarts_per_round < 1) throw ConfigError("tabu restarts_per_round must be >= 1");
  if (subproblem_size < 1) throw ConfigError("tabu subproblem_size must be >= 1");
  if (!(perturbation > 0.0 && perturbation <= 1.0)) {
    throw ConfigError("tabu perturbation must lie in (0, 1]");
  }
  if (!(time_budget > 0.0)) throw ConfigError("tabu time_budget must be > 0 seconds");
}

nlohmann::json TabuConfig::to_json() const {
  nlohmann::json j;
  j["tenure"] = tenure;
  j["max_restarts"] = max_restarts;
  j["restarts_per_round"] = restarts_per_round;
  j["stall_moves"] = stall_moves;
  j["perturbation"] = perturbation;
  j["subproblem_size"] = subproblem_size;
  j["time_budget"] = time_budget;
  j["target_energy"] = target_energy ? nlohmann::json(*target_energy) : nlohmann::json(nullptr);
  j["seed"] = seed;
  return j;
}

TabuConfig TabuConfig::from_json(const nlohmann::json& j) {
  TabuConfig c;
  c.tenure = j.value("tenure", c.tenure);
  c.max_restarts = j.value("max_restarts", c.max_restarts);
  c.restarts_per_round = j.value("restarts_per_round", c.restarts_per_round);
  c.stall_moves = j.value("stall_moves", c.stall_moves);
  c.perturbation = j.value("perturbation", c.perturbation);
  c.subproblem_size = j.value("subproblem_size", c.subproblem_size);
  c.time_budget = j.value("time_budget", c.time_budget);
  if (j.contains("target_energy") && !j["target_energy"].is_null()) {
    c.target_energy = j["target_energy"].get<double>();
  }
  c.seed = j.value("seed", c.seed);
  return c;
}

SampleSet tabu_solve(const QuboProblem& p, const TabuConfig& cfg, std::size_t jobs,
                     const std::optional<BitVector>& initial) {
  cfg.validate();
  const std::size_t n = p.num_vars();
  if (initial && initial->size() != n) {
    throw DimensionError("initial state has " + std::to_string(initial->size()) +
                         " bits, problem has " + std::to_string(n));
  }
  const SparseModel model = SparseModel::from(p);
  const std::size_t stall = cfg.stall_moves ? cfg.stall_moves : std::max<std::size_t>(1000, 20 * n);
  const auto deadline = deadline_after(cfg.time_budget);

  SampleSet out;
  out.solver = "tabu";
  out.seed = cfg.seed;
  out.schedule = cfg.to_json();
  out.fingerprint = fingerprint(p);

  std::vector<Sample> reads;
  std::optional<Sample> incumbent;
  std::size_t done = 0;
  for (std::uint64_t round = 0; done < cfg.max_restarts; ++round) {
    const std::size_t batch = std::min(cfg.restarts_per_round, cfg.max_restarts - done);
    std::vector<RestartResult> results(batch);
    detail::parallel_for(batch, jobs, [&](std::size_t k) {
      auto rng = detail::make_stream(cfg.seed, kRestartStreamBase + round, k);
      BitVector start;
      if (incumbent) {
        start = perturb(incumbent->bits, cfg.perturbation, rng);
      } else if (k == 0 && initial) {
        start = *initial;
      } else {
        start = random_bits(n, rng);
      }
      results[k] = run_restart(p, model, std::move(start), cfg, stall, rng, deadline);
    });

    bool truncated = false;
    for (auto& r : results) {
      truncated = truncated || r.truncated;
      if (!incumbent || r.energy < incumbent->energy - kMoveEps) incumbent = Sample{r.best, r.energy, 1};
      reads.push_back({std::move(r.best), r.energy, 1});
    }
    done += batch;
    out.best_trace.push_back(incumbent->energy);

    if (truncated || Clock::now() >= deadline) {
      out.truncated = truncated || done < cfg.max_restarts;
      break;
    }
    if (cfg.target_energy && incumbent->energy <= *cfg.target_energy + kInternalTolerance) break;
  }
  out.num_reads = reads.size();
  out.samples = aggregate_reads(std::move(reads));
  return out;
}

ClampedProblem clamp(const QuboProblem& p, std::span<const std::size_t> free_vars,
                     const BitVector& assignment) {
  const std::size_t n = p.num_vars();
  if (assignment.size() != n) {
    throw DimensionError("clamp: assignment has " + std::to_string(assignment.size()) +
                         " bits, problem has " + std::to_string(n));
  }
  constexpr std::size_t kClamped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kClamped);
  for (std::size_t k = 0; k < free_vars.size(); ++k) {
    const std::size_t v = free_vars[k];
    if (v >= n) throw DimensionError("clamp: free variable " + std::to_string(v) + " out of range");
    if (pos[v] != kClamped) throw ConfigError("clamp: free variable " + std::to_string(v) + " repeated");
    pos[v] = k;
  }

  std::vector<QuboTerm> terms;
  double offset = p.offset();
  for (const auto& t : p.terms()) {
    const bool fi = pos[t.i] != kClamped;
    const bool fj = pos[t.j] != kClamped;
    if (fi && fj) {
      terms.push_back({pos[t.i], pos[t.j], t.value});
    } else if (fi) {
      if (assignment[t.j]) terms.push_back({pos[t.i], pos[t.i], t.value});
    } else if (fj) {
      if (assignment[t.i]) terms.push_back({pos[t.j], pos[t.j], t.value});
    } else if (assignment[t.i] && assignment[t.j]) {
      offset += t.value;
    }
  }
  return {QuboProblem(free_vars.size(), std::move(terms), offset),
          std::vector<std::size_t>(free_vars.begin(), free_vars.end())};
}

void merge(BitVector& assignment, std::span<const std::size_t> free_vars,
           const BitVector& sub_assignment) {
  if (sub_assignment.size() != free_vars.size()) {
    throw DimensionError("merge: sub-assignment size does not match free variable count");
  }
  for (std::size_t k = 0; k < free_vars.size(); ++k) {
    assignment.set(free_vars[k], sub_assignment[k] != 0);
  }
}

std::vector<double> flip_deltas(const QuboProblem& p, const BitVector& x) {
  if (x.size() != p.num_vars()) throw DimensionError("flip_deltas: assignment length mismatch");
  return deltas_at(SparseModel::from(p), x);
}

SampleSet decompose_solve(const QuboProblem& p, const TabuConfig& cfg, std::size_t jobs) {
  cfg.validate();
  const std::size_t n = p.num_vars();
  if (n <= cfg.subproblem_size) return tabu_solve(p, cfg, jobs);

  const auto deadline = deadline_after(cfg.time_budget);
  SampleSet start = tabu_solve(p, cfg, jobs);
  BitVector x = start.best().bits;
  double e = energy(p, x);
  bool truncated = start.truncated;

  SampleSet out;
  out.solver = "decompose";
  out.seed = cfg.seed;
  out.schedule = cfg.to_json();
  out.fingerprint = fingerprint(p);
  out.best_trace.push_back(e);

  const auto reached_target = [&] {
    return cfg.target_energy && e <= *cfg.target_energy + kInternalTolerance;
  };

  for (std::uint64_t pass = 0; !truncated && !reached_target(); ++pass) {
    const std::vector<double> delta = flip_deltas(p, x);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(delta[a]) > std::abs(delta[b]);
    });

    bool improved = false;
    for (std::size_t b = 0; b < n; b += cfg.subproblem_size) {
      const double left = seconds_left(deadline);
      if (left <= 0.0) {
        truncated = true;
        break;
      }
      const std::span<const std::size_t> block(order.data() + b,
                                               std::min(cfg.subproblem_size, n - b));
      const ClampedProblem cl = clamp(p, block, x);
      BitVector current(block.size());
      for (std::size_t k = 0; k < block.size(); ++k) current.set(k, x[block[k]] != 0);

      BitVector candidate;
      if (block.size() <= kExactBlockLimit) {
        candidate = enumerate_ground_states(cl.sub, kExactBlockLimit, 1).states.front();
      } else {
        TabuConfig sub = cfg;
        sub.seed = cfg.seed ^ (kDecomposeStream + pass * 0x9E3779B97F4A7C15ULL + b);
        sub.max_restarts = cfg.restarts_per_round;
        sub.stall_moves = 0;
        sub.time_budget = left;
        sub.target_energy.reset();
        const SampleSet r = tabu_solve(cl.sub, sub, jobs, current);
        truncated = truncated || r.truncated;
        candidate = r.best().bits;
      }
      if (energy(cl.sub, candidate) < energy(cl.sub, current) - kInternalTolerance) {
        merge(x, block, candidate);
        e = energy(p, x);
        improved = true;
        if (reached_target()) break;
      }
    }
    out.best_trace.push_back(e);
    if (!improved) break;
  }

  out.samples = {Sample{x, e, 1}};
  out.num_reads = 1;
  out.truncated = truncated;
  return out;
}

}  // namespace nsp
