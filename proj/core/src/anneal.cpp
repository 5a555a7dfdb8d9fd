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

#include "nsp/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nsp/error.hpp"
#include "parallel.hpp"

namespace nsp {
namespace {

enum Stream : std::uint64_t { kForwardStream = 1, kReverseStream = 2, kSelectStream = 3 };

// Single-spin-flip Metropolis chain with cached local fields
// field_i = h_i + sum_j J_ij s_j.
class MetropolisChain {
 public:
  MetropolisChain(const SparseModel& model, std::mt19937_64& rng)
      : model_(model), rng_(rng), spins_(model.size()), field_(model.size()) {}

  void reset(const SpinVector& spins) {
    spins_ = spins;
    field_ = model_.diag;
    for (std::size_t i = 0; i < spins_.size(); ++i) {
      for (std::size_t k = model_.row_begin[i]; k < model_.row_begin[i + 1]; ++k) {
        field_[i] += model_.val[k] * spins_[model_.col[k]];
      }
    }
  }

  void randomize() {
    SpinVector s(model_.size());
    for (auto& v : s) v = (rng_() >> 63) ? 1 : -1;
    reset(s);
  }

  // One pass over all spins in index order.
  void sweep(double temperature) {
    const double beta = 1.0 / temperature;
    for (std::size_t i = 0; i < spins_.size(); ++i) {
      const double delta = -2.0 * spins_[i] * field_[i];
      if (delta > 0.0 && detail::uniform01(rng_) >= std::exp(-delta * beta)) continue;
      spins_[i] = static_cast<std::int8_t>(-spins_[i]);
      const double change = 2.0 * spins_[i];
      for (std::size_t k = model_.row_begin[i]; k < model_.row_begin[i + 1]; ++k) {
        field_[model_.col[k]] += change * model_.val[k];
      }
    }
  }

  const SpinVector& spins() const noexcept { return spins_; }

 private:
  const SparseModel& model_;
  std::mt19937_64& rng_;
  SpinVector spins_;
  std::vector<double> field_;
};

double resolved_t_max(const AnnealSchedule& sched, const IsingProblem& p) {
  if (sched.t_max) return *sched.t_max;
  return std::max(default_t_max(p), 2.0 * sched.t_min);
}

void run_forward(MetropolisChain& chain, const AnnealSchedule& sched, double t_max) {
  const std::size_t n = sched.total_sweeps;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 1.0;
    chain.sweep(anneal_temperature(s, sched.t_min, t_max));
  }
}

void run_reverse(MetropolisChain& chain, const AnnealSchedule& sched, double t_max) {
  const double target = sched.s_target;
  if (target >= 1.0) return;
  const std::size_t r = sched.ramp_sweeps;
  for (std::size_t k = 0; k < r; ++k) {
    const double s = 1.0 - (1.0 - target) * static_cast<double>(k + 1) / static_cast<double>(r);
    chain.sweep(anneal_temperature(s, sched.t_min, t_max));
  }
  const double hold_t = anneal_temperature(target, sched.t_min, t_max);
  for (std::size_t k = 0; k < sched.hold_sweeps; ++k) chain.sweep(hold_t);
  for (std::size_t k = 0; k < r; ++k) {
    const double s = target + (1.0 - target) * static_cast<double>(k + 1) / static_cast<double>(r);
    chain.sweep(anneal_temperature(s, sched.t_min, t_max));
  }
}

nlohmann::json effective_schedule(const AnnealSchedule& sched, double t_max) {
  AnnealSchedule copy = sched;
  copy.t_max = t_max;
  return copy.to_json();
}

SampleSet make_set(const IsingProblem& p, std::vector<Sample> reads, std::string solver,
                   const AnnealSchedule& sched, double t_max) {
  SampleSet out;
  out.num_reads = reads.size();
  out.samples = aggregate_reads(std::move(reads));
  out.solver = std::move(solver);
  out.seed = sched.seed;
  out.schedule = effective_schedule(sched, t_max);
  out.fingerprint = fingerprint(p);
  return out;
}

// Reverse-anneals read r from initial_for(r, rng_select).
template <class InitialFor>
std::vector<Sample> reverse_reads(const IsingProblem& p, const AnnealSchedule& sched,
                                  double t_max, std::size_t num_reads, std::size_t jobs,
                                  InitialFor&& initial_for) {
  const SparseModel model = SparseModel::from(p);
  std::vector<Sample> reads(num_reads);
  detail::parallel_for(num_reads, jobs, [&](std::size_t r) {
    const BitVector& start = initial_for(r);
    auto rng = detail::make_stream(sched.seed, kReverseStream, r);
    MetropolisChain chain(model, rng);
    chain.reset(start.to_spins());
    run_reverse(chain, sched, t_max);
    reads[r] = {BitVector::from_spins(chain.spins()), energy(p, chain.spins()), 1};
  });
  return reads;
}

}  // namespace

AnnealSchedule AnnealSchedule::forward_default(std::uint64_t seed) {
  AnnealSchedule s;
  s.mode = AnnealMode::forward;
  s.seed = seed;
  return s;
}

AnnealSchedule AnnealSchedule::reverse_default(std::uint64_t seed) {
  AnnealSchedule s;
  s.mode = AnnealMode::reverse;
  s.s_target = 0.8;
  s.ramp_sweeps = microseconds_to_sweeps(2.0);
  s.hold_sweeps = microseconds_to_sweeps(10.0);
  s.seed = seed;
  return s;
}

void AnnealSchedule::validate() const {
  if (!(std::isfinite(t_min) && t_min > 0.0)) throw ConfigError("T_min must be > 0");
  if (t_max && !(std::isfinite(*t_max) && *t_max > t_min)) {
    throw ConfigError("T_max must be finite and greater than T_min");
  }
  if (mode == AnnealMode::forward) {
    if (total_sweeps < 1) throw ConfigError("forward anneal needs total_sweeps >= 1");
  } else {
    if (!(s_target > 0.0 && s_target <= 1.0)) {
      throw ConfigError("reverse anneal needs 0 < s_target <= 1");
    }
    if (s_target < 1.0 && ramp_sweeps < 1) {
      throw ConfigError("reverse anneal needs ramp_sweeps >= 1");
    }
  }
}

nlohmann::json AnnealSchedule::to_json() const {
  nlohmann::json j;
  j["mode"] = mode == AnnealMode::forward ? "forward" : "reverse";
  j["t_min"] = t_min;
  j["t_max"] = t_max ? nlohmann::json(*t_max) : nlohmann::json(nullptr);
  j["seed"] = seed;
  if (mode == AnnealMode::forward) {
    j["total_sweeps"] = total_sweeps;
  } else {
    j["s_target"] = s_target;
    j["ramp_sweeps"] = ramp_sweeps;
    j["hold_sweeps"] = hold_sweeps;
  }
  return j;
}

AnnealSchedule AnnealSchedule::from_json(const nlohmann::json& j) {
  AnnealSchedule s;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "forward") {
    s.mode = AnnealMode::forward;
  } else if (mode == "reverse") {
    s.mode = AnnealMode::reverse;
  } else {
    throw ConfigError("unknown anneal mode '" + mode + "'");
  }
  s.t_min = j.value("t_min", s.t_min);
  if (j.contains("t_max") && !j["t_max"].is_null()) s.t_max = j["t_max"].get<double>();
  s.seed = j.value("seed", s.seed);
  s.total_sweeps = j.value("total_sweeps", s.total_sweeps);
  s.s_target = j.value("s_target", s.s_target);
  s.ramp_sweeps = j.value("ramp_sweeps", s.ramp_sweeps);
  s.hold_sweeps = j.value("hold_sweeps", s.hold_sweeps);
  return s;
}

double default_t_max(const IsingProblem& p) {
  std::vector<double> bound(p.num_vars());
  const auto h = p.fields();
  for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = std::abs(h[i]);
  for (const auto& c : p.couplings()) {
    bound[c.i] += std::abs(c.value);
    bound[c.j] += std::abs(c.value);
  }
  const double largest = bound.empty() ? 0.0 : *std::max_element(bound.begin(), bound.end());
  return 2.0 * largest;
}

double anneal_temperature(double s, double t_min, double t_max) {
  return t_min * std::pow(t_max / t_min, 1.0 - s);
}

SampleSet forward_anneal(const IsingProblem& p, const AnnealSchedule& sched,
                         std::size_t num_reads, std::size_t jobs) {
  if (sched.mode != AnnealMode::forward) throw ConfigError("forward_anneal needs a forward schedule");
  sched.validate();
  const double t_max = resolved_t_max(sched, p);
  const SparseModel model = SparseModel::from(p);

  std::vector<Sample> reads(num_reads);
  detail::parallel_for(num_reads, jobs, [&](std::size_t r) {
    auto rng = detail::make_stream(sched.seed, kForwardStream, r);
    MetropolisChain chain(model, rng);
    chain.randomize();
    run_forward(chain, sched, t_max);
    reads[r] = {BitVector::from_spins(chain.spins()), energy(p, chain.spins()), 1};
  });
  return make_set(p, std::move(reads), "forward", sched, t_max);
}

SampleSet reverse_anneal(const IsingProblem& p, const BitVector& initial,
                         const AnnealSchedule& sched, std::size_t num_reads,
                         std::size_t jobs) {
  if (sched.mode != AnnealMode::reverse) throw ConfigError("reverse_anneal needs a reverse schedule");
  sched.validate();
  if (initial.size() != p.num_vars()) {
    throw DimensionError("initial state has " + std::to_string(initial.size()) +
                         " bits, problem has " + std::to_string(p.num_vars()));
  }
  const double t_max = resolved_t_max(sched, p);
  auto reads = reverse_reads(p, sched, t_max, num_reads, jobs,
                             [&](std::size_t) -> const BitVector& { return initial; });
  auto out = make_set(p, std::move(reads), "reverse", sched, t_max);
  out.schedule["initial"] = initial.to_string();
  return out;
}

std::string_view to_string(SelectionPolicy policy) noexcept {
  return policy == SelectionPolicy::lowest_energy ? "lowest-energy" : "uniform-random";
}

SelectionPolicy parse_selection_policy(std::string_view text) {
  if (text == "lowest-energy" || text == "lowest") return SelectionPolicy::lowest_energy;
  if (text == "uniform-random" || text == "uniform") return SelectionPolicy::uniform_random;
  throw ConfigError("unknown selection policy '" + std::string(text) + "'");
}

SampleSet refine(const IsingProblem& p, const SampleSet& candidates,
                 const AnnealSchedule& sched, std::size_t num_reads,
                 SelectionPolicy policy, std::size_t jobs) {
  if (candidates.empty()) throw ConfigError("refine needs at least one candidate state");
  if (sched.mode != AnnealMode::reverse) throw ConfigError("refine needs a reverse schedule");
  sched.validate();
  for (const auto& c : candidates.samples) {
    if (c.bits.size() != p.num_vars()) {
      throw DimensionError("candidate has " + std::to_string(c.bits.size()) +
                           " bits, problem has " + std::to_string(p.num_vars()));
    }
  }
  const double t_max = resolved_t_max(sched, p);

  std::vector<std::size_t> starts(num_reads, 0);
  if (policy == SelectionPolicy::lowest_energy) {
    const Sample* best = &candidates.best();
    std::fill(starts.begin(), starts.end(),
              static_cast<std::size_t>(best - candidates.samples.data()));
  } else {
    std::uint64_t total = 0;
    for (const auto& c : candidates.samples) total += c.count;
    if (total == 0) throw ConfigError("refine candidates carry zero total multiplicity");
    for (std::size_t r = 0; r < num_reads; ++r) {
      auto rng = detail::make_stream(sched.seed, kSelectStream, r);
      std::uint64_t pick = detail::uniform_below(rng, total);
      std::size_t k = 0;
      while (pick >= candidates.samples[k].count) pick -= candidates.samples[k++].count;
      starts[r] = k;
    }
  }

  auto reads = reverse_reads(p, sched, t_max, num_reads, jobs, [&](std::size_t r) -> const BitVector& {
    return candidates.samples[starts[r]].bits;
  });
  auto out = make_set(p, std::move(reads), "refine", sched, t_max);
  out.schedule["policy"] = std::string(to_string(policy));
  return out;
}

}  // namespace nsp
