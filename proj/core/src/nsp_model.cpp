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

#include "nsp/nsp_model.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "nsp/error.hpp"

namespace nsp {
namespace {

constexpr double kSatisfactionTolerance = 1e-9;

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid instance: " + what);
}

bool finite_nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

void require_size(const std::vector<double>& v, std::size_t n, const char* name) {
  require(v.size() == n, std::string(name) + " has " + std::to_string(v.size()) +
                             " entries, expected " + std::to_string(n));
  for (double x : v) require(std::isfinite(x), std::string(name) + " must be finite");
}

class TermAccumulator {
 public:
  void add(std::size_t i, std::size_t j, double value) {
    if (value == 0.0) return;
    if (i > j) std::swap(i, j);
    terms_[{i, j}] += value;
  }
  void add_offset(double value) { offset_ += value; }

  QuboProblem build(std::size_t num_vars) const {
    std::vector<QuboTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, value] : terms_) out.push_back({key.first, key.second, value});
    return QuboProblem(num_vars, std::move(out), offset_);
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, double> terms_;
  double offset_ = 0.0;
};

// Adds weight * (sum_k coeff_k q_{var_k} - target)^2.
void add_squared_penalty(TermAccumulator& acc, double weight,
                         const std::vector<std::pair<std::size_t, double>>& lin,
                         double target) {
  if (weight == 0.0) return;
  for (std::size_t k = 0; k < lin.size(); ++k) {
    const auto [vk, ck] = lin[k];
    acc.add(vk, vk, weight * (ck * ck - 2.0 * target * ck));
    for (std::size_t l = k + 1; l < lin.size(); ++l) {
      acc.add(vk, lin[l].first, weight * 2.0 * ck * lin[l].second);
    }
  }
  acc.add_offset(weight * target * target);
}

}  // namespace

double multiplier(LoadClass c) noexcept {
  switch (c) {
    case LoadClass::busy: return 3.0;
    case LoadClass::moderate: return 2.0;
    case LoadClass::idle: break;
  }
  return 1.0;
}

double multiplier(DayKind k) noexcept { return k == DayKind::weekend ? 2.0 : 1.0; }

double multiplier(ShiftKind k) noexcept {
  switch (k) {
    case ShiftKind::late_night: return 2.0;
    case ShiftKind::early_night: return 1.5;
    case ShiftKind::daytime: break;
  }
  return 1.0;
}

double multiplier(DayOffPriority p) noexcept {
  switch (p) {
    case DayOffPriority::high: return 2.0;
    case DayOffPriority::middle: return 1.5;
    case DayOffPriority::low: break;
  }
  return 1.0;
}

DayKind calendar_day_kind(std::size_t day) noexcept {
  const auto dow = day % 7;
  return (dow == 0 || dow == 6) ? DayKind::weekend : DayKind::weekday;
}

void NspInstance::validate() const {
  require(nurses >= 1, "N must be at least 1");
  require(days >= 1, "D must be at least 1");
  require(shifts_per_day == 1 || shifts_per_day == 3, "shifts_per_day must be 1 or 3");
  require(finite_nonnegative(lambda), "lambda must be finite and >= 0");
  require(finite_nonnegative(gamma), "gamma must be finite and >= 0");
  require(finite_nonnegative(eta), "eta must be finite and >= 0");
  require(std::isfinite(a) && a > 0.0, "a must be finite and > 0");

  require_size(effort, nurses, "E");
  require_size(workforce, num_slots(), "W");
  require_size(duty_target, nurses, "F");
  require_size(nurse_load, nurses, "h1");
  require_size(slot_weight, num_slots(), "h2");

  const double min_duty = std::floor(static_cast<double>(days) / static_cast<double>(nurses));
  for (std::size_t n = 0; n < nurses; ++n) {
    require(duty_target[n] >= min_duty,
            "F(" + std::to_string(n) + ") must be >= floor(D/N) = " +
                std::to_string(static_cast<long long>(min_duty)));
    require(nurse_load[n] > 0.0, "h1 values must be positive");
  }
  for (double w : slot_weight) require(w > 0.0, "h2 values must be positive");

  if (!alpha.empty() || !h2_prime.empty()) {
    require_size(alpha, days, "alpha");
    require_size(h2_prime, shifts_per_day, "h2prime");
    for (std::size_t d = 0; d < days; ++d) {
      for (std::size_t t = 0; t < shifts_per_day; ++t) {
        const double expect = alpha[d] * h2_prime[t];
        require(std::abs(slot_weight[d * shifts_per_day + t] - expect) <= 1e-12,
                "h2 must equal alpha(d) * h2prime(t)");
      }
    }
  }

  if (!dayoff.empty()) {
    require(dayoff.size() == nurses, "g must have one row per nurse");
    for (const auto& row : dayoff) {
      require(row.size() == num_slots(), "g rows must have one entry per slot");
      for (double g : row) require(finite_nonnegative(g), "g values must be finite and >= 0");
    }
  }
}

std::vector<double> default_duty_targets(std::size_t nurses, std::size_t slots) {
  std::vector<double> f(nurses, static_cast<double>(slots / nurses));
  for (std::size_t n = 0; n < slots % nurses; ++n) f[n] += 1.0;
  return f;
}

NspInstance make_paper_base(std::size_t nurses, std::size_t days) {
  if (nurses == 0 || days == 0) throw ConfigError("N and D must be at least 1");
  NspInstance inst;
  inst.nurses = nurses;
  inst.days = days;
  inst.shifts_per_day = 1;
  inst.lambda = 1.3;
  inst.gamma = 0.3;
  inst.eta = 0.0;
  inst.a = 3.5;
  inst.effort.assign(nurses, 1.0);
  inst.workforce.assign(days, 1.0);
  inst.duty_target = default_duty_targets(nurses, days);
  inst.nurse_load.assign(nurses, 1.0);
  inst.slot_weight.assign(days, 1.0);
  return inst;
}

NspInstance make_paper_three_shift(std::size_t nurses, std::size_t days) {
  if (nurses == 0 || days == 0) throw ConfigError("N and D must be at least 1");
  NspInstance inst;
  inst.nurses = nurses;
  inst.days = days;
  inst.shifts_per_day = 3;
  inst.lambda = 1.3;
  inst.gamma = 0.3;
  inst.eta = 0.2;
  inst.a = 3.5;
  const std::size_t slots = inst.num_slots();
  inst.effort.assign(nurses, 1.0);
  inst.workforce.assign(slots, 1.0);
  inst.duty_target = default_duty_targets(nurses, slots);
  inst.nurse_load.assign(nurses, 1.0);
  inst.h2_prime = {multiplier(ShiftKind::daytime), multiplier(ShiftKind::early_night),
                   multiplier(ShiftKind::late_night)};
  inst.alpha.resize(days);
  for (std::size_t d = 0; d < days; ++d) inst.alpha[d] = multiplier(calendar_day_kind(d));
  inst.slot_weight.resize(slots);
  for (std::size_t d = 0; d < days; ++d) {
    for (std::size_t t = 0; t < 3; ++t) inst.slot_weight[d * 3 + t] = inst.alpha[d] * inst.h2_prime[t];
  }
  return inst;
}

void set_dayoff(NspInstance& inst, std::size_t nurse, std::size_t slot, double weight) {
  if (nurse >= inst.nurses || slot >= inst.num_slots()) {
    throw IndexError("day-off request (" + std::to_string(nurse) + ", " +
                     std::to_string(slot) + ") out of range");
  }
  if (inst.dayoff.empty()) {
    inst.dayoff.assign(inst.nurses, std::vector<double>(inst.num_slots(), 0.0));
  }
  inst.dayoff[nurse][slot] = weight;
}

std::size_t variable_index(const NspInstance& inst, std::size_t nurse, std::size_t day,
                           std::size_t shift) {
  if (nurse >= inst.nurses || day >= inst.days || shift >= inst.shifts_per_day) {
    throw IndexError("coordinate (n=" + std::to_string(nurse) + ", d=" +
                     std::to_string(day) + ", t=" + std::to_string(shift) +
                     ") out of range for N=" + std::to_string(inst.nurses) +
                     ", D=" + std::to_string(inst.days) +
                     ", shifts=" + std::to_string(inst.shifts_per_day));
  }
  return (nurse * inst.days + day) * inst.shifts_per_day + shift;
}

Schedule::Schedule(const NspInstance& inst, BitVector bits)
    : nurses_(inst.nurses), days_(inst.days), shifts_(inst.shifts_per_day),
      bits_(std::move(bits)) {
  if (bits_.size() != inst.num_vars()) {
    throw DimensionError("schedule has " + std::to_string(bits_.size()) +
                         " bits, instance needs " + std::to_string(inst.num_vars()));
  }
}

Roster decode(const Schedule& s) {
  Roster grid(s.nurses(), std::vector<std::uint8_t>(s.num_slots(), 0));
  for (std::size_t n = 0; n < s.nurses(); ++n) {
    for (std::size_t k = 0; k < s.num_slots(); ++k) grid[n][k] = s.on_duty(n, k) ? 1 : 0;
  }
  return grid;
}

Schedule encode(const NspInstance& inst, const Roster& roster) {
  if (roster.size() != inst.nurses) {
    throw DimensionError("roster has " + std::to_string(roster.size()) +
                         " rows, instance has " + std::to_string(inst.nurses) + " nurses");
  }
  const std::size_t slots = inst.num_slots();
  BitVector bits(inst.num_vars());
  for (std::size_t n = 0; n < inst.nurses; ++n) {
    if (roster[n].size() != slots) {
      throw DimensionError("roster row " + std::to_string(n) + " has " +
                           std::to_string(roster[n].size()) + " slots, expected " +
                           std::to_string(slots));
    }
    for (std::size_t k = 0; k < slots; ++k) {
      if (roster[n][k] > 1) throw DomainError("roster cells must be 0 or 1");
      bits.set(n * slots + k, roster[n][k] != 0);
    }
  }
  return Schedule(inst, std::move(bits));
}

void write_roster_csv(std::ostream& out, const Roster& roster) {
  for (const auto& row : roster) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << static_cast<int>(row[k]);
    }
    out << '\n';
  }
}

QuboProblem build_qubo(const NspInstance& inst) {
  inst.validate();
  const std::size_t slots = inst.num_slots();
  const auto var = [&](std::size_t n, std::size_t k) { return n * slots + k; };
  TermAccumulator acc;

  for (std::size_t n = 0; n < inst.nurses; ++n) {
    for (std::size_t k = 0; k + 1 < slots; ++k) acc.add(var(n, k), var(n, k + 1), inst.a);
  }

  std::vector<std::pair<std::size_t, double>> lin;
  for (std::size_t k = 0; k < slots; ++k) {
    lin.clear();
    for (std::size_t n = 0; n < inst.nurses; ++n) lin.emplace_back(var(n, k), inst.effort[n]);
    add_squared_penalty(acc, inst.lambda, lin, inst.workforce[k]);
  }

  for (std::size_t n = 0; n < inst.nurses; ++n) {
    lin.clear();
    for (std::size_t k = 0; k < slots; ++k) {
      lin.emplace_back(var(n, k), inst.nurse_load[n] * inst.slot_weight[k]);
    }
    add_squared_penalty(acc, inst.gamma, lin, inst.duty_target[n]);
  }

  if (inst.eta != 0.0 && !inst.dayoff.empty()) {
    for (std::size_t n = 0; n < inst.nurses; ++n) {
      for (std::size_t k = 0; k < slots; ++k) {
        const std::size_t v = var(n, k);
        acc.add(v, v, inst.eta * inst.dayoff[n][k]);
      }
    }
  }
  return acc.build(inst.num_vars());
}

namespace {

void check_shape(const NspInstance& inst, const Schedule& s) {
  if (s.nurses() != inst.nurses || s.days() != inst.days ||
      s.shifts_per_day() != inst.shifts_per_day) {
    throw DimensionError("schedule shape (" + std::to_string(s.nurses()) + "x" +
                         std::to_string(s.days()) + "x" + std::to_string(s.shifts_per_day()) +
                         ") does not match instance (" + std::to_string(inst.nurses) + "x" +
                         std::to_string(inst.days) + "x" +
                         std::to_string(inst.shifts_per_day) + ")");
  }
}

}  // namespace

ConstraintReport check_constraints(const NspInstance& inst, const Schedule& s) {
  check_shape(inst, s);
  const std::size_t slots = inst.num_slots();
  ConstraintReport r;

  for (std::size_t n = 0; n < inst.nurses; ++n) {
    std::size_t pairs = 0;
    for (std::size_t k = 0; k + 1 < slots; ++k) pairs += s.on_duty(n, k) && s.on_duty(n, k + 1);
    if (pairs) r.consecutive_nurses.push_back(n);
    r.energy.consecutive += inst.a * static_cast<double>(pairs);
  }

  for (std::size_t k = 0; k < slots; ++k) {
    double staffed = 0.0;
    for (std::size_t n = 0; n < inst.nurses; ++n) {
      if (s.on_duty(n, k)) staffed += inst.effort[n];
    }
    const double gap = staffed - inst.workforce[k];
    if (std::abs(gap) > kSatisfactionTolerance) r.violated_slots.push_back(k);
    r.energy.workforce += inst.lambda * gap * gap;
  }

  for (std::size_t n = 0; n < inst.nurses; ++n) {
    double duty = 0.0;
    double dayoff = 0.0;
    for (std::size_t k = 0; k < slots; ++k) {
      if (!s.on_duty(n, k)) continue;
      duty += inst.nurse_load[n] * inst.slot_weight[k];
      dayoff += inst.dayoff_weight(n, k);
    }
    const double gap = duty - inst.duty_target[n];
    if (std::abs(gap) > kSatisfactionTolerance) r.violated_nurses.push_back(n);
    r.energy.duty += inst.gamma * gap * gap;
    r.energy.dayoff += inst.eta * dayoff;
  }

  r.no_consecutive_duty = r.consecutive_nurses.empty();
  r.workforce_exact = r.violated_slots.empty();
  r.duty_target_met = r.violated_nurses.empty();
  r.dayoff_penalty = r.energy.dayoff;
  return r;
}

EnergyBreakdown energy_breakdown(const NspInstance& inst, const Schedule& s) {
  return check_constraints(inst, s).energy;
}

bool is_fully_satisfying(const NspInstance& inst, const Schedule& s) {
  const auto r = check_constraints(inst, s);
  return r.no_consecutive_duty && r.workforce_exact && r.duty_target_met;
}

bool is_fully_satisfying(const NspInstance& inst, const BitVector& bits) {
  return is_fully_satisfying(inst, Schedule(inst, bits));
}

}  // namespace nsp
