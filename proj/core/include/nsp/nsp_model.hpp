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
#include <iosfwd>
#include <vector>

#include "nsp/bit_vector.hpp"
#include "nsp/qubo.hpp"

namespace nsp {

// Preference classes. Each maps onto a multiplier of a positive base value.
enum class LoadClass { idle, moderate, busy };                // h1: 1, 2, 3
enum class DayKind { weekday, weekend };                      // 1, 2
enum class ShiftKind { daytime, early_night, late_night };    // h2': 1, 1.5, 2
enum class DayOffPriority { low, middle, high };              // g: 1, 1.5, 2

double multiplier(LoadClass c) noexcept;
double multiplier(DayKind k) noexcept;
double multiplier(ShiftKind k) noexcept;
double multiplier(DayOffPriority p) noexcept;

// Calendar convention used by the presets: weeks start on Sunday, so day
// indices 0, 7, 14, ... (Sunday) and 6, 13, ... (Saturday) are weekend days.
DayKind calendar_day_kind(std::size_t day) noexcept;

// A nurse scheduling instance. A "slot" is one shift of one day; slots are
// numbered chronologically, slot = day * shifts_per_day + shift.
//
// All per-nurse and per-slot functions are stored as explicit arrays.
struct NspInstance {
  std::size_t nurses = 1;
  std::size_t days = 1;
  std::size_t shifts_per_day = 1;  // 1 (base model) or 3

  double lambda = 1.3;  // workforce penalty weight
  double gamma = 0.3;   // duty-target penalty weight
  double eta = 0.0;     // day-off field weight
  double a = 3.5;       // consecutive-duty coupling

  std::vector<double> effort;       // E(n), size nurses
  std::vector<double> workforce;    // W(slot), size num_slots()
  std::vector<double> duty_target;  // F(n), size nurses
  std::vector<double> nurse_load;   // h1(n), size nurses
  std::vector<double> slot_weight;  // h2(slot), size num_slots()

  // Three-shift factors; when both are non-empty, slot_weight must equal
  // alpha[day] * h2_prime[shift].
  std::vector<double> alpha;     // size days
  std::vector<double> h2_prime;  // size shifts_per_day

  // g(n, slot) day-off priorities, nurses x num_slots(); empty means none.
  std::vector<std::vector<double>> dayoff;

  std::size_t num_slots() const noexcept { return days * shifts_per_day; }
  std::size_t num_vars() const noexcept { return nurses * num_slots(); }
  double dayoff_weight(std::size_t nurse, std::size_t slot) const noexcept {
    return dayoff.empty() ? 0.0 : dayoff[nurse][slot];
  }

  // Throws ConfigError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const NspInstance&, const NspInstance&) = default;
};

// F(n) = floor(S/N) + (n < S mod N), so that sum F = S for S slots.
std::vector<double> default_duty_targets(std::size_t nurses, std::size_t slots);

// lambda=1.3, gamma=0.3, a=3.5, E=W=h1=h2=1, default F, no day-off term.
NspInstance make_paper_base(std::size_t nurses, std::size_t days);

// Three-shift system: lambda=1.3, gamma=0.3, eta=0.2, a=3.5, E=W=h1=1,
// alpha from the calendar, h2' = (1, 1.5, 2), default F over slots, g = 0.
NspInstance make_paper_three_shift(std::size_t nurses, std::size_t days);

// Sets g(nurse, slot), allocating the day-off matrix if needed.
void set_dayoff(NspInstance& inst, std::size_t nurse, std::size_t slot,
                double weight);

// (n * D + d) * shifts_per_day + t. Throws IndexError when out of range.
std::size_t variable_index(const NspInstance& inst, std::size_t nurse,
                           std::size_t day, std::size_t shift = 0);

// Roster grid indexed [nurse][slot]; 1 means on duty.
using Roster = std::vector<std::vector<std::uint8_t>>;

class Schedule {
 public:
  // Throws DimensionError if bits.size() != inst.num_vars().
  Schedule(const NspInstance& inst, BitVector bits);

  std::size_t nurses() const noexcept { return nurses_; }
  std::size_t days() const noexcept { return days_; }
  std::size_t shifts_per_day() const noexcept { return shifts_; }
  std::size_t num_slots() const noexcept { return days_ * shifts_; }
  const BitVector& bits() const noexcept { return bits_; }

  bool on_duty(std::size_t nurse, std::size_t slot) const {
    return bits_[nurse * num_slots() + slot] != 0;
  }

 private:
  std::size_t nurses_;
  std::size_t days_;
  std::size_t shifts_;
  BitVector bits_;
};

Roster decode(const Schedule& s);
// Throws DimensionError when the grid shape does not match the instance.
Schedule encode(const NspInstance& inst, const Roster& roster);
// Rows are nurses, columns slots, values 0/1.
void write_roster_csv(std::ostream& out, const Roster& roster);

// Full objective as a QUBO:
//   a * sum_n sum_slot q(n,slot) q(n,slot+1)
//   + lambda * sum_slot (sum_n E(n) q(n,slot) - W(slot))^2
//   + gamma  * sum_n (sum_slot h1(n) h2(slot) q(n,slot) - F(n))^2
//   + eta    * sum g(n,slot) q(n,slot)
QuboProblem build_qubo(const NspInstance& inst);

// Each term group of the objective evaluated directly on a schedule.
struct EnergyBreakdown {
  double consecutive = 0.0;
  double workforce = 0.0;
  double duty = 0.0;
  double dayoff = 0.0;

  double total() const noexcept { return consecutive + workforce + duty + dayoff; }
};

EnergyBreakdown energy_breakdown(const NspInstance& inst, const Schedule& s);

struct ConstraintReport {
  bool no_consecutive_duty = true;
  bool workforce_exact = true;
  bool duty_target_met = true;
  double dayoff_penalty = 0.0;  // eta * sum g q
  std::vector<std::size_t> consecutive_nurses;  // nurses on adjacent slots
  std::vector<std::size_t> violated_slots;      // sum E q != W
  std::vector<std::size_t> violated_nurses;     // sum h1 h2 q != F
  EnergyBreakdown energy;
};

// Throws DimensionError when the schedule was not built for `inst`.
ConstraintReport check_constraints(const NspInstance& inst, const Schedule& s);

// True iff the consecutive-duty, workforce and duty-target groups all vanish.
bool is_fully_satisfying(const NspInstance& inst, const Schedule& s);
bool is_fully_satisfying(const NspInstance& inst, const BitVector& bits);

}  // namespace nsp
