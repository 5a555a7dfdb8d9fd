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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "nsp/error.hpp"
#include "nsp/exact.hpp"
#include "nsp/nsp_model.hpp"
#include "oracle.hpp"

using namespace nsp;

TEST(NspModel, VariableIndexExamples) {
  EXPECT_EQ(variable_index(make_paper_base(3, 4), 0, 0), 0u);
  EXPECT_EQ(variable_index(make_paper_base(3, 4), 1, 2), 6u);
  EXPECT_EQ(variable_index(make_paper_three_shift(3, 2), 2, 1, 2), 17u);
  EXPECT_THROW(variable_index(make_paper_base(3, 4), 3, 0), IndexError);
  EXPECT_THROW(variable_index(make_paper_base(3, 4), 0, 4), IndexError);
  EXPECT_THROW(variable_index(make_paper_base(3, 4), 0, 0, 1), IndexError);
}

TEST(NspModel, VariableIndexIsBijective) {
  const auto inst = make_paper_three_shift(3, 4);
  std::vector<int> seen(inst.num_vars(), 0);
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t d = 0; d < 4; ++d)
      for (std::size_t t = 0; t < 3; ++t) ++seen.at(variable_index(inst, n, d, t));
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(NspModel, PresetsAndDefaults) {
  const auto base = make_paper_base(3, 4);
  EXPECT_DOUBLE_EQ(base.lambda, 1.3);
  EXPECT_DOUBLE_EQ(base.gamma, 0.3);
  EXPECT_DOUBLE_EQ(base.a, 3.5);
  EXPECT_DOUBLE_EQ(base.eta, 0.0);
  EXPECT_EQ(base.duty_target, (std::vector<double>{2, 1, 1}));
  EXPECT_EQ(default_duty_targets(4, 10), (std::vector<double>{3, 3, 2, 2}));

  const auto three = make_paper_three_shift(3, 2);
  EXPECT_DOUBLE_EQ(three.eta, 0.2);
  EXPECT_EQ(three.h2_prime, (std::vector<double>{1.0, 1.5, 2.0}));
  for (std::size_t d = 0; d < 2; ++d) {
    for (std::size_t t = 0; t < 3; ++t) {
      EXPECT_DOUBLE_EQ(three.slot_weight[d * 3 + t], three.alpha[d] * three.h2_prime[t]);
    }
  }
  EXPECT_NO_THROW(three.validate());
}

TEST(NspModel, CalendarWeekends) {
  EXPECT_EQ(calendar_day_kind(0), DayKind::weekend);
  EXPECT_EQ(calendar_day_kind(1), DayKind::weekday);
  EXPECT_EQ(calendar_day_kind(6), DayKind::weekend);
  EXPECT_EQ(calendar_day_kind(7), DayKind::weekend);
  EXPECT_DOUBLE_EQ(multiplier(LoadClass::busy), 3.0);
  EXPECT_DOUBLE_EQ(multiplier(ShiftKind::early_night), 1.5);
  EXPECT_DOUBLE_EQ(multiplier(DayOffPriority::high), 2.0);
}

TEST(NspModel, ValidateRejectsBadInstances) {
  auto inst = make_paper_base(3, 4);
  inst.a = 0.0;
  EXPECT_THROW(inst.validate(), ConfigError);
  inst = make_paper_base(3, 4);
  inst.lambda = -1.0;
  EXPECT_THROW(inst.validate(), ConfigError);
  inst = make_paper_base(3, 6);
  inst.duty_target[0] = 1.0;  // below floor(6/3)
  EXPECT_THROW(inst.validate(), ConfigError);
  inst = make_paper_base(3, 4);
  inst.workforce.pop_back();
  EXPECT_THROW(inst.validate(), ConfigError);
  inst = make_paper_base(3, 4);
  inst.shifts_per_day = 2;
  EXPECT_THROW(inst.validate(), ConfigError);
  EXPECT_THROW(set_dayoff(inst = make_paper_base(3, 4), 3, 0, 1.0), IndexError);
}

TEST(NspModel, SmallExpansionMatchesHandExpansion) {
  const auto q = build_qubo(make_paper_base(1, 2));
  EXPECT_NEAR(q.coefficient(0, 1), 3.5 + 2 * 0.3, 1e-12);
  EXPECT_NEAR(q.coefficient(0, 0), -1.3 - 3 * 0.3, 1e-12);
  EXPECT_NEAR(q.coefficient(1, 1), -1.3 - 3 * 0.3, 1e-12);
  EXPECT_NEAR(q.offset(), 2 * 1.3 + 4 * 0.3, 1e-12);
}

TEST(NspModel, ZeroPenaltiesLeaveOnlyConsecutiveCouplings) {
  auto inst = make_paper_three_shift(2, 2);
  inst.lambda = inst.gamma = inst.eta = 0.0;
  const auto q = build_qubo(inst);
  EXPECT_EQ(q.offset(), 0.0);
  ASSERT_EQ(q.terms().size(), 2u * 5u);
  for (const auto& t : q.terms()) {
    EXPECT_EQ(t.j, t.i + 1);
    EXPECT_NE(t.j % 6, 0u);  // never couples across nurses
    EXPECT_DOUBLE_EQ(t.value, inst.a);
  }
}

TEST(NspModel, LambdaZeroEmitsNoWorkforceCouplings) {
  auto inst = make_paper_base(3, 4);
  inst.lambda = 0.0;
  const auto q = build_qubo(inst);
  for (const auto& t : q.terms()) EXPECT_EQ(t.i / 4, t.j / 4) << t.i << "," << t.j;
}

TEST(NspModel, AllZeroEnergyIsOffset) {
  const auto inst = make_paper_base(3, 4);
  const auto q = build_qubo(inst);
  double expected = 0.0;
  for (double w : inst.workforce) expected += inst.lambda * w * w;
  for (double f : inst.duty_target) expected += inst.gamma * f * f;
  EXPECT_NEAR(energy(q, BitVector(12)), expected, 1e-12);
  EXPECT_NEAR(q.offset(), expected, 1e-12);
}

TEST(NspModel, QuboMatchesDirectPenaltySum) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const bool three = trial % 2 == 0;
    NspInstance inst = three ? make_paper_three_shift(1 + rng() % 3, 1 + rng() % 3)
                             : oracle::random_instance(rng, 1 + rng() % 4, 1 + rng() % 6);
    if (three) {
      for (std::size_t n = 0; n < inst.nurses; ++n) {
        set_dayoff(inst, n, rng() % inst.num_slots(), 1.0 + 0.5 * static_cast<double>(rng() % 3));
      }
    }
    const auto q = build_qubo(inst);
    for (int k = 0; k < 20; ++k) {
      const auto bits = oracle::random_bits(rng, inst.num_vars());
      const double expected = oracle::nsp_energy(inst, oracle::bits_of(bits));
      ASSERT_NEAR(energy(q, bits), expected, 1e-9);
      const Schedule s(inst, bits);
      ASSERT_NEAR(energy_breakdown(inst, s).total(), expected, 1e-9);
      ASSERT_NEAR(check_constraints(inst, s).energy.total(), expected, 1e-9);
    }
  }
}

TEST(NspModel, ConstraintExamples) {
  const auto inst = make_paper_base(3, 4);
  const auto r = check_constraints(inst, Schedule(inst, BitVector(12)));
  EXPECT_FALSE(r.workforce_exact);
  EXPECT_EQ(r.violated_slots, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(r.no_consecutive_duty);

  const auto one = make_paper_base(1, 2);
  const auto both = check_constraints(one, Schedule(one, BitVector::from_string("11")));
  EXPECT_FALSE(both.no_consecutive_duty);
  EXPECT_EQ(both.consecutive_nurses, (std::vector<std::size_t>{0}));

  for (std::uint64_t m = 0; m < 4; ++m) {
    EXPECT_FALSE(is_fully_satisfying(one, BitVector::from_mask(m, 2)));
  }

  const auto single = make_paper_base(1, 1);
  EXPECT_TRUE(is_fully_satisfying(single, BitVector::from_string("1")));
  EXPECT_NEAR(energy(build_qubo(single), BitVector::from_string("1")), 0.0, 1e-9);

  auto two = make_paper_base(2, 2);
  EXPECT_EQ(two.duty_target, (std::vector<double>{1, 1}));
  std::size_t satisfying = 0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const auto b = BitVector::from_mask(m, 4);
    satisfying += is_fully_satisfying(two, b);
    EXPECT_EQ(is_fully_satisfying(two, b), oracle::nsp_satisfied(two, oracle::bits_of(b)));
  }
  EXPECT_EQ(satisfying, 2u);
  EXPECT_TRUE(is_fully_satisfying(two, BitVector::from_string("1001")));
  EXPECT_THROW(Schedule(two, BitVector(3)), DimensionError);
}

TEST(NspModel, ReportFlagsMatchViolationLists) {
  std::mt19937_64 rng(23);
  const auto inst = make_paper_base(3, 5);
  for (int k = 0; k < 500; ++k) {
    const auto r = check_constraints(inst, Schedule(inst, oracle::random_bits(rng, 15)));
    EXPECT_EQ(r.no_consecutive_duty, r.consecutive_nurses.empty());
    EXPECT_EQ(r.workforce_exact, r.violated_slots.empty());
    EXPECT_EQ(r.duty_target_met, r.violated_nurses.empty());
  }
}

TEST(NspModel, GroundStateReportAgreesWithDecomposition) {
  const auto inst = make_paper_base(3, 4);
  const auto q = build_qubo(inst);
  const auto bf = oracle::brute_force(q);
  for (auto m : bf.argmin) {
    const auto b = BitVector::from_mask(m, 12);
    const auto r = check_constraints(inst, Schedule(inst, b));
    const bool zero_terms = r.energy.consecutive < 1e-9 && r.energy.workforce < 1e-9 && r.energy.duty < 1e-9;
    EXPECT_EQ(is_fully_satisfying(inst, b), zero_terms);
    EXPECT_TRUE(is_fully_satisfying(inst, b));
  }
}

TEST(NspProperty, ZeroEnergyIffSatisfied) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; n * d <= 12; ++d) {
      const auto inst = oracle::random_instance(rng, n, d);
      const auto q = build_qubo(inst);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * d)); ++m) {
        const auto b = BitVector::from_mask(m, n * d);
        const bool zero = std::abs(energy(q, b)) < kEnergyTolerance;
        ASSERT_EQ(zero, is_fully_satisfying(inst, b)) << n << "x" << d << " mask " << m;
      }
    }
  }
}

TEST(NspProperty, SingleFlipFromSatisfyingRaisesEnergy) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; n * d <= 16; ++d) {
      const auto inst = make_paper_base(n, d);
      const auto q = build_qubo(inst);
      const auto ground = enumerate_ground_states(q);
      for (const auto& s : ground.states) {
        if (!is_fully_satisfying(inst, s)) continue;
        const double e0 = energy(q, s);
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto t = s;
          t.flip(i);
          EXPECT_GT(energy(q, t), e0 + kInternalTolerance);
        }
      }
    }
  }
}

TEST(NspProperty, ThreeShiftReducesToBaseModel) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      auto three = make_paper_three_shift(n, d);
      three.eta = 0.0;
      three.dayoff.clear();
      std::fill(three.alpha.begin(), three.alpha.end(), 1.0);
      std::fill(three.h2_prime.begin(), three.h2_prime.end(), 1.0);
      std::fill(three.slot_weight.begin(), three.slot_weight.end(), 1.0);
      const auto base = make_paper_base(n, 3 * d);
      ASSERT_EQ(three.duty_target, base.duty_target);
      const auto a = build_qubo(three);
      const auto b = build_qubo(base);
      ASSERT_EQ(a.num_vars(), b.num_vars());
      ASSERT_EQ(a.terms().size(), b.terms().size());
      for (std::size_t k = 0; k < a.terms().size(); ++k) {
        EXPECT_EQ(a.terms()[k].i, b.terms()[k].i);
        EXPECT_EQ(a.terms()[k].j, b.terms()[k].j);
        EXPECT_NEAR(a.terms()[k].value, b.terms()[k].value, 1e-12);
      }
      EXPECT_NEAR(a.offset(), b.offset(), 1e-12);
    }
  }
}

TEST(NspModel, DecodeEncode) {
  const auto inst = make_paper_base(3, 4);
  const auto empty = decode(Schedule(inst, BitVector(12)));
  for (const auto& row : empty) for (auto v : row) EXPECT_EQ(v, 0);

  BitVector one(12);
  one.set(variable_index(inst, 1, 2), true);
  const auto grid = decode(Schedule(inst, one));
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(grid[n][d], (n == 1 && d == 2) ? 1 : 0);

  std::mt19937_64 rng(41);
  const auto three = make_paper_three_shift(2, 3);
  for (int k = 0; k < 100; ++k) {
    const auto b = oracle::random_bits(rng, three.num_vars());
    EXPECT_EQ(encode(three, decode(Schedule(three, b))).bits(), b);
  }
  EXPECT_THROW(encode(inst, Roster(2, std::vector<std::uint8_t>(4, 0))), DimensionError);

  std::ostringstream csv;
  write_roster_csv(csv, grid);
  EXPECT_NE(csv.str().find("0,0,1,0"), std::string::npos);
}
