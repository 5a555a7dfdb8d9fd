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

#include <algorithm>
#include <numeric>
#include <random>

#include "nsp/error.hpp"
#include "nsp/exact.hpp"
#include "nsp/nsp_model.hpp"
#include "oracle.hpp"

using namespace nsp;

namespace {

std::vector<BitVector> states_of(const oracle::BruteForce& bf, std::size_t n) {
  std::vector<BitVector> out;
  for (auto m : bf.argmin) out.push_back(BitVector::from_mask(m, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Exact, SingleVariable) {
  const auto g = enumerate_ground_states(QuboProblem(1, {{0, 0, -1.0}}));
  EXPECT_DOUBLE_EQ(g.energy, -1.0);
  EXPECT_EQ(g.states, std::vector<BitVector>{BitVector::from_string("1")});
  EXPECT_EQ(g.search_space_size, 2u);
}

TEST(Exact, SmallNspInstance) {
  const auto g = enumerate_ground_states(build_qubo(make_paper_base(1, 2)));
  EXPECT_NEAR(g.energy, 1.6, 1e-9);
  EXPECT_EQ(g.states, (std::vector<BitVector>{BitVector::from_string("10"), BitVector::from_string("01")}));
}

TEST(Exact, NspThreeByFourMatchesBruteForce) {
  const auto q = build_qubo(make_paper_base(3, 4));
  const auto g = enumerate_ground_states(q);
  const auto bf = oracle::brute_force(q);
  EXPECT_NEAR(g.energy, bf.energy, 1e-9);
  EXPECT_EQ(g.states, states_of(bf, 12));
  EXPECT_EQ(g.search_space_size, 4096u);
}

TEST(Exact, GrayCodeMatchesNaiveEnumeration) {
  std::mt19937_64 rng(101);
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto q = oracle::random_qubo(rng, n, 0.6);
    const auto bf = oracle::brute_force(q);
    for (std::size_t jobs : {1u, 3u}) {
      const auto g = enumerate_ground_states(q, kExactVariableCap, jobs);
      EXPECT_NEAR(g.energy, bf.energy, 1e-9) << "n=" << n;
      EXPECT_EQ(g.states, states_of(bf, n)) << "n=" << n;
    }
  }
}

TEST(Exact, DegenerateSetsAreComplete) {
  // Integer couplings give many exact ties.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QuboTerm> terms;
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = i; j < 10; ++j)
        if (rng() % 3 == 0) terms.push_back({i, j, static_cast<double>(static_cast<int>(rng() % 5) - 2)});
    const QuboProblem q(10, terms);
    EXPECT_EQ(enumerate_ground_states(q).states, states_of(oracle::brute_force(q), 10));
  }
}

TEST(Exact, RandomOrderPassAgrees) {
  std::mt19937_64 rng(55);
  const auto q = build_qubo(make_paper_base(2, 7));
  const auto g = enumerate_ground_states(q);
  const auto d = oracle::dense(q);
  std::vector<std::uint64_t> order(std::uint64_t{1} << 14);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  double best = std::numeric_limits<double>::infinity();
  for (auto m : order) best = std::min(best, oracle::energy(d, oracle::bits_of(m, 14)));
  std::vector<BitVector> states;
  for (auto m : order) {
    if (oracle::energy(d, oracle::bits_of(m, 14)) <= best + 1e-9) states.push_back(BitVector::from_mask(m, 14));
  }
  std::sort(states.begin(), states.end());
  EXPECT_NEAR(g.energy, best, 1e-9);
  EXPECT_EQ(g.states, states);
}

TEST(Exact, ResultIndependentOfJobs) {
  const auto q = build_qubo(make_paper_base(3, 6));
  EXPECT_EQ(enumerate_ground_states(q, kExactVariableCap, 1), enumerate_ground_states(q, kExactVariableCap, 4));
}

TEST(Exact, CapacityErrors) {
  EXPECT_THROW(enumerate_ground_states(QuboProblem(29, {})), CapacityError);
  EXPECT_THROW(enumerate_ground_states(QuboProblem(10, {}), 9), CapacityError);
  // Every one of 2^23 assignments ties.
  EXPECT_THROW(enumerate_ground_states(QuboProblem(23, {})), CapacityError);
}

TEST(Exact, EmptyProblem) {
  const auto g = enumerate_ground_states(QuboProblem(0, {}, 2.5));
  EXPECT_DOUBLE_EQ(g.energy, 2.5);
  ASSERT_EQ(g.states.size(), 1u);
  EXPECT_TRUE(g.states[0].empty());
}

TEST(Exact, MinEnergyUnder) {
  const auto q = build_qubo(make_paper_base(2, 4));
  const auto all = min_energy_under(q, [](const BitVector&) { return true; });
  ASSERT_TRUE(all.has_value());
  EXPECT_EQ(*all, enumerate_ground_states(q));

  const auto zero = min_energy_under(q, [](const BitVector& b) { return b.count() == 0; });
  ASSERT_TRUE(zero.has_value());
  EXPECT_NEAR(zero->energy, q.offset(), 1e-12);
  EXPECT_EQ(zero->states.size(), 1u);

  EXPECT_FALSE(min_energy_under(q, [](const BitVector&) { return false; }).has_value());
}

TEST(Exact, MinEnergyUnderOnAppendixInstance) {
  auto inst = make_paper_three_shift(3, 2);
  set_dayoff(inst, 0, 3, 1.0);
  set_dayoff(inst, 1, 5, 1.5);
  set_dayoff(inst, 2, 4, 2.0);
  const auto q = build_qubo(inst);
  const auto free = enumerate_ground_states(q);
  const std::size_t v = variable_index(inst, 2, 1, 0);
  const auto honored = min_energy_under(q, [v](const BitVector& b) { return b[v] == 0; });
  ASSERT_TRUE(honored.has_value());
  EXPECT_GE(honored->energy, free.energy - 1e-9);
  const auto bf = oracle::brute_force(q);
  EXPECT_NEAR(free.energy, bf.energy, 1e-9);
}

TEST(Exact, ToSampleSet) {
  const auto q = build_qubo(make_paper_base(1, 2));
  const auto s = to_sample_set(enumerate_ground_states(q), q);
  EXPECT_EQ(s.solver, "exact");
  EXPECT_EQ(s.num_reads, 2u);
  for (const auto& x : s.samples) {
    EXPECT_EQ(x.count, 1u);
    EXPECT_NEAR(x.energy, energy(q, x.bits), 1e-12);
  }
  EXPECT_EQ(s.fingerprint, fingerprint(q));
}
