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
#include <random>
#include <set>

#include "nsp/error.hpp"
#include "nsp/exact.hpp"
#include "nsp/nsp_model.hpp"
#include "nsp/qubo.hpp"
#include "oracle.hpp"

using namespace nsp;

TEST(Qubo, CanonicalizesTerms) {
  QuboProblem p(3, {{2, 0, 1.0}, {0, 2, 2.0}, {1, 1, 0.0}, {1, 1, 4.0}});
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.terms()[0], (QuboTerm{0, 2, 3.0}));
  EXPECT_EQ(p.terms()[1], (QuboTerm{1, 1, 4.0}));
  EXPECT_DOUBLE_EQ(p.coefficient(2, 0), 3.0);
  EXPECT_DOUBLE_EQ(p.coefficient(0, 1), 0.0);
}

TEST(Qubo, RejectsOutOfRangeIndex) {
  EXPECT_THROW(QuboProblem(2, {{0, 2, 1.0}}), DimensionError);
}

TEST(Qubo, EnergyExamples) {
  EXPECT_DOUBLE_EQ(energy(QuboProblem(1, {{0, 0, 2.0}}), BitVector::from_string("1")), 2.0);
  std::mt19937_64 rng(1);
  const auto p = oracle::random_qubo(rng, 6);
  const QuboProblem no_offset(6, {p.terms().begin(), p.terms().end()}, 0.0);
  EXPECT_DOUBLE_EQ(energy(no_offset, BitVector(6)), 0.0);
}

TEST(Qubo, EnergyLengthMismatch) {
  EXPECT_THROW(energy(QuboProblem(3, {}), BitVector(2)), DimensionError);
}

TEST(Qubo, EnergyAtNspGroundStateIsBruteForceMinimum) {
  const auto q = build_qubo(make_paper_base(3, 4));
  const auto bf = oracle::brute_force(q);
  const auto ground = enumerate_ground_states(q);
  ASSERT_FALSE(ground.states.empty());
  for (const auto& s : ground.states) EXPECT_NEAR(energy(q, s), bf.energy, 1e-9);
}

TEST(Ising, TransformExamples) {
  const auto zero = to_ising(QuboProblem(3, {}));
  EXPECT_TRUE(zero.couplings().empty());
  for (double h : zero.fields()) EXPECT_EQ(h, 0.0);
  EXPECT_EQ(zero.offset(), 0.0);

  const auto diag = to_ising(QuboProblem(1, {{0, 0, 3.0}}));
  EXPECT_DOUBLE_EQ(diag.fields()[0], 1.5);
  EXPECT_DOUBLE_EQ(diag.offset(), 1.5);

  const auto pair = to_ising(QuboProblem(2, {{0, 1, 4.0}}));
  ASSERT_EQ(pair.couplings().size(), 1u);
  EXPECT_DOUBLE_EQ(pair.couplings()[0].value, 1.0);
  EXPECT_DOUBLE_EQ(pair.fields()[0], 1.0);
  EXPECT_DOUBLE_EQ(pair.fields()[1], 1.0);
  EXPECT_DOUBLE_EQ(pair.offset(), 1.0);
}

TEST(Ising, EnergyExamples) {
  const IsingProblem zero(2, {}, {0.0, 0.0});
  const SpinVector s{1, -1};
  EXPECT_EQ(energy(zero, s), 0.0);
  const IsingProblem j(2, {{0, 1, 1.0}}, {0.0, 0.0});
  EXPECT_DOUBLE_EQ(energy(j, s), -1.0);
}

TEST(Ising, RejectsBadSpinsAndSelfCoupling) {
  const IsingProblem p(2, {}, {0.0, 0.0});
  const SpinVector bad{1, 0};
  EXPECT_THROW(energy(p, bad), DomainError);
  const SpinVector short_spins{1};
  EXPECT_THROW(energy(p, short_spins), DimensionError);
  EXPECT_THROW(IsingProblem(2, {{1, 1, 1.0}}, {0.0, 0.0}), DomainError);
}

TEST(Ising, NspGroundStateEnergyAgrees) {
  const auto q = build_qubo(make_paper_base(3, 4));
  const auto ising = to_ising(q);
  for (const auto& s : enumerate_ground_states(q).states) {
    EXPECT_NEAR(energy(ising, s.to_spins()), energy(q, s), 1e-9);
  }
}

TEST(IsingProperty, RoundTripEnergyEquivalence) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> size(1, 32);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = oracle::random_qubo(rng, size(rng), 0.3);
    const auto ising = to_ising(p);
    const auto q = oracle::random_bits(rng, p.num_vars());
    const double expected = oracle::energy(oracle::dense(p), oracle::bits_of(q));
    ASSERT_NEAR(energy(p, q), expected, 1e-9);
    ASSERT_NEAR(energy(ising, q.to_spins()), expected, 1e-9) << "trial " << trial;
  }
}

TEST(IsingProperty, QuboRoundTripPreservesEnergies) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_qubo(rng, 10);
    const auto back = to_qubo(to_ising(p));
    for (int k = 0; k < 5; ++k) {
      const auto q = oracle::random_bits(rng, 10);
      ASSERT_NEAR(energy(back, q), energy(p, q), 1e-9);
    }
  }
}

TEST(IsingProperty, PreservesArgmin) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 16; n += 3) {
    const auto p = oracle::random_qubo(rng, n);
    const auto ising = to_ising(p);
    const auto bf = oracle::brute_force(p);
    // Ising argmin by direct enumeration over spin vectors.
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> e(std::uint64_t{1} << n);
    for (std::uint64_t m = 0; m < e.size(); ++m) {
      SpinVector s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = ((m >> i) & 1U) ? 1 : -1;
      e[m] = energy(ising, s);
      best = std::min(best, e[m]);
    }
    std::vector<std::uint64_t> ising_argmin;
    for (std::uint64_t m = 0; m < e.size(); ++m) {
      if (e[m] <= best + 1e-9) ising_argmin.push_back(m);
    }
    EXPECT_NEAR(best, bf.energy, 1e-9);
    EXPECT_EQ(ising_argmin, bf.argmin) << "n=" << n;
  }
}

TEST(BitVector, StringAndSpinConversions) {
  const auto b = BitVector::from_string("0110");
  EXPECT_EQ(b.to_string(), "0110");
  EXPECT_EQ(b.count(), 2u);
  EXPECT_EQ(BitVector::from_spins(b.to_spins()), b);
  EXPECT_EQ(BitVector::from_mask(0b0110, 4), b);
  EXPECT_THROW(BitVector::from_string("01x"), DomainError);
  const SpinVector bad{1, 0};
  EXPECT_THROW(BitVector::from_spins(bad), DomainError);
}

TEST(BitVector, OrderingIsLengthThenValue) {
  EXPECT_LT(BitVector::from_string("11"), BitVector::from_string("000"));
  EXPECT_LT(BitVector::from_string("100"), BitVector::from_string("010"));
}

TEST(Hamming, Examples) {
  const auto x = BitVector::from_string("000111");
  EXPECT_EQ(hamming_distance(x, x), 0u);
  EXPECT_EQ(hamming_distance(x, BitVector::from_string("010101")), 2u);
  std::mt19937_64 rng(3);
  auto y = oracle::random_bits(rng, 12);
  auto comp = y;
  for (std::size_t i = 0; i < 12; ++i) comp.flip(i);
  EXPECT_EQ(hamming_distance(y, comp), 12u);
  EXPECT_THROW(hamming_distance(x, BitVector(5)), DimensionError);
}

TEST(HammingProperty, IsAMetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const auto x = oracle::random_bits(rng, n);
    const auto y = trial % 7 == 0 ? x : oracle::random_bits(rng, n);
    const auto z = oracle::random_bits(rng, n);
    const auto dxy = hamming_distance(x, y);
    EXPECT_EQ(dxy, hamming_distance(y, x));
    EXPECT_EQ(dxy == 0, x == y);
    EXPECT_LE(dxy, n);
    EXPECT_LE(hamming_distance(x, z), dxy + hamming_distance(y, z));
  }
}

TEST(SparseModel, MatchesDenseLocalFields) {
  std::mt19937_64 rng(9);
  const auto p = oracle::random_qubo(rng, 8);
  const auto m = SparseModel::from(p);
  const auto d = oracle::dense(p);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_DOUBLE_EQ(m.diag[i], d.at(i, i));
    double row = 0.0;
    for (std::size_t k = m.row_begin[i]; k < m.row_begin[i + 1]; ++k) {
      EXPECT_DOUBLE_EQ(m.val[k], d.at(std::min(i, m.col[k]), std::max(i, m.col[k])));
      row += m.val[k];
    }
    double expected = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
      if (j != i) expected += d.at(std::min(i, j), std::max(i, j));
    }
    EXPECT_NEAR(row, expected, 1e-12);
  }
}

TEST(Fingerprint, DistinguishesProblems) {
  const QuboProblem a(2, {{0, 1, 1.0}});
  const QuboProblem b(2, {{0, 1, 2.0}});
  EXPECT_EQ(fingerprint(a), fingerprint(QuboProblem(2, {{1, 0, 1.0}})));
  EXPECT_NE(fingerprint(a), fingerprint(b));
}
