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

// Reference implementations used as oracles. They deliberately avoid the
// library's algorithms: dense matrices, direct penalty sums, plain loops.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "nsp/bit_vector.hpp"
#include "nsp/nsp_model.hpp"
#include "nsp/qubo.hpp"

namespace oracle {

struct DenseQubo {
  std::size_t n = 0;
  std::vector<double> c;  // row-major n x n, upper triangle used
  double offset = 0.0;

  double& at(std::size_t i, std::size_t j) { return c[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return c[i * n + j]; }
};

inline DenseQubo dense(const nsp::QuboProblem& p) {
  DenseQubo d{p.num_vars(), std::vector<double>(p.num_vars() * p.num_vars(), 0.0), p.offset()};
  for (const auto& t : p.terms()) d.at(std::min(t.i, t.j), std::max(t.i, t.j)) += t.value;
  return d;
}

inline double energy(const DenseQubo& d, const std::vector<int>& q) {
  double e = d.offset;
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = i; j < d.n; ++j) e += d.at(i, j) * q[i] * q[j];
  }
  return e;
}

inline std::vector<int> bits_of(std::uint64_t mask, std::size_t n) {
  std::vector<int> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = static_cast<int>((mask >> i) & 1U);
  return q;
}

inline std::vector<int> bits_of(const nsp::BitVector& b) {
  return {b.bits().begin(), b.bits().end()};
}

struct BruteForce {
  double energy = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> argmin;
};

// Plain loop over all 2^n assignments in mask order.
inline BruteForce brute_force(const nsp::QuboProblem& p, double tol = 1e-9) {
  const DenseQubo d = dense(p);
  BruteForce out;
  std::vector<double> energies(std::uint64_t{1} << d.n);
  for (std::uint64_t m = 0; m < energies.size(); ++m) {
    energies[m] = energy(d, bits_of(m, d.n));
    out.energy = std::min(out.energy, energies[m]);
  }
  for (std::uint64_t m = 0; m < energies.size(); ++m) {
    if (energies[m] <= out.energy + tol) out.argmin.push_back(m);
  }
  return out;
}

// The NSP objective written directly from its penalty terms on a roster
// x[n][slot].
inline double nsp_energy(const nsp::NspInstance& inst, const std::vector<int>& q) {
  const std::size_t S = inst.num_slots();
  auto x = [&](std::size_t n, std::size_t k) { return q[n * S + k]; };
  double consecutive = 0.0;
  for (std::size_t n = 0; n < inst.nurses; ++n) {
    for (std::size_t k = 0; k + 1 < S; ++k) consecutive += x(n, k) * x(n, k + 1);
  }
  double workforce = 0.0;
  for (std::size_t k = 0; k < S; ++k) {
    double staff = 0.0;
    for (std::size_t n = 0; n < inst.nurses; ++n) staff += inst.effort[n] * x(n, k);
    workforce += (staff - inst.workforce[k]) * (staff - inst.workforce[k]);
  }
  double duty = 0.0;
  for (std::size_t n = 0; n < inst.nurses; ++n) {
    double load = 0.0;
    for (std::size_t k = 0; k < S; ++k) load += inst.nurse_load[n] * inst.slot_weight[k] * x(n, k);
    duty += (load - inst.duty_target[n]) * (load - inst.duty_target[n]);
  }
  double dayoff = 0.0;
  if (!inst.dayoff.empty()) {
    for (std::size_t n = 0; n < inst.nurses; ++n) {
      for (std::size_t k = 0; k < S; ++k) dayoff += inst.dayoff[n][k] * x(n, k);
    }
  }
  return inst.a * consecutive + inst.lambda * workforce + inst.gamma * duty + inst.eta * dayoff;
}

// Hard-constraint satisfaction checked directly on the roster.
inline bool nsp_satisfied(const nsp::NspInstance& inst, const std::vector<int>& q) {
  const std::size_t S = inst.num_slots();
  auto x = [&](std::size_t n, std::size_t k) { return q[n * S + k]; };
  for (std::size_t n = 0; n < inst.nurses; ++n) {
    for (std::size_t k = 0; k + 1 < S; ++k) {
      if (x(n, k) && x(n, k + 1)) return false;
    }
  }
  for (std::size_t k = 0; k < S; ++k) {
    double staff = 0.0;
    for (std::size_t n = 0; n < inst.nurses; ++n) staff += inst.effort[n] * x(n, k);
    if (std::abs(staff - inst.workforce[k]) > 1e-9) return false;
  }
  for (std::size_t n = 0; n < inst.nurses; ++n) {
    double load = 0.0;
    for (std::size_t k = 0; k < S; ++k) load += inst.nurse_load[n] * inst.slot_weight[k] * x(n, k);
    if (std::abs(load - inst.duty_target[n]) > 1e-9) return false;
  }
  return true;
}

inline nsp::QuboProblem random_qubo(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::bernoulli_distribution keep(density);
  std::vector<nsp::QuboTerm> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (keep(rng)) terms.push_back({i, j, coef(rng)});
    }
  }
  return nsp::QuboProblem(n, std::move(terms), coef(rng));
}

inline nsp::BitVector random_bits(std::mt19937_64& rng, std::size_t n) {
  nsp::BitVector b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, (rng() & 1U) != 0);
  return b;
}

// A paper-base instance of the given size with perturbed weights and targets.
inline nsp::NspInstance random_instance(std::mt19937_64& rng, std::size_t nurses, std::size_t days) {
  nsp::NspInstance inst = nsp::make_paper_base(nurses, days);
  std::uniform_real_distribution<double> weight(0.2, 2.0);
  inst.lambda = weight(rng);
  inst.gamma = weight(rng);
  inst.a = 1.0 + 3.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::uniform_int_distribution<int> bump(0, 1);
  for (auto& f : inst.duty_target) f += bump(rng);
  return inst;
}

}  // namespace oracle
