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
#include <span>
#include <string>
#include <vector>

#include "nsp/bit_vector.hpp"

namespace nsp {

// Absolute tolerance for comparing energies at API boundaries.
inline constexpr double kEnergyTolerance = 1e-6;
// Absolute tolerance for internal consistency checks and degeneracy.
inline constexpr double kInternalTolerance = 1e-9;

struct QuboTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0.0;

  friend bool operator==(const QuboTerm&, const QuboTerm&) = default;
};

// Minimize  sum_{i<=j} c_ij q_i q_j + offset  over q in {0,1}^n.
//
// Diagonal entries c_ii are the linear terms (q_i^2 = q_i). Terms are stored
// once per unordered pair, sorted by (i, j); the constructor folds (j, i) onto
// (i, j), merges duplicates and drops entries that sum to exactly zero.
class QuboProblem {
 public:
  QuboProblem() = default;
  QuboProblem(std::size_t num_vars, std::vector<QuboTerm> terms,
              double offset = 0.0);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const QuboTerm> terms() const noexcept { return terms_; }
  double offset() const noexcept { return offset_; }

  // c_ij for the unordered pair {i, j}, or 0 when absent.
  double coefficient(std::size_t i, std::size_t j) const;

  friend bool operator==(const QuboProblem&, const QuboProblem&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<QuboTerm> terms_;
  double offset_ = 0.0;
};

// Ising model  sum_{i<j} J_ij s_i s_j + sum_i h_i s_i + offset  over s in
// {-1,+1}^n. Couplings are stored with i < j, sorted, merged, zero-free.
class IsingProblem {
 public:
  IsingProblem() = default;
  // Throws DomainError on a self-coupling, DimensionError on a field vector
  // of the wrong length or an out-of-range index.
  IsingProblem(std::size_t num_vars, std::vector<QuboTerm> couplings,
               std::vector<double> fields, double offset = 0.0);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const QuboTerm> couplings() const noexcept { return couplings_; }
  std::span<const double> fields() const noexcept { return fields_; }
  double offset() const noexcept { return offset_; }

  friend bool operator==(const IsingProblem&, const IsingProblem&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<QuboTerm> couplings_;
  std::vector<double> fields_;
  double offset_ = 0.0;
};

double energy(const QuboProblem& p, const BitVector& q);
double energy(const IsingProblem& p, std::span<const std::int8_t> s);

// Exact change of variables q = (s + 1) / 2.
IsingProblem to_ising(const QuboProblem& p);
// Inverse change of variables s = 2q - 1.
QuboProblem to_qubo(const IsingProblem& p);

// 64-bit FNV-1a digest of the canonical term list, as 16 hex digits.
std::string fingerprint(const QuboProblem& p);
std::string fingerprint(const IsingProblem& p);

// Symmetric compressed-row view of a problem for the local-search solvers:
// diag[i] is the linear coefficient of variable i and each off-diagonal entry
// appears in both rows.
struct SparseModel {
  std::vector<double> diag;
  std::vector<std::size_t> row_begin;
  std::vector<std::size_t> col;
  std::vector<double> val;
  double offset = 0.0;

  std::size_t size() const noexcept { return diag.size(); }

  static SparseModel from(const QuboProblem& p);
  static SparseModel from(const IsingProblem& p);
};

}  // namespace nsp
