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

#include "nsp/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <string>

#include "nsp/error.hpp"

namespace nsp {
namespace {

// Sorts by (i, j) and merges equal keys. Assumes i <= j already.
std::vector<QuboTerm> canonicalize(std::vector<QuboTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const QuboTerm& a, const QuboTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<QuboTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().i == t.i && out.back().j == t.j) {
      out.back().value += t.value;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const QuboTerm& t) { return t.value == 0.0; });
  return out;
}

void check_index(std::size_t k, std::size_t n) {
  if (k >= n) {
    throw DimensionError("term index " + std::to_string(k) +
                         " out of range for " + std::to_string(n) +
                         " variables");
  }
}

class Fnv1a {
 public:
  void add(std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      hash_ ^= (word >> (8 * b)) & 0xFFU;
      hash_ *= 0x100000001b3ULL;
    }
  }
  void add(double x) { add(std::bit_cast<std::uint64_t>(x)); }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

QuboProblem::QuboProblem(std::size_t num_vars, std::vector<QuboTerm> terms,
                         double offset)
    : num_vars_(num_vars), offset_(offset) {
  for (auto& t : terms) {
    check_index(t.i, num_vars);
    check_index(t.j, num_vars);
    if (t.i > t.j) std::swap(t.i, t.j);
  }
  terms_ = canonicalize(std::move(terms));
}

double QuboProblem::coefficient(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), std::pair{i, j},
      [](const QuboTerm& t, const std::pair<std::size_t, std::size_t>& key) {
        return t.i != key.first ? t.i < key.first : t.j < key.second;
      });
  if (it != terms_.end() && it->i == i && it->j == j) return it->value;
  return 0.0;
}

IsingProblem::IsingProblem(std::size_t num_vars, std::vector<QuboTerm> couplings,
                           std::vector<double> fields, double offset)
    : num_vars_(num_vars), fields_(std::move(fields)), offset_(offset) {
  if (fields_.size() != num_vars) {
    throw DimensionError("ising fields have length " +
                         std::to_string(fields_.size()) + ", expected " +
                         std::to_string(num_vars));
  }
  for (auto& c : couplings) {
    check_index(c.i, num_vars);
    check_index(c.j, num_vars);
    if (c.i == c.j) throw DomainError("ising self-coupling on spin " + std::to_string(c.i));
    if (c.i > c.j) std::swap(c.i, c.j);
  }
  couplings_ = canonicalize(std::move(couplings));
}

double energy(const QuboProblem& p, const BitVector& q) {
  if (q.size() != p.num_vars()) {
    throw DimensionError("energy: assignment length " + std::to_string(q.size()) +
                         " != num_vars " + std::to_string(p.num_vars()));
  }
  double e = p.offset();
  for (const auto& t : p.terms()) {
    if (q[t.i] && q[t.j]) e += t.value;
  }
  return e;
}

double energy(const IsingProblem& p, std::span<const std::int8_t> s) {
  if (s.size() != p.num_vars()) {
    throw DimensionError("energy: spin vector length " + std::to_string(s.size()) +
                         " != num_vars " + std::to_string(p.num_vars()));
  }
  for (auto v : s) {
    if (v != 1 && v != -1) throw DomainError("spin value must be -1 or +1");
  }
  double e = p.offset();
  for (const auto& c : p.couplings()) e += c.value * s[c.i] * s[c.j];
  const auto h = p.fields();
  for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * s[i];
  return e;
}

IsingProblem to_ising(const QuboProblem& p) {
  std::vector<double> h(p.num_vars(), 0.0);
  std::vector<QuboTerm> j;
  double offset = p.offset();
  for (const auto& t : p.terms()) {
    if (t.i == t.j) {
      // c q = c (s + 1) / 2
      h[t.i] += t.value / 2;
      offset += t.value / 2;
    } else {
      // c q_i q_j = c (s_i s_j + s_i + s_j + 1) / 4
      const double quarter = t.value / 4;
      j.push_back({t.i, t.j, quarter});
      h[t.i] += quarter;
      h[t.j] += quarter;
      offset += quarter;
    }
  }
  return IsingProblem(p.num_vars(), std::move(j), std::move(h), offset);
}

QuboProblem to_qubo(const IsingProblem& p) {
  std::vector<QuboTerm> terms;
  double offset = p.offset();
  const auto h = p.fields();
  for (std::size_t i = 0; i < h.size(); ++i) {
    // h s = 2h q - h
    if (h[i] != 0.0) terms.push_back({i, i, 2 * h[i]});
    offset -= h[i];
  }
  for (const auto& c : p.couplings()) {
    // J s_i s_j = 4J q_i q_j - 2J q_i - 2J q_j + J
    terms.push_back({c.i, c.j, 4 * c.value});
    terms.push_back({c.i, c.i, -2 * c.value});
    terms.push_back({c.j, c.j, -2 * c.value});
    offset += c.value;
  }
  return QuboProblem(p.num_vars(), std::move(terms), offset);
}

std::string fingerprint(const QuboProblem& p) {
  Fnv1a h;
  h.add(std::uint64_t{0x51});  // 'Q'
  h.add(static_cast<std::uint64_t>(p.num_vars()));
  for (const auto& t : p.terms()) {
    h.add(static_cast<std::uint64_t>(t.i));
    h.add(static_cast<std::uint64_t>(t.j));
    h.add(t.value);
  }
  h.add(p.offset());
  return h.hex();
}

std::string fingerprint(const IsingProblem& p) {
  Fnv1a h;
  h.add(std::uint64_t{0x49});  // 'I'
  h.add(static_cast<std::uint64_t>(p.num_vars()));
  for (const auto& c : p.couplings()) {
    h.add(static_cast<std::uint64_t>(c.i));
    h.add(static_cast<std::uint64_t>(c.j));
    h.add(c.value);
  }
  for (double v : p.fields()) h.add(v);
  h.add(p.offset());
  return h.hex();
}

namespace {

SparseModel build_sparse(std::size_t n, std::span<const QuboTerm> offdiag,
                         std::vector<double> diag, double offset) {
  SparseModel m;
  m.diag = std::move(diag);
  m.offset = offset;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& t : offdiag) {
    ++degree[t.i];
    ++degree[t.j];
  }
  m.row_begin.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) m.row_begin[i + 1] = m.row_begin[i] + degree[i];
  m.col.resize(m.row_begin[n]);
  m.val.resize(m.row_begin[n]);
  std::vector<std::size_t> cursor(m.row_begin.begin(), m.row_begin.end() - 1);
  for (const auto& t : offdiag) {
    m.col[cursor[t.i]] = t.j;
    m.val[cursor[t.i]++] = t.value;
    m.col[cursor[t.j]] = t.i;
    m.val[cursor[t.j]++] = t.value;
  }
  return m;
}

}  // namespace

SparseModel SparseModel::from(const QuboProblem& p) {
  std::vector<double> diag(p.num_vars(), 0.0);
  std::vector<QuboTerm> off;
  for (const auto& t : p.terms()) {
    if (t.i == t.j) {
      diag[t.i] += t.value;
    } else {
      off.push_back(t);
    }
  }
  return build_sparse(p.num_vars(), off, std::move(diag), p.offset());
}

SparseModel SparseModel::from(const IsingProblem& p) {
  return build_sparse(p.num_vars(), p.couplings(),
                      std::vector<double>(p.fields().begin(), p.fields().end()),
                      p.offset());
}

}  // namespace nsp
