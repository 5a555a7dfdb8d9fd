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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsp {

using SpinVector = std::vector<std::int8_t>;

// Assignment of binary variables q_0 .. q_{n-1}.
//
// Ordering compares the vectors as unsigned integers with q_i carrying weight
// 2^i, so (1,0) < (0,1). Vectors of different length order by length first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : bits_(size, 0) {}
  // Throws DomainError if any entry is not 0 or 1.
  explicit BitVector(std::vector<std::uint8_t> bits);

  // Parses a string of '0'/'1' characters; position k is q_k.
  static BitVector from_string(std::string_view text);
  // Maps s = 2q - 1; throws DomainError on entries other than -1/+1.
  static BitVector from_spins(std::span<const std::int8_t> spins);
  // Low `size` bits of `mask`, bit i giving q_i.
  static BitVector from_mask(std::uint64_t mask, std::size_t size);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  void flip(std::size_t i) { bits_.at(i) ^= 1U; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t count() const noexcept;

  std::string to_string() const;
  SpinVector to_spins() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& lhs,
                                          const BitVector& rhs) noexcept;

 private:
  std::vector<std::uint8_t> bits_;
};

// Number of positions where x and y differ. Throws DimensionError on a length
// mismatch.
std::size_t hamming_distance(const BitVector& x, const BitVector& y);

}  // namespace nsp
