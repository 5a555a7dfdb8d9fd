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

#include "nsp/bit_vector.hpp"

#include <algorithm>
#include <string>

#include "nsp/error.hpp"

namespace nsp {

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw DomainError("bit value must be 0 or 1");
  }
}

BitVector BitVector::from_string(std::string_view text) {
  BitVector out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.bits_[i] = 1;
    } else if (text[i] != '0') {
      throw DomainError("bit string may contain only '0' and '1': '" +
                        std::string(text) + "'");
    }
  }
  return out;
}

BitVector BitVector::from_spins(std::span<const std::int8_t> spins) {
  BitVector out(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (spins[i] == 1) {
      out.bits_[i] = 1;
    } else if (spins[i] != -1) {
      throw DomainError("spin value must be -1 or +1");
    }
  }
  return out;
}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t size) {
  BitVector out(size);
  for (std::size_t i = 0; i < size && i < 64; ++i) {
    out.bits_[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  }
  return out;
}

std::size_t BitVector::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitVector::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

SpinVector BitVector::to_spins() const {
  SpinVector out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i] = bits_[i] ? 1 : -1;
  }
  return out;
}

std::strong_ordering operator<=>(const BitVector& lhs,
                                 const BitVector& rhs) noexcept {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  for (std::size_t k = lhs.size(); k-- > 0;) {
    if (auto c = lhs.bits_[k] <=> rhs.bits_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t hamming_distance(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("hamming_distance: lengths " +
                         std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " differ");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
  return d;
}

}  // namespace nsp
