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

#include "nsp/sample_set.hpp"

#include <algorithm>

#include "nsp/error.hpp"

namespace nsp {

const Sample& SampleSet::best() const {
  if (samples.empty()) throw UndefinedStatisticError("best(): sample set is empty");
  return *std::min_element(samples.begin(), samples.end(),
                           [](const Sample& a, const Sample& b) {
                             return a.energy != b.energy ? a.energy < b.energy
                                                         : a.bits < b.bits;
                           });
}

double SampleSet::mean_energy() const {
  std::size_t total = 0;
  double sum = 0.0;
  for (const auto& s : samples) {
    total += s.count;
    sum += s.energy * static_cast<double>(s.count);
  }
  if (total == 0) throw UndefinedStatisticError("mean_energy: sample set is empty");
  return sum / static_cast<double>(total);
}

std::vector<Sample> aggregate_reads(std::vector<Sample> reads) {
  std::sort(reads.begin(), reads.end(), [](const Sample& a, const Sample& b) {
    return a.energy != b.energy ? a.energy < b.energy : a.bits < b.bits;
  });
  std::vector<Sample> out;
  out.reserve(reads.size());
  for (auto& r : reads) {
    if (!out.empty() && out.back().bits == r.bits) {
      out.back().count += r.count;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace nsp
