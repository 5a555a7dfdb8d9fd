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
#include <string_view>

#include <nlohmann/json.hpp>

#include "nsp/anneal.hpp"
#include "nsp/exact.hpp"
#include "nsp/qubo.hpp"
#include "nsp/sample_set.hpp"
#include "nsp/tabu.hpp"

namespace nsp {

enum class Engine { exact, forward, reverse, tabu, decompose };

std::string_view to_string(Engine engine) noexcept;
// Throws ConfigError on an unknown name.
Engine parse_engine(std::string_view name);

// Everything needed to run one engine reproducibly. `seed` overrides the
// seeds carried by the nested schedule/config.
struct EngineConfig {
  Engine engine = Engine::forward;
  std::size_t num_reads = 1000;
  AnnealSchedule forward = AnnealSchedule::forward_default();
  AnnealSchedule reverse = AnnealSchedule::reverse_default();
  SelectionPolicy policy = SelectionPolicy::lowest_energy;
  TabuConfig tabu;
  std::size_t exact_cap = kExactVariableCap;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  nlohmann::json to_json() const;
};

// Solves `qubo` with the configured engine. The reverse engine refines
// `candidates` when given; otherwise it first runs a forward anneal with the
// same seed and read count and refines that.
SampleSet run_engine(const QuboProblem& qubo, const EngineConfig& cfg,
                     const SampleSet* candidates = nullptr);

}  // namespace nsp
