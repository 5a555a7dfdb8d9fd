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

#include "nsp/engine.hpp"

#include <string>

#include "nsp/error.hpp"

namespace nsp {

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::exact: return "exact";
    case Engine::forward: return "forward";
    case Engine::reverse: return "reverse";
    case Engine::tabu: return "tabu";
    case Engine::decompose: return "decompose";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  for (Engine e : {Engine::exact, Engine::forward, Engine::reverse, Engine::tabu, Engine::decompose}) {
    if (name == to_string(e)) return e;
  }
  throw ConfigError("unknown engine '" + std::string(name) +
                    "' (expected exact, forward, reverse, tabu or decompose)");
}

nlohmann::json EngineConfig::to_json() const {
  nlohmann::json j;
  j["engine"] = std::string(to_string(engine));
  j["seed"] = seed;
  switch (engine) {
    case Engine::exact:
      j["exact_cap"] = exact_cap;
      break;
    case Engine::forward:
      j["num_reads"] = num_reads;
      j["forward"] = forward.to_json();
      break;
    case Engine::reverse:
      j["num_reads"] = num_reads;
      j["forward"] = forward.to_json();
      j["reverse"] = reverse.to_json();
      j["policy"] = std::string(to_string(policy));
      break;
    case Engine::tabu:
    case Engine::decompose:
      j["tabu"] = tabu.to_json();
      break;
  }
  return j;
}

SampleSet run_engine(const QuboProblem& qubo, const EngineConfig& cfg, const SampleSet* candidates) {
  switch (cfg.engine) {
    case Engine::exact:
      return to_sample_set(enumerate_ground_states(qubo, cfg.exact_cap, cfg.jobs), qubo);
    case Engine::forward: {
      AnnealSchedule sched = cfg.forward;
      sched.mode = AnnealMode::forward;
      sched.seed = cfg.seed;
      return forward_anneal(to_ising(qubo), sched, cfg.num_reads, cfg.jobs);
    }
    case Engine::reverse: {
      const IsingProblem ising = to_ising(qubo);
      AnnealSchedule sched = cfg.reverse;
      sched.mode = AnnealMode::reverse;
      sched.seed = cfg.seed;
      if (candidates) return refine(ising, *candidates, sched, cfg.num_reads, cfg.policy, cfg.jobs);
      AnnealSchedule fwd = cfg.forward;
      fwd.mode = AnnealMode::forward;
      fwd.seed = cfg.seed;
      const SampleSet seeds = forward_anneal(ising, fwd, cfg.num_reads, cfg.jobs);
      return refine(ising, seeds, sched, cfg.num_reads, cfg.policy, cfg.jobs);
    }
    case Engine::tabu: {
      TabuConfig tc = cfg.tabu;
      tc.seed = cfg.seed;
      return tabu_solve(qubo, tc, cfg.jobs);
    }
    case Engine::decompose: {
      TabuConfig tc = cfg.tabu;
      tc.seed = cfg.seed;
      return decompose_solve(qubo, tc, cfg.jobs);
    }
  }
  throw ConfigError("unhandled engine");
}

}  // namespace nsp
