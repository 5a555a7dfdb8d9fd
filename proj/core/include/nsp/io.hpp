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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "nsp/nsp_model.hpp"
#include "nsp/qubo.hpp"
#include "nsp/sample_set.hpp"

namespace nsp {

// Schema version written into every JSON document.
inline constexpr int kSchemaVersion = 1;

// {"version", "kind": "qubo", "num_vars", "terms": [[i, j, c], ...], "offset"}
nlohmann::json to_json(const QuboProblem& p);
QuboProblem qubo_from_json(const nlohmann::json& j);

// {"version", "kind": "ising", "num_vars", "terms": [[i, j, J], ...],
//  "fields": [...], "offset"}
nlohmann::json to_json(const IsingProblem& p);
IsingProblem ising_from_json(const nlohmann::json& j);

// {"version", "N", "D", "shifts_per_day", "lambda", "gamma", "eta", "a",
//  "E", "W", "F", "h1", "h2": [...] | {"alpha", "h2prime"}, "g"?}
nlohmann::json to_json(const NspInstance& inst);
// Validates the decoded instance. Throws ConfigError on malformed input.
NspInstance instance_from_json(const nlohmann::json& j);

// {"version", "solver", "seed", "fingerprint", "truncated", "schedule",
//  "num_reads", "samples": [{"bits": "0101", "energy", "count"}, ...]}
nlohmann::json to_json(const SampleSet& s);
SampleSet sample_set_from_json(const nlohmann::json& j);

// Reads a JSON document; throws ConfigError when missing or unparsable.
nlohmann::json read_json_file(const std::filesystem::path& path);
// Writes `j` with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

// Canonical text of a JSON document (compact dump), used for hashing.
std::string canonical_dump(const nlohmann::json& j);
// FNV-1a 64 digest of canonical_dump(j), 16 hex digits.
std::string content_hash(const nlohmann::json& j);

}  // namespace nsp
