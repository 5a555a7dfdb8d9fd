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

#include "nsp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nsp/error.hpp"

namespace nsp {
namespace {

using nlohmann::json;

void check_version(const json& j, const char* what) {
  if (!j.is_object()) throw ConfigError(std::string(what) + ": expected a JSON object");
  const int v = j.value("version", kSchemaVersion);
  if (v != kSchemaVersion) {
    throw ConfigError(std::string(what) + ": unsupported schema version " + std::to_string(v));
  }
}

template <class Fn>
auto decode(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

json terms_to_json(std::span<const QuboTerm> terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back(json::array({t.i, t.j, t.value}));
  return arr;
}

std::vector<QuboTerm> terms_from_json(const json& arr) {
  std::vector<QuboTerm> out;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3) throw ConfigError("terms entries must be [i, j, value]");
    out.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<double>()});
  }
  return out;
}

}  // namespace

json to_json(const QuboProblem& p) {
  return {{"version", kSchemaVersion},
          {"kind", "qubo"},
          {"num_vars", p.num_vars()},
          {"terms", terms_to_json(p.terms())},
          {"offset", p.offset()}};
}

QuboProblem qubo_from_json(const json& j) {
  check_version(j, "qubo");
  return decode("qubo", [&] {
    return QuboProblem(j.at("num_vars").get<std::size_t>(), terms_from_json(j.at("terms")),
                       j.value("offset", 0.0));
  });
}

json to_json(const IsingProblem& p) {
  return {{"version", kSchemaVersion},
          {"kind", "ising"},
          {"num_vars", p.num_vars()},
          {"terms", terms_to_json(p.couplings())},
          {"fields", std::vector<double>(p.fields().begin(), p.fields().end())},
          {"offset", p.offset()}};
}

IsingProblem ising_from_json(const json& j) {
  check_version(j, "ising");
  return decode("ising", [&] {
    const auto n = j.at("num_vars").get<std::size_t>();
    auto fields = j.contains("fields") ? j["fields"].get<std::vector<double>>()
                                       : std::vector<double>(n, 0.0);
    return IsingProblem(n, terms_from_json(j.at("terms")), std::move(fields),
                        j.value("offset", 0.0));
  });
}

json to_json(const NspInstance& inst) {
  json j = {{"version", kSchemaVersion},
            {"N", inst.nurses},
            {"D", inst.days},
            {"shifts_per_day", inst.shifts_per_day},
            {"lambda", inst.lambda},
            {"gamma", inst.gamma},
            {"eta", inst.eta},
            {"a", inst.a},
            {"E", inst.effort},
            {"W", inst.workforce},
            {"F", inst.duty_target},
            {"h1", inst.nurse_load}};
  if (!inst.alpha.empty() && !inst.h2_prime.empty()) {
    j["h2"] = {{"alpha", inst.alpha}, {"h2prime", inst.h2_prime}};
  } else {
    j["h2"] = inst.slot_weight;
  }
  if (!inst.dayoff.empty()) j["g"] = inst.dayoff;
  return j;
}

NspInstance instance_from_json(const json& j) {
  check_version(j, "instance");
  NspInstance inst = decode("instance", [&] {
    NspInstance x;
    x.nurses = j.at("N").get<std::size_t>();
    x.days = j.at("D").get<std::size_t>();
    x.shifts_per_day = j.value("shifts_per_day", std::size_t{1});
    x.lambda = j.at("lambda").get<double>();
    x.gamma = j.at("gamma").get<double>();
    x.eta = j.value("eta", 0.0);
    x.a = j.at("a").get<double>();
    x.effort = j.at("E").get<std::vector<double>>();
    x.workforce = j.at("W").get<std::vector<double>>();
    x.duty_target = j.at("F").get<std::vector<double>>();
    x.nurse_load = j.at("h1").get<std::vector<double>>();
    const json& h2 = j.at("h2");
    if (h2.is_object()) {
      x.alpha = h2.at("alpha").get<std::vector<double>>();
      x.h2_prime = h2.at("h2prime").get<std::vector<double>>();
      if (x.alpha.size() != x.days || x.h2_prime.size() != x.shifts_per_day) {
        throw ConfigError("instance: alpha needs D entries and h2prime shifts_per_day entries");
      }
      x.slot_weight.resize(x.num_slots());
      for (std::size_t d = 0; d < x.days; ++d) {
        for (std::size_t t = 0; t < x.shifts_per_day; ++t) {
          x.slot_weight[d * x.shifts_per_day + t] = x.alpha[d] * x.h2_prime[t];
        }
      }
    } else {
      x.slot_weight = h2.get<std::vector<double>>();
    }
    if (j.contains("g") && !j["g"].is_null()) {
      x.dayoff = j["g"].get<std::vector<std::vector<double>>>();
    }
    return x;
  });
  inst.validate();
  return inst;
}

json to_json(const SampleSet& s) {
  json samples = json::array();
  for (const auto& x : s.samples) {
    samples.push_back({{"bits", x.bits.to_string()}, {"energy", x.energy}, {"count", x.count}});
  }
  return {{"version", kSchemaVersion},
          {"solver", s.solver},
          {"seed", s.seed},
          {"fingerprint", s.fingerprint},
          {"truncated", s.truncated},
          {"schedule", s.schedule},
          {"num_reads", s.num_reads},
          {"samples", std::move(samples)}};
}

SampleSet sample_set_from_json(const json& j) {
  check_version(j, "sample set");
  return decode("sample set", [&] {
    SampleSet s;
    s.solver = j.value("solver", std::string{});
    s.seed = j.value("seed", std::uint64_t{0});
    s.fingerprint = j.value("fingerprint", std::string{});
    s.truncated = j.value("truncated", false);
    s.schedule = j.value("schedule", json::object());
    std::size_t total = 0;
    for (const auto& x : j.at("samples")) {
      Sample sample{BitVector::from_string(x.at("bits").get<std::string>()),
                    x.at("energy").get<double>(), x.value("count", std::size_t{1})};
      total += sample.count;
      s.samples.push_back(std::move(sample));
    }
    s.num_reads = j.value("num_reads", total);
    if (s.num_reads != total) {
      throw ConfigError("sample set: num_reads " + std::to_string(s.num_reads) +
                        " != sum of counts " + std::to_string(total));
    }
    return s;
  });
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string content_hash(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_dump(j)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nsp
