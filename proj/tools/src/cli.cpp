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

#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nsp/engine.hpp"
#include "nsp/error.hpp"
#include "nsp/io.hpp"
#include "nsp/nsp_model.hpp"
#include "nsp/stats.hpp"

#ifndef NSP_VERSION
#define NSP_VERSION "0.0.0"
#endif

namespace nsp::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct EngineOptions {
  std::string engine = "forward";
  std::size_t reads = 1000;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t sweeps = AnnealSchedule::forward_default().total_sweeps;
  double t_max = 0.0;
  double t_min = AnnealSchedule::forward_default().t_min;
  double s_target = AnnealSchedule::reverse_default().s_target;
  std::size_t hold_sweeps = AnnealSchedule::reverse_default().hold_sweeps;
  std::size_t ramp_sweeps = AnnealSchedule::reverse_default().ramp_sweeps;
  std::string policy = "lowest-energy";
  std::size_t tenure = TabuConfig{}.tenure;
  std::size_t max_restarts = TabuConfig{}.max_restarts;
  std::size_t subproblem_size = TabuConfig{}.subproblem_size;
  double time_budget = TabuConfig{}.time_budget;
  double target_energy = 0.0;
  std::size_t exact_cap = kExactVariableCap;

  CLI::Option* seed_opt = nullptr;
  CLI::Option* t_max_opt = nullptr;
  CLI::Option* target_opt = nullptr;
};

void add_engine_options(CLI::App& app, EngineOptions& o) {
  app.add_option("--engine", o.engine, "exact, forward, reverse, tabu or decompose")
      ->check(CLI::IsMember({"exact", "forward", "reverse", "tabu", "decompose"}))
      ->capture_default_str();
  app.add_option("--reads", o.reads, "anneal reads")->capture_default_str();
  o.seed_opt = app.add_option("--seed", o.seed, "master seed (drawn and recorded when absent)");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--sweeps", o.sweeps, "forward anneal sweeps")->check(CLI::PositiveNumber)->capture_default_str();
  o.t_max_opt = app.add_option("--t-max", o.t_max, "initial temperature")->check(CLI::PositiveNumber);
  app.add_option("--t-min", o.t_min, "final temperature")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--s-target", o.s_target, "reverse anneal turning point")->capture_default_str();
  app.add_option("--hold-sweeps", o.hold_sweeps, "reverse anneal hold")->capture_default_str();
  app.add_option("--ramp-sweeps", o.ramp_sweeps, "reverse anneal ramp length")->capture_default_str();
  app.add_option("--policy", o.policy, "refine selection policy")
      ->check(CLI::IsMember({"lowest-energy", "uniform-random"}))
      ->capture_default_str();
  app.add_option("--tenure", o.tenure, "tabu tenure")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-restarts", o.max_restarts, "tabu restarts")->capture_default_str();
  app.add_option("--subproblem-size", o.subproblem_size, "decomposition block size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--time-budget", o.time_budget, "tabu time budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  o.target_opt = app.add_option("--target-energy", o.target_energy, "stop tabu at this energy");
  app.add_option("--exact-cap", o.exact_cap, "largest problem enumerated exactly")
      ->check(CLI::Range(std::size_t{1}, kExactVariableCap))
      ->capture_default_str();
}

std::uint64_t draw_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

EngineConfig make_engine_config(const EngineOptions& o, std::uint64_t seed) {
  EngineConfig cfg;
  cfg.engine = parse_engine(o.engine);
  cfg.num_reads = o.reads;
  cfg.seed = seed;
  cfg.jobs = o.jobs;
  cfg.exact_cap = o.exact_cap;

  cfg.forward = AnnealSchedule::forward_default(seed);
  cfg.forward.total_sweeps = o.sweeps;
  cfg.forward.t_min = o.t_min;
  cfg.reverse = AnnealSchedule::reverse_default(seed);
  cfg.reverse.t_min = o.t_min;
  cfg.reverse.s_target = o.s_target;
  cfg.reverse.hold_sweeps = o.hold_sweeps;
  cfg.reverse.ramp_sweeps = o.ramp_sweeps;
  if (o.t_max_opt->count() > 0) {
    cfg.forward.t_max = o.t_max;
    cfg.reverse.t_max = o.t_max;
  }
  cfg.policy = parse_selection_policy(o.policy);

  cfg.tabu.tenure = o.tenure;
  cfg.tabu.max_restarts = o.max_restarts;
  cfg.tabu.subproblem_size = o.subproblem_size;
  cfg.tabu.time_budget = o.time_budget;
  if (o.target_opt->count() > 0) cfg.tabu.target_energy = o.target_energy;
  cfg.tabu.seed = seed;

  cfg.forward.validate();
  cfg.reverse.validate();
  cfg.tabu.validate();
  return cfg;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string file_digest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Manifest {
  std::string command;
  std::vector<std::string> command_line;
  std::vector<std::string> replay;
  std::optional<std::uint64_t> seed;
  std::string instance_hash;
  json engine;
  std::vector<fs::path> outputs;
};

void write_manifest(const fs::path& path, const Manifest& m) {
  json j;
  j["version"] = kSchemaVersion;
  j["kind"] = "run-manifest";
  j["tool"] = "nsp";
  j["tool_version"] = NSP_VERSION;
  j["command"] = m.command;
  j["command_line"] = m.command_line;
  j["replay"] = m.replay;
  j["seed"] = m.seed ? json(*m.seed) : json(nullptr);
  j["instance_hash"] = m.instance_hash.empty() ? json(nullptr) : json(m.instance_hash);
  j["engine"] = m.engine.is_null() ? json(nullptr) : m.engine;
  j["timestamp"] = utc_timestamp();
  json outs = json::array();
  for (const auto& p : m.outputs) outs.push_back({{"path", p.string()}, {"digest", file_digest(p)}});
  j["outputs"] = outs;
  write_json_file(path, j);
}

fs::path manifest_path(const fs::path& output, const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  fs::path p = output;
  p += ".manifest.json";
  return p;
}

// Effective argument list: the given command line plus the seed actually used.
std::vector<std::string> replay_args(const std::vector<std::string>& args, const EngineOptions* o,
                                     std::uint64_t seed) {
  std::vector<std::string> out = args;
  if (o && o->seed_opt->count() == 0) {
    out.push_back("--seed");
    out.push_back(std::to_string(seed));
  }
  return out;
}

double parse_double(std::string_view text, const char* what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
}

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// "5-12", "3,4" or "3,5-7".
std::vector<std::size_t> parse_range(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split(text, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(parse_count(part, "range"));
      continue;
    }
    const std::size_t lo = parse_count(part.substr(0, dash), "range");
    const std::size_t hi = parse_count(part.substr(dash + 1), "range");
    if (hi < lo) throw ConfigError("empty range '" + std::string(part) + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

double parse_dayoff_level(std::string_view text) {
  if (text == "low") return multiplier(DayOffPriority::low);
  if (text == "middle") return multiplier(DayOffPriority::middle);
  if (text == "high") return multiplier(DayOffPriority::high);
  const double w = parse_double(text, "day-off level");
  if (!(w > 0.0)) throw ConfigError("day-off level must be positive");
  return w;
}

// ---- generate ----

struct GenerateOptions {
  std::size_t nurses = 0;
  std::size_t days = 0;
  std::size_t shifts = 1;
  std::string preset = "paper-base";
  double lambda = 0.0;
  double gamma = 0.0;
  double eta = 0.0;
  double a = 0.0;
  std::string duty_targets;
  std::vector<std::string> dayoff;
  std::string output;
  std::string manifest;

  CLI::Option* shifts_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* eta_opt = nullptr;
  CLI::Option* a_opt = nullptr;
};

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) throw ConfigError(std::string("--") + name + " must be >= 0");
}

NspInstance build_instance(const GenerateOptions& g) {
  NspInstance inst;
  if (g.preset == "paper-base") {
    if (g.shifts_opt->count() > 0 && g.shifts != 1) {
      throw ConfigError("preset paper-base is single-shift; use --preset paper-3shift for 3 shifts");
    }
    inst = make_paper_base(g.nurses, g.days);
  } else {
    if (g.shifts_opt->count() > 0 && g.shifts != 3) {
      throw ConfigError("preset paper-3shift requires --shifts 3");
    }
    inst = make_paper_three_shift(g.nurses, g.days);
  }
  if (g.lambda_opt->count() > 0) {
    require_nonnegative(g.lambda, "lambda");
    inst.lambda = g.lambda;
  }
  if (g.gamma_opt->count() > 0) {
    require_nonnegative(g.gamma, "gamma");
    inst.gamma = g.gamma;
  }
  if (g.eta_opt->count() > 0) {
    require_nonnegative(g.eta, "eta");
    inst.eta = g.eta;
  }
  if (g.a_opt->count() > 0) {
    if (!(g.a > 0.0)) throw ConfigError("--a must be > 0");
    inst.a = g.a;
  }
  if (!g.duty_targets.empty()) {
    std::vector<double> f;
    for (auto part : split(g.duty_targets, ',')) f.push_back(parse_double(part, "duty target"));
    if (f.size() != inst.nurses) {
      throw ConfigError("--F needs one value per nurse (" + std::to_string(inst.nurses) + ")");
    }
    inst.duty_target = std::move(f);
  }
  if (!g.dayoff.empty() && inst.eta == 0.0) {
    throw ConfigError("--dayoff requests have no effect with eta = 0; set --eta or use paper-3shift");
  }
  for (const auto& spec : g.dayoff) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError("--dayoff expects nurse:slot:level, got '" + spec + "'");
    set_dayoff(inst, parse_count(parts[0], "nurse"), parse_count(parts[1], "slot"),
               parse_dayoff_level(parts[2]));
  }
  inst.validate();
  return inst;
}

// ---- solve ----

SampleSet load_candidates(const std::string& spec, const QuboProblem& qubo) {
  SampleSet c;
  constexpr std::string_view kBestOf = "best-of:";
  constexpr std::string_view kBits = "bits:";
  if (spec.starts_with(kBits)) {
    c.samples.push_back({BitVector::from_string(std::string_view(spec).substr(kBits.size())), 0.0, 1});
    c.num_reads = 1;
  } else if (spec.starts_with(kBestOf)) {
    const SampleSet all = sample_set_from_json(read_json_file(spec.substr(kBestOf.size())));
    if (all.empty()) throw ConfigError("--initial " + spec + ": sample set is empty");
    c.samples.push_back({all.best().bits, 0.0, 1});
    c.num_reads = 1;
  } else {
    c = sample_set_from_json(read_json_file(spec));
    if (c.empty()) throw ConfigError("--initial " + spec + ": sample set is empty");
  }
  for (auto& s : c.samples) {
    if (s.bits.size() != qubo.num_vars()) {
      throw DimensionError("--initial state has " + std::to_string(s.bits.size()) +
                           " bits; instance has " + std::to_string(qubo.num_vars()) + " variables");
    }
    s.energy = energy(qubo, s.bits);
  }
  return c;
}

// ---- stats ----

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void check_dimensions(const SampleSet& s, std::size_t num_vars, const std::string& name) {
  for (const auto& sample : s.samples) {
    if (sample.bits.size() != num_vars) {
      throw DimensionError(name + ": sample has " + std::to_string(sample.bits.size()) +
                           " bits; instance has " + std::to_string(num_vars) + " variables");
    }
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
  if (!f) throw ConfigError("cannot write " + path);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nurse scheduling QUBO toolkit", "nsp"};
  app.set_version_flag("--version", std::string(NSP_VERSION));
  app.require_subcommand(1);

  GenerateOptions g;
  auto* gen = app.add_subcommand("generate", "write an NSP instance");
  gen->add_option("nurses", g.nurses, "number of nurses")->required()->check(CLI::PositiveNumber);
  gen->add_option("days", g.days, "number of days")->required()->check(CLI::PositiveNumber);
  g.shifts_opt = gen->add_option("--shifts", g.shifts, "shifts per day (1 or 3)")->check(CLI::IsMember({1, 3}));
  gen->add_option("--preset", g.preset, "paper-base or paper-3shift")
      ->check(CLI::IsMember({"paper-base", "paper-3shift"}))
      ->capture_default_str();
  g.lambda_opt = gen->add_option("--lambda", g.lambda, "workforce penalty weight");
  g.gamma_opt = gen->add_option("--gamma", g.gamma, "duty target penalty weight");
  g.eta_opt = gen->add_option("--eta", g.eta, "day-off field weight");
  g.a_opt = gen->add_option("--a", g.a, "consecutive duty penalty");
  gen->add_option("--F", g.duty_targets, "comma separated duty targets, one per nurse");
  gen->add_option("--dayoff", g.dayoff, "nurse:slot:level with level low|middle|high or a weight");
  gen->add_option("-o,--output", g.output, "instance JSON path")->required();
  gen->add_option("--manifest", g.manifest, "manifest path (default <output>.manifest.json)");

  EngineOptions so;
  std::string solve_instance;
  std::string solve_output;
  std::string solve_manifest;
  std::string initial;
  auto* solve = app.add_subcommand("solve", "sample an instance with one engine");
  solve->add_option("instance", solve_instance, "instance JSON")->required();
  add_engine_options(*solve, so);
  solve->add_option("--initial", initial, "reverse start: <sampleset>, best-of:<sampleset> or bits:<0101...>");
  solve->add_option("-o,--output", solve_output, "sample set JSON path")->required();
  solve->add_option("--manifest", solve_manifest, "manifest path (default <output>.manifest.json)");

  std::string stats_instance;
  std::vector<std::string> stats_inputs;
  std::string reference;
  std::string format = "csv";
  std::string stats_output;
  std::size_t stats_jobs = 1;
  std::size_t stats_cap = kExactVariableCap;
  auto* stats = app.add_subcommand("stats", "evaluate sample sets against a reference");
  stats->add_option("instance", stats_instance, "instance JSON")->required();
  stats->add_option("samplesets", stats_inputs, "sample set JSON files")->required();
  stats->add_option("--reference", reference, "sample set whose lowest-energy states are the reference");
  stats->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  stats->add_option("-o,--output", stats_output, "report path (default stdout)");
  stats->add_option("--jobs", stats_jobs, "worker threads")->check(CLI::PositiveNumber);
  stats->add_option("--exact-cap", stats_cap, "largest problem enumerated exactly")
      ->check(CLI::Range(std::size_t{1}, kExactVariableCap));

  EngineOptions wo;
  std::string nurses_range;
  std::string days_range;
  std::string sweep_preset = "paper-base";
  std::string sweep_output;
  std::string sweep_manifest;
  auto* sweep = app.add_subcommand("sweep", "evaluate an engine over a grid of (N, D)");
  sweep->add_option("--nurses", nurses_range, "nurse counts, e.g. 3 or 3,4 or 2-4")->required();
  sweep->add_option("--days", days_range, "day counts, e.g. 5-12")->required();
  sweep->add_option("--preset", sweep_preset, "paper-base or paper-3shift")
      ->check(CLI::IsMember({"paper-base", "paper-3shift"}))
      ->capture_default_str();
  add_engine_options(*sweep, wo);
  sweep->add_option("-o,--output", sweep_output, "CSV path")->required();
  sweep->add_option("--manifest", sweep_manifest, "manifest path (default <output>.manifest.json)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfig;
  }

  Manifest m;
  m.command_line = args;

  if (*gen) {
    const NspInstance inst = build_instance(g);
    const json j = to_json(inst);
    write_json_file(g.output, j);
    m.command = "generate";
    m.replay = args;
    m.instance_hash = content_hash(j);
    m.outputs = {g.output};
    write_manifest(manifest_path(g.output, g.manifest), m);
    return kOk;
  }

  if (*solve) {
    const std::uint64_t seed = so.seed_opt->count() > 0 ? so.seed : draw_seed();
    const json inst_json = read_json_file(solve_instance);
    const NspInstance inst = instance_from_json(inst_json);
    const QuboProblem qubo = build_qubo(inst);
    const EngineConfig cfg = make_engine_config(so, seed);
    std::optional<SampleSet> candidates;
    if (cfg.engine == Engine::reverse) {
      if (initial.empty()) {
        throw ConfigError("--engine reverse needs --initial <sampleset|best-of:sampleset|bits:...>");
      }
      candidates = load_candidates(initial, qubo);
    } else if (!initial.empty()) {
      throw ConfigError("--initial only applies to --engine reverse");
    }
    const SampleSet result = run_engine(qubo, cfg, candidates ? &*candidates : nullptr);
    write_json_file(solve_output, to_json(result));
    if (result.truncated) err << "nsp: warning: time budget exhausted; best-so-far written\n";
    m.command = "solve";
    m.replay = replay_args(args, &so, seed);
    m.seed = seed;
    m.instance_hash = content_hash(inst_json);
    m.engine = cfg.to_json();
    if (candidates) m.engine["initial"] = initial;
    m.outputs = {solve_output};
    write_manifest(manifest_path(solve_output, solve_manifest), m);
    return kOk;
  }

  if (*stats) {
    const json inst_json = read_json_file(stats_instance);
    const NspInstance inst = instance_from_json(inst_json);
    const QuboProblem qubo = build_qubo(inst);

    std::vector<BitVector> ref;
    ReferenceKind kind = ReferenceKind::exact;
    if (!reference.empty()) {
      const SampleSet r = sample_set_from_json(read_json_file(reference));
      check_dimensions(r, qubo.num_vars(), reference);
      ref = best_found_reference(r);
      kind = r.solver == "exact" ? ReferenceKind::exact : ReferenceKind::best_found;
    } else if (qubo.num_vars() <= stats_cap) {
      ref = enumerate_ground_states(qubo, stats_cap, stats_jobs).states;
    } else {
      throw CapacityError("instance has " + std::to_string(qubo.num_vars()) +
                          " variables, above the exact cap " + std::to_string(stats_cap) +
                          "; pass --reference");
    }

    json rows = json::array();
    std::ostringstream csv;
    csv << "file,N,D,solver,num_reads,satisfaction_frequency,mean_hamming,std_hamming,"
           "mean_energy,best_energy,reference_kind,reference_size,seed\n";
    for (const auto& path : stats_inputs) {
      const SampleSet s = sample_set_from_json(read_json_file(path));
      check_dimensions(s, qubo.num_vars(), path);
      const EvaluationReport r = evaluate(inst, s, ref, kind);
      rows.push_back({{"file", path},
                      {"N", inst.nurses},
                      {"D", inst.days},
                      {"solver", s.solver},
                      {"num_reads", r.sample_count},
                      {"satisfaction_frequency", r.satisfaction_frequency},
                      {"mean_hamming", r.mean_hamming},
                      {"std_hamming", r.std_hamming},
                      {"mean_energy", r.mean_energy},
                      {"best_energy", r.best_energy},
                      {"reference_kind", std::string(to_string(r.reference_kind))},
                      {"reference_size", r.reference_size},
                      {"seed", s.seed}});
      csv << path << ',' << inst.nurses << ',' << inst.days << ',' << s.solver << ','
          << r.sample_count << ',' << format_number(r.satisfaction_frequency) << ','
          << format_number(r.mean_hamming) << ',' << format_number(r.std_hamming) << ','
          << format_number(r.mean_energy) << ',' << format_number(r.best_energy) << ','
          << to_string(r.reference_kind) << ',' << r.reference_size << ',' << s.seed << '\n';
    }
    std::string text;
    if (format == "json") {
      text = json{{"version", kSchemaVersion}, {"kind", "evaluation"}, {"rows", rows}}.dump(2) + "\n";
    } else {
      text = csv.str();
    }
    write_output(stats_output, text, out);
    if (!stats_output.empty() && stats_output != "-") {
      m.command = "stats";
      m.replay = args;
      m.instance_hash = content_hash(inst_json);
      m.outputs = {stats_output};
      write_manifest(manifest_path(stats_output, ""), m);
    }
    return kOk;
  }

  if (*sweep) {
    const std::uint64_t seed = wo.seed_opt->count() > 0 ? wo.seed : draw_seed();
    SweepOptions opts;
    opts.engine = make_engine_config(wo, seed);
    if (opts.engine.engine == Engine::reverse) {
      err << "nsp: note: sweep seeds each reverse cell with its own forward anneal\n";
    }
    opts.make_instance = sweep_preset == "paper-3shift" ? InstanceFactory(make_paper_three_shift)
                                                        : InstanceFactory(make_paper_base);
    const auto nurses = parse_range(nurses_range);
    const auto days = parse_range(days_range);
    const auto table = sweep_experiment(nurses, days, opts);
    std::ostringstream csv;
    write_sweep_csv(csv, table);
    write_output(sweep_output, csv.str(), out);
    for (const auto& row : table) {
      if (!row.report) {
        err << "nsp: warning: cell N=" << row.nurses << " D=" << row.days << " failed: " << row.error << '\n';
      }
    }
    if (sweep_output != "-") {
      m.command = "sweep";
      m.replay = replay_args(args, &wo, seed);
      m.seed = seed;
      m.engine = opts.engine.to_json();
      m.outputs = {sweep_output};
      write_manifest(manifest_path(sweep_output, sweep_manifest), m);
    }
    return kOk;
  }
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ConfigError& e) {
    err << "nsp: config error: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    err << "nsp: config error: " << e.what() << '\n';
    return kConfig;
  } catch (const IndexError& e) {
    err << "nsp: config error: " << e.what() << '\n';
    return kConfig;
  } catch (const CapacityError& e) {
    err << "nsp: capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const DimensionError& e) {
    err << "nsp: dimension error: " << e.what() << '\n';
    return kDimension;
  } catch (const UndefinedStatisticError& e) {
    err << "nsp: undefined statistic: " << e.what() << '\n';
    return kUndefinedStatistic;
  } catch (const std::exception& e) {
    err << "nsp: error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace nsp::cli
