// Copyright 2026 The Entrobound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// entrobound <bound|verify|region> [flags]
//
// Exit codes: 0 success, 1 numeric failure (including a failed check),
// 2 input error, 3 resource guard.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrobound/entrobound.h"

namespace {

struct Options {
  std::vector<std::string> unitaries;
  std::vector<std::string> minkowski;
  std::string suite;
  double lambda = 1.0;
  double mu = 1.0;
  int n_max = 10;
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string out;
  bool nats = false;
  int trials = 0;
  std::string p = "1";
  std::string q = "inf";
  int samples = 0;
  int sweep = 0;
  double N = 0.0;
  int dimension_cap = 36;
};

struct Failure {
  int code;
  std::string message;
};

using PairPtr = std::unique_ptr<eb_pair, decltype(&eb_pair_free)>;
using HullPtr = std::unique_ptr<eb_hull, decltype(&eb_hull_free)>;

void check(eb_status status) {
  if (status != EB_OK) throw Failure{static_cast<int>(status), eb_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  eb_string_free(s);
  return out;
}

double parse_exponent(const std::string& text, const char* flag) {
  if (text == "inf" || text == "infinity" || text == "Inf") return HUGE_VAL;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    throw Failure{2, std::string(flag) + ": expected a number or 'inf', got '" + text + "'"};
  }
  return v;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{2, "cannot open output file '" + path + "'"};
  f << text;
  if (!f) throw Failure{2, "failed writing '" + path + "'"};
  std::cerr << "entrobound: wrote " << path << "\n";
}

std::vector<PairPtr> load_pairs(const std::vector<std::string>& paths) {
  std::vector<PairPtr> pairs;
  for (const std::string& path : paths) {
    eb_pair* raw = nullptr;
    check(eb_pair_load(path.c_str(), &raw));
    pairs.emplace_back(raw, &eb_pair_free);
  }
  return pairs;
}

struct ConfigHolder {
  eb_config cfg;
  std::vector<const char*> inputs;
};

void fill_config(const Options& o, bool seed_set, const char* command,
                 const std::vector<std::string>& inputs, ConfigHolder& h) {
  eb_config_init(&h.cfg);
  for (const std::string& s : inputs) h.inputs.push_back(s.c_str());
  h.cfg.command = command;
  h.cfg.inputs = h.inputs.data();
  h.cfg.n_inputs = static_cast<int>(h.inputs.size());
  h.cfg.lambda = o.lambda;
  h.cfg.mu = o.mu;
  h.cfg.n_max_exponent = o.n_max;
  h.cfg.restarts = o.restarts;
  h.cfg.seed = o.seed;
  h.cfg.seed_set = seed_set ? 1 : 0;
  h.cfg.tol = o.tol;
  h.cfg.nats = o.nats ? 1 : 0;
  h.cfg.trials = o.trials;
  h.cfg.p = parse_exponent(o.p, "--p");
  h.cfg.q = parse_exponent(o.q, "--q");
  h.cfg.samples = o.samples;
  h.cfg.sweep_ratios = o.sweep;
  h.cfg.N = o.N;
  h.cfg.dimension_cap = o.dimension_cap;
}

int cmd_bound(const Options& o, bool seed_set) {
  if (o.unitaries.size() != 1) throw Failure{2, "bound: exactly one --unitary is required"};
  ConfigHolder h;
  fill_config(o, seed_set, "bound", o.unitaries, h);
  auto pairs = load_pairs(o.unitaries);
  char* report = nullptr;
  check(eb_bound(pairs[0].get(), &h.cfg, &report));
  write_output(o.out, take(report));
  return 0;
}

int cmd_verify(const Options& o, bool seed_set) {
  ConfigHolder h;
  fill_config(o, seed_set, "verify", o.unitaries, h);
  auto pairs = load_pairs(o.unitaries);
  std::vector<const eb_pair*> raw;
  for (auto& p : pairs) raw.push_back(p.get());
  char* report = nullptr;
  int all_pass = 0;
  check(eb_verify(o.suite.c_str(), raw.data(), static_cast<int>(raw.size()), &h.cfg,
                  &report, &all_pass));
  write_output(o.out, take(report));
  if (!all_pass) {
    std::cerr << "entrobound: verify " << o.suite << ": some checks failed\n";
    return 1;
  }
  return 0;
}

std::filesystem::path output_dir(const Options& o) {
  if (o.out.empty()) {
    std::cerr << "entrobound: no --out given, writing to the working directory\n";
    return std::filesystem::current_path();
  }
  std::error_code ec;
  std::filesystem::create_directories(o.out, ec);
  if (ec) throw Failure{2, "cannot create output directory '" + o.out + "': " + ec.message()};
  return o.out;
}

int cmd_region(const Options& o, bool seed_set) {
  if (!o.minkowski.empty()) {
    if (!o.unitaries.empty()) {
      throw Failure{2, "region: --minkowski cannot be combined with --unitary"};
    }
    ConfigHolder h;
    fill_config(o, seed_set, "region", o.minkowski, h);
    std::vector<HullPtr> hulls;
    for (const std::string& path : o.minkowski) {
      eb_hull* raw = nullptr;
      check(eb_hull_load(path.c_str(), &h.cfg, &raw));
      hulls.emplace_back(raw, &eb_hull_free);
    }
    eb_hull* sum = nullptr;
    check(eb_hull_minkowski(hulls[0].get(), hulls[1].get(), &sum));
    HullPtr sum_ptr(sum, &eb_hull_free);
    char* json = nullptr;
    check(eb_hull_to_json(sum, &h.cfg, &json));
    const auto dir = output_dir(o);
    write_output((dir / "minkowski_hull.json").string(), take(json));
    return 0;
  }
  if (o.unitaries.size() != 1) {
    throw Failure{2, "region: exactly one --unitary (or --minkowski A B) is required"};
  }
  ConfigHolder h;
  fill_config(o, seed_set, "region", o.unitaries, h);
  auto pairs = load_pairs(o.unitaries);
  const auto dir = output_dir(o);
  char* csv = nullptr;
  check(eb_region_samples_csv(pairs[0].get(), &h.cfg, &csv));
  const std::string csv_text = take(csv);
  eb_hull* hull = nullptr;
  check(eb_region_hull(pairs[0].get(), &h.cfg, &hull));
  HullPtr hull_ptr(hull, &eb_hull_free);
  char* json = nullptr;
  check(eb_hull_to_json(hull, &h.cfg, &json));
  write_output((dir / "samples.csv").string(), csv_text);
  write_output((dir / "hull.json").string(), take(json));
  return 0;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "weight of the X entropy")->capture_default_str();
  cmd->add_option("--mu", o.mu, "weight of the Y entropy")->capture_default_str();
  cmd->add_option("--N-max", o.n_max, "largest exponent K of the N = 2^k schedule")
      ->capture_default_str();
  cmd->add_option("--restarts", o.restarts, "random restarts per solver")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for all random choices (default 0)");
  cmd->add_option("--tol", o.tol, "tolerance in the reporting unit");
  cmd->add_flag("--nats", o.nats, "report entropies in nats");
  cmd->add_option("--dimension-cap", o.dimension_cap, "largest product dimension")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bounds for pairs of measurements", "entrobound"};
  app.set_version_flag("--version", std::string(eb_version()));
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "bracket c(lambda, mu) for one unitary");
  bound->add_option("--unitary", o.unitaries, "unitary JSON file")->required();
  bound->add_option("--out", o.out, "report file (default: standard output)");
  add_common(bound, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", o.suite,
                   "additivity | multiplicativity | hull | three-pauli | renyi")
      ->required();
  verify->add_option("--unitary", o.unitaries, "unitary JSON file (repeatable)");
  verify->add_option("--out", o.out, "report file (default: standard output)");
  verify->add_option("--trials", o.trials, "number of random instances");
  verify->add_option("--p", o.p, "input exponent of the norm")->capture_default_str();
  verify->add_option("--q", o.q, "output exponent of the norm (number or inf)")
      ->capture_default_str();
  verify->add_option("--samples", o.samples, "random states for the renyi suite");
  verify->add_option("--sweep", o.sweep, "weight ratios in the hull sweep");
  verify->add_option("--N", o.N, "N for the renyi suite (default 4)");
  add_common(verify, o);

  auto* region = app.add_subcommand("region", "sample an uncertainty set and its hull");
  region->add_option("--unitary", o.unitaries, "unitary JSON file");
  region->add_option("--minkowski", o.minkowski, "compose two hull or unitary files")
      ->expected(2);
  region->add_option("--out", o.out, "output directory (default: working directory)");
  region->add_option("--samples", o.samples, "random states (default 1000)");
  region->add_option("--sweep", o.sweep, "weight ratios in the hull sweep (default 64)");
  add_common(region, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto seed_given = [&](CLI::App* cmd) { return cmd->count("--seed") > 0; };
    if (*bound) return cmd_bound(o, seed_given(bound));
    if (*verify) return cmd_verify(o, seed_given(verify));
    if (*region) return cmd_region(o, seed_given(region));
  } catch (const Failure& f) {
    std::cerr << "entrobound: error: " << f.message << "\n";
    return f.code;
  }
  return 2;
}
