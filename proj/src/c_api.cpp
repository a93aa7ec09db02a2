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

#include "entrobound/entrobound.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "entrobound/bounds.hpp"
#include "entrobound/error.hpp"
#include "entrobound/regions.hpp"
#include "entrobound/serialization.hpp"
#include "entrobound/version.hpp"

struct eb_pair {
  entrobound::MeasurementPair pair;
};

struct eb_hull {
  entrobound::PositiveHull hull;
};

namespace {

using namespace entrobound;

thread_local std::string g_last_error;

template <class F>
eb_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return EB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<eb_status>(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EB_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return EB_ERR_NUMERIC;
  }
}

void require_arg(const void* p, const char* name) {
  if (p == nullptr) throw ParameterError(std::string("argument '") + name + "' is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

eb_pair* wrap(MeasurementPair pair) { return new eb_pair{std::move(pair)}; }

// Settings resolved from an eb_config; defaults that depend on the command
// are filled in by the callers.
struct Resolved {
  eb_config cfg;
  LogBase base = LogBase::kBits;
  BoundConfig bound;
};

void check_range(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

Resolved resolve(const eb_config* cfg) {
  require_arg(cfg, "cfg");
  Resolved r;
  r.cfg = *cfg;
  const eb_config& c = r.cfg;
  check_range(c.n_max_exponent >= 1 && c.n_max_exponent <= 20,
              "--N-max must lie in [1, 20]");
  check_range(c.restarts >= 0 && c.restarts <= 100000, "--restarts must lie in [0, 100000]");
  check_range(!(c.tol > 0.0) || std::isfinite(c.tol), "--tol must be finite");
  check_range(c.trials <= 100000, "--trials must be at most 100000");
  check_range(c.samples <= 100000000, "--samples must be at most 1e8");
  check_range(c.sweep_ratios <= 4096, "--sweep must be at most 4096");
  check_range(c.dimension_cap >= 1, "dimension cap must be >= 1");
  (void)Weights(c.lambda, c.mu);  // validates
  r.base = c.nats ? LogBase::kNats : LogBase::kBits;
  r.bound.n_max_exponent = c.n_max_exponent;
  r.bound.restarts = c.restarts;
  r.bound.seed = c.seed;
  return r;
}

// Tolerance in bits: user values are given in the reporting unit.
double entropy_tol(const Resolved& r, double fallback) {
  if (!(r.cfg.tol > 0.0)) return fallback;
  return r.base == LogBase::kNats ? r.cfg.tol / from_bits(1.0, LogBase::kNats)
                                  : r.cfg.tol;
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

Json config_json(const Resolved& r) {
  const eb_config& c = r.cfg;
  Json j;
  Json inputs = Json::array();
  for (int i = 0; i < c.n_inputs; ++i) {
    if (c.inputs && c.inputs[i]) inputs.push_back(std::string(c.inputs[i]));
  }
  j["inputs"] = std::move(inputs);
  j["lambda"] = c.lambda;
  j["mu"] = c.mu;
  j["N_max_exponent"] = c.n_max_exponent;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["seed_source"] = c.seed_set ? "user" : "default";
  j["tol"] = c.tol > 0.0 ? Json(c.tol) : Json("default");
  j["unit"] = c.nats ? "nats" : "bits";
  j["trials"] = c.trials;
  j["p"] = c.p;
  j["q"] = c.q;
  j["samples"] = c.samples;
  j["sweep_ratios"] = c.sweep_ratios;
  j["N"] = c.N;
  j["dimension_cap"] = c.dimension_cap;
  return j;
}

Json envelope(const Resolved& r, const char* fallback_command) {
  Json j;
  j["tool"] = "entrobound";
  j["version"] = kVersion;
  j["command"] = r.cfg.command ? r.cfg.command : fallback_command;
  j["config"] = config_json(r);
  return j;
}

std::vector<const MeasurementPair*> unwrap(const eb_pair* const* pairs, int n) {
  if (n < 0) throw ParameterError("negative pair count");
  if (n > 0) require_arg(pairs, "pairs");
  std::vector<const MeasurementPair*> out;
  for (int i = 0; i < n; ++i) {
    require_arg(pairs[i], "pairs[i]");
    out.push_back(&pairs[i]->pair);
  }
  return out;
}

// Trial t of a random-instance suite uses two fresh Haar qubit pairs.
std::pair<MeasurementPair, MeasurementPair> trial_pairs(
    const std::vector<const MeasurementPair*>& given, std::uint64_t seed, int t) {
  if (given.size() == 2) return {*given[0], *given[1]};
  return {random_unitary(2, derive_seed(seed, 2 * t)),
          random_unitary(2, derive_seed(seed, 2 * t + 1))};
}

void expect_pairs(const std::vector<const MeasurementPair*>& given,
                  std::initializer_list<std::size_t> allowed, const char* suite) {
  for (std::size_t n : allowed) {
    if (given.size() == n) return;
  }
  std::ostringstream msg;
  msg << "suite '" << suite << "' does not accept " << given.size()
      << " unitaries";
  throw ParameterError(msg.str());
}

bool is_closed_form(double p, double q) {
  return p == 1.0 || std::isinf(q) || (p == 2.0 && q == 2.0);
}

Json run_suite(const std::string& suite, const std::vector<const MeasurementPair*>& given,
               const Resolved& r, int& passed, int& total) {
  const eb_config& c = r.cfg;
  Json checks = Json::array();
  passed = 0;
  total = 0;
  auto record = [&](Json check, bool ok) {
    check["pass"] = ok;
    checks.push_back(std::move(check));
    ++total;
    if (ok) ++passed;
  };

  if (suite == "additivity") {
    expect_pairs(given, {0, 2}, "additivity");
    const int trials = given.empty() ? pick(c.trials, 20) : 1;
    const double tol = entropy_tol(r, 1e-4);
    const Weights w(c.lambda, c.mu);
    for (int t = 0; t < trials; ++t) {
      const auto [a, b] = trial_pairs(given, c.seed, t);
      BoundConfig bc = r.bound;
      bc.seed = derive_seed(c.seed, 1000 + t);
      const AdditivityReport rep =
          additivity_check(a, b, w, bc, tol, 1e-3, c.dimension_cap);
      Json j = to_json(rep, r.base);
      j["trial"] = t;
      record(std::move(j), rep.pass);
    }
  } else if (suite == "multiplicativity") {
    expect_pairs(given, {0, 2}, "multiplicativity");
    const int trials = given.empty() ? pick(c.trials, 10) : 1;
    const double tol = c.tol > 0.0 ? c.tol : (is_closed_form(c.p, c.q) ? 1e-8 : 1e-4);
    SolverOptions opts;
    opts.restarts = c.restarts;
    for (int t = 0; t < trials; ++t) {
      const auto [a, b] = trial_pairs(given, c.seed, t);
      const MultiplicativityReport rep = multiplicativity_check(
          a, b, c.p, c.q, tol, derive_seed(c.seed, 1000 + t), opts);
      Json j = to_json(rep);
      j["trial"] = t;
      record(std::move(j), rep.pass);
    }
  } else if (suite == "hull") {
    expect_pairs(given, {0, 2}, "hull");
    const int trials = given.empty() ? pick(c.trials, 1) : 1;
    const double tol = entropy_tol(r, 1e-3);
    const auto sweep = ratio_sweep(pick(c.sweep_ratios, 16));
    for (int t = 0; t < trials; ++t) {
      const auto [a, b] = trial_pairs(given, c.seed, t);
      BoundConfig bc = r.bound;
      bc.seed = derive_seed(c.seed, 1000 + t);
      const HullCompositionReport rep =
          verify_hull_composition(a, b, sweep, bc, tol, c.dimension_cap);
      Json j = to_json(rep, r.base);
      j["trial"] = t;
      record(std::move(j), rep.pass);
    }
  } else if (suite == "three-pauli") {
    expect_pairs(given, {0}, "three-pauli");
    const double tol = entropy_tol(r, 1e-6);
    const ThreePauliReport rep = three_pauli_counterexample();
    const bool ok = rep.violated && std::abs(rep.product_min - 4.0) <= tol &&
                    std::abs(rep.bell_value - 3.0) <= tol;
    Json j = to_json(rep, r.base);
    j["tol"] = from_bits(tol, r.base);
    record(std::move(j), ok);
  } else if (suite == "renyi") {
    expect_pairs(given, {0, 1}, "renyi");
    const int trials = given.empty() ? pick(c.trials, 1) : 1;
    const double N = c.N > 0.0 ? c.N : 4.0;
    SolverOptions opts;
    opts.restarts = c.restarts;
    for (int t = 0; t < trials; ++t) {
      const MeasurementPair pair =
          given.empty() ? random_unitary(2, derive_seed(c.seed, t)) : *given[0];
      const RenyiCheckReport rep =
          renyi_bound_check(pair, Weights(c.lambda, c.mu), N,
                            pick(c.samples, 1000), derive_seed(c.seed, 1000 + t), opts);
      Json j = to_json(rep, r.base);
      j["trial"] = t;
      record(std::move(j), rep.pass);
    }
  } else {
    throw ParameterError("unknown verify suite '" + suite +
                         "' (expected additivity, multiplicativity, hull, "
                         "three-pauli or renyi)");
  }
  return checks;
}

}  // namespace

extern "C" {

const char* eb_version(void) { return entrobound::kVersion; }

const char* eb_last_error(void) { return g_last_error.c_str(); }

void eb_string_free(char* s) { std::free(s); }

eb_status eb_pair_load(const char* path, eb_pair** out) {
  return guarded([&] {
    require_arg(path, "path");
    require_arg(out, "out");
    *out = wrap(load_unitary(path));
  });
}

eb_status eb_pair_parse(const char* json, eb_pair** out) {
  return guarded([&] {
    require_arg(json, "json");
    require_arg(out, "out");
    *out = wrap(parse_unitary_json(json));
  });
}

eb_status eb_pair_from_matrix(int dim, const double* re, const double* im,
                              eb_pair** out) {
  return guarded([&] {
    require_arg(re, "re");
    require_arg(im, "im");
    require_arg(out, "out");
    if (dim < 2) throw InstanceError("dimension must be >= 2");
    Matrix u(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < dim; ++k) {
        u(i, k) = Complex(re[i * dim + k], im[i * dim + k]);
      }
    }
    *out = wrap(MeasurementPair::from_unitary(std::move(u)));
  });
}

eb_status eb_pair_hadamard(eb_pair** out) {
  return guarded([&] {
    require_arg(out, "out");
    *out = wrap(hadamard_pair());
  });
}

eb_status eb_pair_identity(int dim, eb_pair** out) {
  return guarded([&] {
    require_arg(out, "out");
    if (dim < 2) throw InstanceError("dimension must be >= 2");
    *out = wrap(identity_pair(dim));
  });
}

eb_status eb_pair_random(int dim, uint64_t seed, eb_pair** out) {
  return guarded([&] {
    require_arg(out, "out");
    *out = wrap(random_unitary(dim, seed));
  });
}

eb_status eb_pair_tensor(const eb_pair* a, const eb_pair* b, eb_pair** out) {
  return guarded([&] {
    require_arg(a, "a");
    require_arg(b, "b");
    require_arg(out, "out");
    *out = wrap(tensor_pair(a->pair, b->pair));
  });
}

int eb_pair_dim(const eb_pair* pair) { return pair ? pair->pair.dim() : 0; }

eb_status eb_pair_to_json(const eb_pair* pair, char** out) {
  return guarded([&] {
    require_arg(pair, "pair");
    require_arg(out, "out");
    *out = copy_string(dump_json(unitary_to_json(pair->pair)));
  });
}

void eb_pair_free(eb_pair* pair) { delete pair; }

void eb_config_init(eb_config* cfg) {
  if (cfg == nullptr) return;
  std::memset(cfg, 0, sizeof *cfg);
  cfg->lambda = 1.0;
  cfg->mu = 1.0;
  cfg->n_max_exponent = 10;
  cfg->restarts = 32;
  cfg->p = 1.0;
  cfg->q = HUGE_VAL;
  cfg->dimension_cap = kDefaultDimensionCap;
}

eb_status eb_bound(const eb_pair* pair, const eb_config* cfg, char** report) {
  return guarded([&] {
    require_arg(pair, "pair");
    require_arg(report, "report");
    const Resolved r = resolve(cfg);
    const Weights w(r.cfg.lambda, r.cfg.mu);
    const BoundResult result = optimal_bound(pair->pair, w, r.bound);
    const double tol = entropy_tol(r, 1e-4);
    Json j = envelope(r, "bound");
    j["result"] = to_json(result, r.base);
    j["mu_bound"] = from_bits(mu_bound(pair->pair, w), r.base);
    j["certified"] = result.gap() <= tol;
    *report = copy_string(dump_json(j));
  });
}

eb_status eb_mu_bound(const eb_pair* pair, double lambda, double mu,
                      double* out_bits) {
  return guarded([&] {
    require_arg(pair, "pair");
    require_arg(out_bits, "out_bits");
    *out_bits = mu_bound(pair->pair, Weights(lambda, mu));
  });
}

eb_status eb_omega(const eb_pair* pair, double lambda, double mu, double N,
                   uint64_t seed, int restarts, double* out_value) {
  return guarded([&] {
    require_arg(pair, "pair");
    require_arg(out_value, "out_value");
    if (restarts < 0) throw ParameterError("restarts must be >= 0");
    SolverOptions opts;
    opts.restarts = restarts;
    *out_value = omega(pair->pair, Weights(lambda, mu), N, seed, opts).estimate.value;
  });
}

eb_status eb_verify(const char* suite, const eb_pair* const* pairs, int n_pairs,
                    const eb_config* cfg, char** report, int* all_pass) {
  return guarded([&] {
    require_arg(suite, "suite");
    require_arg(report, "report");
    require_arg(all_pass, "all_pass");
    const Resolved r = resolve(cfg);
    const auto given = unwrap(pairs, n_pairs);
    int passed = 0, total = 0;
    Json checks = run_suite(suite, given, r, passed, total);
    Json j = envelope(r, "verify");
    j["suite"] = suite;
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["total"] = total;
    j["all_pass"] = passed == total;
    *report = copy_string(dump_json(j));
    *all_pass = passed == total ? 1 : 0;
  });
}

eb_status eb_region_samples_csv(const eb_pair* pair, const eb_config* cfg, char** csv) {
  return guarded([&] {
    require_arg(pair, "pair");
    require_arg(csv, "csv");
    const Resolved r = resolve(cfg);
    const auto points = sample_region(pair->pair, pick(r.cfg.samples, 1000), r.cfg.seed);
    *csv = copy_string(samples_csv(points, r.base));
  });
}

namespace {

PositiveHull hull_for(const MeasurementPair& pair, const Resolved& r) {
  return positive_hull(pair, ratio_sweep(pick(r.cfg.sweep_ratios, 64)), r.bound,
                       entropy_tol(r, 1e-4));
}

}  // namespace

eb_status eb_region_hull(const eb_pair* pair, const eb_config* cfg, eb_hull** out) {
  return guarded([&] {
    require_arg(pair, "pair");
    require_arg(out, "out");
    const Resolved r = resolve(cfg);
    *out = new eb_hull{hull_for(pair->pair, r)};
  });
}

eb_status eb_hull_load(const char* path, const eb_config* cfg, eb_hull** out) {
  return guarded([&] {
    require_arg(path, "path");
    require_arg(out, "out");
    const std::string text = read_text_file(path);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      std::ostringstream msg;
      msg << path << ": malformed JSON at byte " << e.byte;
      throw InstanceError(msg.str());
    }
    if (is_hull_document(j)) {
      try {
        *out = new eb_hull{hull_from_json(j)};
      } catch (const InstanceError& e) {
        throw InstanceError(std::string(path) + ": " + e.what());
      }
      return;
    }
    const Resolved r = resolve(cfg);
    *out = new eb_hull{hull_for(load_unitary(path), r)};
  });
}

eb_status eb_hull_parse(const char* json, eb_hull** out) {
  return guarded([&] {
    require_arg(json, "json");
    require_arg(out, "out");
    Json j;
    try {
      j = Json::parse(json);
    } catch (const Json::parse_error& e) {
      std::ostringstream msg;
      msg << "hull JSON: malformed document at byte " << e.byte;
      throw InstanceError(msg.str());
    }
    *out = new eb_hull{hull_from_json(j)};
  });
}

eb_status eb_hull_minkowski(const eb_hull* a, const eb_hull* b, eb_hull** out) {
  return guarded([&] {
    require_arg(a, "a");
    require_arg(b, "b");
    require_arg(out, "out");
    *out = new eb_hull{minkowski_sum(a->hull, b->hull)};
  });
}

eb_status eb_hull_to_json(const eb_hull* hull, const eb_config* cfg, char** out) {
  return guarded([&] {
    require_arg(hull, "hull");
    require_arg(out, "out");
    const Resolved r = resolve(cfg);
    Json j = envelope(r, "region");
    const Json body = to_json(hull->hull, r.base);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    *out = copy_string(dump_json(j));
  });
}

size_t eb_hull_tangent_count(const eb_hull* hull) {
  return hull ? hull->hull.tangents.size() : 0;
}

void eb_hull_free(eb_hull* hull) { delete hull; }

}  // extern "C"
