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

// Exercises libentrobound through its C header only.

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "entrobound/entrobound.h"

namespace {

using nlohmann::json;

std::string data_file(const char* name) {
  const char* dir = std::getenv("ENTROBOUND_TEST_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "ENTROBOUND_TEST_DATA is not set");
  return std::string(dir) + "/" + name;
}

std::string take(char* s) {
  std::string out(s ? s : "");
  eb_string_free(s);
  return out;
}

eb_pair* load(const char* name) {
  eb_pair* p = nullptr;
  REQUIRE(eb_pair_load(data_file(name).c_str(), &p) == EB_OK);
  REQUIRE(p != nullptr);
  return p;
}

eb_config quick() {
  eb_config cfg;
  eb_config_init(&cfg);
  cfg.n_max_exponent = 4;
  cfg.seed = 5;
  cfg.seed_set = 1;
  return cfg;
}

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::strlen(eb_version()) > 0);
  eb_config cfg;
  eb_config_init(&cfg);
  CHECK(cfg.lambda == 1.0);
  CHECK(cfg.mu == 1.0);
  CHECK(cfg.n_max_exponent == 10);
  CHECK(cfg.restarts == 32);
  CHECK(cfg.dimension_cap == 36);
  CHECK(std::isinf(cfg.q));
  eb_string_free(nullptr);
  eb_pair_free(nullptr);
  eb_hull_free(nullptr);
}

TEST_CASE("loading pairs reports input errors") {
  eb_pair* p = nullptr;
  CHECK(eb_pair_load(data_file("missing_im.json").c_str(), &p) == EB_ERR_INPUT);
  CHECK(p == nullptr);
  CHECK(std::string(eb_last_error()).find("\"im\"") != std::string::npos);

  CHECK(eb_pair_load(data_file("malformed_row.json").c_str(), &p) == EB_ERR_INPUT);
  CHECK(eb_pair_load(data_file("not_unitary.json").c_str(), &p) == EB_ERR_INPUT);
  CHECK(eb_pair_load(data_file("broken.json").c_str(), &p) == EB_ERR_INPUT);
  CHECK(eb_pair_load(data_file("nope.json").c_str(), &p) == EB_ERR_INPUT);
  CHECK(eb_pair_load(nullptr, &p) == EB_ERR_INPUT);
  CHECK(eb_pair_load(data_file("hadamard.json").c_str(), nullptr) == EB_ERR_INPUT);
  CHECK(eb_pair_parse("{\"dim\": 2", &p) == EB_ERR_INPUT);
  CHECK(eb_pair_identity(1, &p) == EB_ERR_INPUT);
  CHECK(eb_pair_random(1, 0, &p) == EB_ERR_INPUT);
}

TEST_CASE("pair construction") {
  eb_pair* h = load("hadamard.json");
  CHECK(eb_pair_dim(h) == 2);
  CHECK(eb_pair_dim(nullptr) == 0);

  const double a = 1.0 / std::sqrt(2.0);
  const double re[4] = {a, a, a, -a};
  const double im[4] = {0, 0, 0, 0};
  eb_pair* m = nullptr;
  REQUIRE(eb_pair_from_matrix(2, re, im, &m) == EB_OK);
  const double bad[4] = {1, 1, 0, 1};
  eb_pair* b = nullptr;
  CHECK(eb_pair_from_matrix(2, bad, im, &b) == EB_ERR_INPUT);

  eb_pair* t = nullptr;
  REQUIRE(eb_pair_tensor(h, m, &t) == EB_OK);
  CHECK(eb_pair_dim(t) == 4);

  char* text = nullptr;
  REQUIRE(eb_pair_to_json(t, &text) == EB_OK);
  const json j = json::parse(take(text));
  CHECK(j["dim"] == 4);
  CHECK(std::abs(j["re"][3][3].get<double>() - 0.5) <= 1e-15);

  eb_pair* r1 = nullptr;
  eb_pair* r2 = nullptr;
  REQUIRE(eb_pair_random(3, 9, &r1) == EB_OK);
  REQUIRE(eb_pair_random(3, 9, &r2) == EB_OK);
  char* s1 = nullptr;
  char* s2 = nullptr;
  eb_pair_to_json(r1, &s1);
  eb_pair_to_json(r2, &s2);
  CHECK(take(s1) == take(s2));

  for (eb_pair* p : {h, m, t, r1, r2}) eb_pair_free(p);
}

TEST_CASE("bound report") {
  eb_pair* h = load("hadamard.json");
  eb_config cfg = quick();
  char* report = nullptr;
  REQUIRE(eb_bound(h, &cfg, &report) == EB_OK);
  const std::string text = take(report);
  const json j = json::parse(text);
  CHECK(j["tool"] == "entrobound");
  CHECK(j["config"]["seed"] == 5);
  CHECK(j["config"]["seed_source"] == "user");
  CHECK(std::abs(j["result"]["upper"].get<double>() - 1.0) <= 1e-6);
  CHECK(j["result"]["lower"].get<double>() >= 1.0 - 1e-4);
  CHECK(j["result"]["omega_trace"].size() == 4);

  // identical configuration, identical bytes
  char* again = nullptr;
  REQUIRE(eb_bound(h, &cfg, &again) == EB_OK);
  CHECK(take(again) == text);

  cfg.nats = 1;
  REQUIRE(eb_bound(h, &cfg, &report) == EB_OK);
  const json n = json::parse(take(report));
  CHECK(n["result"]["unit"] == "nats");
  CHECK(std::abs(n["result"]["upper"].get<double>() - std::log(2.0)) <= 1e-6);

  double mu = 0.0;
  REQUIRE(eb_mu_bound(h, 1.0, 0.5, &mu) == EB_OK);
  CHECK(std::abs(mu - 0.5) <= 1e-14);
  double w = 0.0;
  REQUIRE(eb_omega(h, 1.0, 1.0, 2.0, 0, 8, &w) == EB_OK);
  CHECK(std::abs(w - 1.0 / std::sqrt(2.0)) <= 1e-12);

  cfg = quick();
  cfg.lambda = -1.0;
  CHECK(eb_bound(h, &cfg, &report) == EB_ERR_INPUT);
  CHECK(std::strlen(eb_last_error()) > 0);
  cfg = quick();
  cfg.n_max_exponent = 0;
  CHECK(eb_bound(h, &cfg, &report) == EB_ERR_INPUT);
  CHECK(eb_bound(nullptr, &cfg, &report) == EB_ERR_INPUT);
  CHECK(eb_bound(h, &cfg, nullptr) == EB_ERR_INPUT);
  CHECK(eb_omega(h, 1.0, 1.0, 0.5, 0, 8, &w) == EB_ERR_INPUT);
  eb_pair_free(h);
}

TEST_CASE("verify suites") {
  eb_config cfg = quick();
  char* report = nullptr;
  int pass = 0;

  REQUIRE(eb_verify("three-pauli", nullptr, 0, &cfg, &report, &pass) == EB_OK);
  CHECK(pass == 1);
  const json t = json::parse(take(report));
  CHECK(t["suite"] == "three-pauli");

  cfg.trials = 3;
  REQUIRE(eb_verify("multiplicativity", nullptr, 0, &cfg, &report, &pass) == EB_OK);
  CHECK(pass == 1);
  eb_string_free(report);

  // the gap guard needs the full N schedule
  cfg.n_max_exponent = 10;
  cfg.trials = 2;
  REQUIRE(eb_verify("additivity", nullptr, 0, &cfg, &report, &pass) == EB_OK);
  CHECK(pass == 1);
  eb_string_free(report);

  eb_pair* h = load("hadamard.json");
  const eb_pair* two[2] = {h, h};
  cfg = quick();
  cfg.sweep_ratios = 3;
  REQUIRE(eb_verify("hull", two, 2, &cfg, &report, &pass) == EB_OK);
  CHECK(pass == 1);
  eb_string_free(report);

  cfg = quick();
  cfg.samples = 200;
  REQUIRE(eb_verify("renyi", two, 1, &cfg, &report, &pass) == EB_OK);
  CHECK(pass == 1);
  eb_string_free(report);

  cfg = quick();
  cfg.dimension_cap = 3;
  CHECK(eb_verify("additivity", two, 2, &cfg, &report, &pass) == EB_ERR_RESOURCE);
  cfg = quick();
  CHECK(eb_verify("bogus", nullptr, 0, &cfg, &report, &pass) == EB_ERR_INPUT);
  cfg.p = 3.0;
  cfg.q = 2.0;
  CHECK(eb_verify("multiplicativity", nullptr, 0, &cfg, &report, &pass) == EB_ERR_INPUT);
  eb_pair_free(h);
}

TEST_CASE("regions and hulls") {
  eb_pair* h = load("hadamard.json");
  eb_config cfg = quick();
  cfg.samples = 25;
  cfg.sweep_ratios = 3;

  char* csv = nullptr;
  REQUIRE(eb_region_samples_csv(h, &cfg, &csv) == EB_OK);
  const std::string rows = take(csv);
  int lines = 0;
  for (char c : rows) lines += c == '\n';
  CHECK(lines == 29);

  eb_hull* hull = nullptr;
  REQUIRE(eb_region_hull(h, &cfg, &hull) == EB_OK);
  CHECK(eb_hull_tangent_count(hull) == 5);
  char* text = nullptr;
  REQUIRE(eb_hull_to_json(hull, &cfg, &text) == EB_OK);
  const std::string hull_text = take(text);
  const json j = json::parse(hull_text);
  REQUIRE(j["tangents"].size() == 5);
  CHECK(std::abs(j["tangents"][2]["c"].get<double>() - 0.5) <= 1e-6);

  eb_hull* parsed = nullptr;
  REQUIRE(eb_hull_parse(hull_text.c_str(), &parsed) == EB_OK);
  eb_hull* sum = nullptr;
  REQUIRE(eb_hull_minkowski(hull, parsed, &sum) == EB_OK);
  REQUIRE(eb_hull_to_json(sum, &cfg, &text) == EB_OK);
  const json s = json::parse(take(text));
  CHECK(std::abs(s["tangents"][2]["c"].get<double>() - 1.0) <= 1e-6);

  // a unitary file is accepted where a hull is expected
  eb_hull* from_unitary = nullptr;
  REQUIRE(eb_hull_load(data_file("hadamard.json").c_str(), &cfg, &from_unitary) == EB_OK);
  CHECK(eb_hull_tangent_count(from_unitary) == 5);

  eb_config other = cfg;
  other.sweep_ratios = 4;
  eb_hull* coarse = nullptr;
  REQUIRE(eb_region_hull(h, &other, &coarse) == EB_OK);
  eb_hull* mismatch = nullptr;
  CHECK(eb_hull_minkowski(hull, coarse, &mismatch) == EB_ERR_INPUT);
  CHECK(mismatch == nullptr);

  CHECK(eb_hull_parse("{\"tangents\": 1}", &mismatch) == EB_ERR_INPUT);
  CHECK(eb_hull_load(data_file("broken.json").c_str(), &cfg, &mismatch) == EB_ERR_INPUT);
  CHECK(eb_hull_tangent_count(nullptr) == 0);

  for (eb_hull* x : {hull, parsed, sum, from_unitary, coarse}) eb_hull_free(x);
  eb_pair_free(h);
}
