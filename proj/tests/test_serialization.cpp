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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>

#include "entrobound/error.hpp"
#include "entrobound/serialization.hpp"

using namespace entrobound;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_unitary_json(text);
  } catch (const InstanceError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.5e-20) == "-2.4999999999999999e-20");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  const double x = 1.0 / 3.0;
  CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  for (double v : {std::numbers::pi, 1e-300, 123456789.123456789, -0.7071067811865476}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("dump_json layout is stable") {
  Json j;
  j["a"] = 1;
  j["b"] = Json::array({1.5, 2.0});
  j["c"] = Json::array({Json::array({1.0, 2.0}), Json::array({3.0, 4.0})});
  j["d"] = std::numeric_limits<double>::infinity();
  j["e"] = nullptr;
  const std::string want =
      "{\n"
      "  \"a\": 1,\n"
      "  \"b\": [1.5, 2.0],\n"
      "  \"c\": [\n"
      "    [1.0, 2.0],\n"
      "    [3.0, 4.0]\n"
      "  ],\n"
      "  \"d\": \"inf\",\n"
      "  \"e\": null\n"
      "}\n";
  CHECK(dump_json(j) == want);
  CHECK(dump_json(j) == dump_json(Json::parse(dump_json(j))));
}

TEST_CASE("unitary JSON round trip") {
  const auto pair = random_unitary(3, 12);
  const std::string text = dump_json(unitary_to_json(pair));
  const auto back = parse_unitary_json(text);
  CHECK((back.unitary() - pair.unitary()).cwiseAbs().maxCoeff() == 0.0);

  const std::string h =
      R"({"dim": 2, "label": "H", "re": [[0.7071067811865476, 0.7071067811865476],)"
      R"( [0.7071067811865476, -0.7071067811865476]], "im": [[0, 0], [0, 0]]})";
  const auto hp = parse_unitary_json(h);
  CHECK(hp.label() == "H");
  CHECK((hp.unitary() - hadamard_pair().unitary()).cwiseAbs().maxCoeff() <= 2.3e-16);

  const auto dir = std::filesystem::temp_directory_path() / "entrobound_serialization_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "u.json").string();
  write_text_file(path, text);
  CHECK(read_text_file(path) == text);
  CHECK((load_unitary(path).unitary() - pair.unitary()).cwiseAbs().maxCoeff() == 0.0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("unitary JSON errors name the offending field") {
  CHECK(contains(error_of(R"({"dim": 2, "re": [[1, 0], [0, 1]]})"), "missing field \"im\""));
  CHECK(contains(error_of(R"({"dim": 2, "re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]})"),
                 "\"re\"[1] must have 2 entries"));
  CHECK(contains(error_of(R"({"dim": 2, "re": [[1, 0], [0, 1]], "im": [[0, "x"], [0, 0]]})"),
                 "\"im\""));
  CHECK(contains(error_of(R"({"dim": 1, "re": [[1]], "im": [[0]]})"), "\"dim\""));
  CHECK(contains(error_of(R"({"dim": 2.5, "re": [], "im": []})"), "\"dim\""));
  CHECK(contains(error_of(R"({"dim": 2, "re": [[1, 0], [0, 1]], )"), "malformed document at byte"));
  CHECK(contains(error_of("[1, 2]"), "top level"));
  CHECK(contains(error_of(R"({"dim": 2, "re": [[1, 1], [0, 1]], "im": [[0, 0], [0, 0]]})"),
                 "unitar"));
  CHECK_THROWS_AS(load_unitary("/nonexistent/entrobound/u.json"), InstanceError);
}

TEST_CASE("bound result JSON carries every field") {
  BoundConfig cfg;
  cfg.n_max_exponent = 3;
  const auto r = optimal_bound(hadamard_pair(), Weights(1, 1), cfg);
  const Json j = to_json(r, LogBase::kBits);
  for (const char* key : {"unit", "lambda", "mu", "lower", "upper", "gap", "method",
                          "lower_method", "upper_method", "witness", "params", "iterations",
                          "converged", "max_objective_increase", "omega_trace",
                          "omega_cross_check_defects"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["unit"] == "bits");
  REQUIRE(j["omega_trace"].size() == 3);
  CHECK(j["omega_trace"][0][0].get<double>() == 4.0);  // N scaled by lambda + mu = 2
  CHECK(j["upper"].get<double>() == r.upper);

  const Json n = to_json(r, LogBase::kNats);
  CHECK(n["unit"] == "nats");
  CHECK(n["upper"].get<double>() == doctest::Approx(r.upper * std::numbers::ln2));
  CHECK(n["lambda"] == j["lambda"]);

  // the text form is deterministic and parses back to the same numbers
  const std::string a = dump_json(j);
  CHECK(a == dump_json(to_json(optimal_bound(hadamard_pair(), Weights(1, 1), cfg),
                               LogBase::kBits)));
  CHECK(Json::parse(a)["upper"].get<double>() == r.upper);
}

TEST_CASE("hull JSON round trip and unit conversion") {
  PositiveHull hull = hull_from_tangents({{0.0, 1.0, 0.0, 0.0, true},
                                          {0.5, 0.5, 0.5, 0.5, true},
                                          {1.0, 0.0, 0.0, 0.0, true}});
  REQUIRE(hull.vertices.size() == 2);

  const Json bits = to_json(hull, LogBase::kBits);
  CHECK(is_hull_document(bits));
  CHECK_FALSE(is_hull_document(unitary_to_json(hadamard_pair())));
  const auto back = hull_from_json(Json::parse(dump_json(bits)));
  REQUIRE(back.tangents.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(back.tangents[k].c == hull.tangents[k].c);
  REQUIRE(back.vertices.size() == hull.vertices.size());
  for (std::size_t k = 0; k < hull.vertices.size(); ++k) {
    CHECK(back.vertices[k] == hull.vertices[k]);
  }

  const auto from_nats = hull_from_json(to_json(hull, LogBase::kNats));
  CHECK(from_nats.tangents[1].c == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(from_nats.vertices[0][1] == doctest::Approx(1.0).epsilon(1e-15));

  // vertices and lower offsets are optional
  const auto bare = hull_from_json(Json::parse(
      R"({"tangents": [{"lambda": 0.5, "mu": 0.5, "c": 0.5}, {"lambda": 1, "mu": 0, "c": 0}]})"));
  CHECK(bare.tangents[0].lower == bare.tangents[0].c);
  CHECK_FALSE(bare.tangents[0].certified);

  CHECK_THROWS_AS(hull_from_json(Json::parse(R"({"tangents": 3})")), InstanceError);
  CHECK_THROWS_AS(hull_from_json(Json::parse(R"({"unit": "hartley", "tangents": []})")),
                  InstanceError);
  CHECK_THROWS_AS(
      hull_from_json(Json::parse(R"({"tangents": [{"lambda": -1, "mu": 0, "c": 0}]})")),
      InstanceError);
  CHECK_THROWS_AS(hull_from_json(Json::parse(R"({"tangents": [{"lambda": 1, "mu": 0}]})")),
                  InstanceError);
}

TEST_CASE("samples CSV") {
  std::vector<UncertaintyPoint> pts = {{0.0, 1.0, {}}, {0.25, 0.5, {}}};
  const std::string csv = samples_csv(pts, LogBase::kBits);
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 1);
  }
  CHECK(rows == 2);
  CHECK(contains(csv, "0.25,0.5"));
  const std::string nats = samples_csv(pts, LogBase::kNats);
  CHECK(contains(nats, format_double(std::numbers::ln2)));
}

TEST_CASE("report JSON for the verification suites") {
  const Json m = to_json(multiplicativity_check(hadamard_pair(), hadamard_pair(), 1.0,
                                                std::numeric_limits<double>::infinity(), 1e-8,
                                                0));
  CHECK(m["pass"] == true);
  CHECK(dump_json(m).find("\"q\": \"inf\"") != std::string::npos);

  const Json t = to_json(three_pauli_counterexample(), LogBase::kBits);
  CHECK(t["violated"] == true);
  CHECK(t["bell_value"].get<double>() == doctest::Approx(3.0));

  const Json r = to_json(renyi_bound_check(hadamard_pair(), Weights(1, 1), 2.0, 10, 0),
                         LogBase::kBits);
  CHECK(dump_json(r).find("\"alpha_y\": \"inf\"") != std::string::npos);
}
