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

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"
#include "oracles.hpp"

using namespace entrobound;

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

ProbabilityVector pv(std::vector<double> v) {
  return ProbabilityVector::from_values(std::move(v));
}

ProbabilityVector random_distribution(int dim, Rng& rng) {
  std::vector<double> v(dim);
  double s = 0.0;
  for (double& x : v) {
    x = -std::log(1.0 - rng.uniform());  // flat Dirichlet
    s += x;
  }
  for (double& x : v) x /= s;
  return pv(v);
}

Vector basis_vector(int dim, int i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("shannon examples") {
  CHECK(shannon(pv({1.0, 0.0})) == 0.0);
  CHECK(shannon(pv({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(shannon(pv({0.5, 0.25, 0.25})) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(shannon(pv({0.5, 0.5}), LogBase::kNats) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("renyi examples") {
  CHECK(renyi(pv({0.5, 0.5}), 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(renyi(pv({1.0, 0.0}), 0.5) == doctest::Approx(0.0));
  const double want = -std::log2(0.9 * 0.9 + 0.1 * 0.1);
  CHECK(std::abs(renyi(pv({0.9, 0.1}), 2.0) - want) <= 1e-14);
  CHECK(want == doctest::Approx(0.2863).epsilon(1e-4));
  CHECK(renyi(pv({0.75, 0.25}), kInfinity) == doctest::Approx(-std::log2(0.75)));

  CHECK_THROWS_AS(renyi(pv({0.5, 0.5}), 1.0), ParameterError);
  CHECK_THROWS_AS(renyi(pv({0.5, 0.5}), 0.0), ParameterError);
  CHECK_THROWS_AS(renyi(pv({0.5, 0.5}), -2.0), ParameterError);
}

TEST_CASE("relative entropy examples") {
  const auto half = pv({0.5, 0.5});
  const auto d0 = relative_entropy(half, half);
  CHECK(d0.value == 0.0);
  CHECK_FALSE(d0.divergent);

  CHECK(relative_entropy(pv({1.0, 0.0}), half).value == doctest::Approx(1.0).epsilon(1e-15));

  const double want = 0.75 * std::log2(3.0) + 0.25 * std::log2(1.0 / 3.0);
  CHECK(std::abs(relative_entropy(pv({0.75, 0.25}), pv({0.25, 0.75})).value - want) <= 1e-14);
  CHECK(want == doctest::Approx(0.5 * std::log2(3.0)));

  const auto div = relative_entropy(half, pv({1.0, 0.0}));
  CHECK(div.divergent);
  CHECK(std::isinf(div.value));

  CHECK_THROWS_AS(relative_entropy(half, pv({1.0, 0.0, 0.0})), InstanceError);
}

TEST_CASE("weighted uncertainty examples") {
  const auto h = hadamard_pair();
  const auto zero = QuantumState::pure(basis_vector(2, 0));
  CHECK(weighted_uncertainty(h, zero, Weights(1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(weighted_uncertainty(h, zero, Weights(0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(weighted_uncertainty(h, zero, Weights(1, 0)) == 0.0);

  Vector plus(2);
  plus << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  CHECK(weighted_uncertainty(identity_pair(2), QuantumState::pure(plus), Weights(1, 1)) ==
        doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(weighted_uncertainty(h, QuantumState::pure(basis_vector(3, 0)), Weights(1, 1)),
                  InstanceError);
}

TEST_CASE("weights validation") {
  CHECK_THROWS_AS(Weights(-1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(Weights(0.0, 0.0), ParameterError);
  CHECK_THROWS_AS(Weights(std::nan(""), 1.0), ParameterError);
  CHECK_THROWS_AS(Weights(kInfinity, 1.0), ParameterError);
  const Weights w = Weights(3.0, 1.0).normalized();
  CHECK(w.lambda() == doctest::Approx(0.75));
  CHECK(w.total() == doctest::Approx(1.0));
}

TEST_CASE("property: shannon lies in [0, log d] and matches a direct sum") {
  Rng rng(1);
  for (int k = 0; k < 500; ++k) {
    const int dim = 2 + k % 7;
    const auto p = random_distribution(dim, rng);
    const double h = shannon(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log2(dim) + 1e-12);
    std::vector<double> raw(p.values().begin(), p.values().end());
    CHECK(std::abs(h - oracle::entropy2(raw)) <= 1e-12);
  }
}

TEST_CASE("property: renyi entropy is non-increasing in the order") {
  Rng rng(2);
  const std::vector<double> orders = {0.1, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0, 7.0, 20.0, kInfinity};
  for (int k = 0; k < 300; ++k) {
    const auto p = random_distribution(2 + k % 6, rng);
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
      CHECK(renyi(p, orders[i]) >= renyi(p, orders[i + 1]) - 1e-10);
    }
    CHECK(renyi(p, 0.9) >= shannon(p) - 1e-10);
    CHECK(shannon(p) >= renyi(p, 1.1) - 1e-10);
  }
}

TEST_CASE("property: renyi tends to shannon at order one") {
  Rng rng(3);
  for (int k = 0; k < 300; ++k) {
    const auto p = random_distribution(2 + k % 6, rng);
    CHECK(std::abs(renyi(p, 1.0 + 1e-4) - shannon(p)) <= 1e-3);
    CHECK(std::abs(renyi(p, 1.0 - 1e-4) - shannon(p)) <= 1e-3);
  }
}

TEST_CASE("property: collision and min-entropy identities") {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_distribution(2 + k % 5, rng);
    double collision = 0.0, pmax = 0.0;
    for (double v : p.values()) {
      collision += v * v;
      pmax = std::max(pmax, v);
    }
    // probability that two independent draws coincide
    CHECK(std::abs(renyi(p, 2.0) + std::log2(collision)) <= 1e-12);
    // best single guess succeeds with probability max_i p_i
    CHECK(std::abs(renyi(p, kInfinity) + std::log2(pmax)) <= 1e-12);
  }
}

TEST_CASE("property: entropies are additive on product distributions") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_distribution(2 + k % 3, rng);
    const auto q = random_distribution(2 + k % 4, rng);
    const auto pq = p.tensor(q);
    CHECK(std::abs(shannon(pq) - shannon(p) - shannon(q)) <= 1e-12);
    for (double a : {0.5, 2.0, 4.5, kInfinity}) {
      CHECK(std::abs(renyi(pq, a) - renyi(p, a) - renyi(q, a)) <= 1e-11);
    }
  }
}

TEST_CASE("property: relative entropy is non-negative and vanishes on equality") {
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    const int dim = 2 + k % 5;
    const auto p = random_distribution(dim, rng);
    const auto q = random_distribution(dim, rng);
    CHECK(relative_entropy(p, q).value >= 0.0);
    CHECK(relative_entropy(p, p).value <= 1e-14);
    // D(p || u) = log d - H(p)
    const auto u = pv(std::vector<double>(dim, 1.0 / dim));
    CHECK(std::abs(relative_entropy(p, u).value - (std::log2(dim) - shannon(p))) <= 1e-12);
  }
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.11) == doctest::Approx(oracle::entropy2({0.11, 0.89})).epsilon(1e-14));
}
