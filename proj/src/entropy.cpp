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

#include "entrobound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

double log_in(double x, LogBase base) {
  return base == LogBase::kBits ? std::log2(x) : std::log(x);
}

double shannon_bits(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > kZeroProbability) h -= v * std::log2(v);
  }
  return std::max(h, 0.0);  // p_i slightly above 1 after rounding
}

}  // namespace

double from_bits(double bits, LogBase base) {
  return base == LogBase::kBits ? bits : bits * std::numbers::ln2;
}

Weights::Weights(double lambda, double mu) : lambda_(lambda), mu_(mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || lambda < 0.0 ||
      mu < 0.0 || !(lambda + mu > 0.0)) {
    std::ostringstream msg;
    msg << "weights must be finite, non-negative and not both zero, got ("
        << lambda << ", " << mu << ")";
    throw ParameterError(msg.str());
  }
}

double shannon(std::span<const double> p, LogBase base) {
  return from_bits(shannon_bits(p), base);
}

double shannon(const ProbabilityVector& p, LogBase base) {
  return shannon(p.values(), base);
}

double renyi(std::span<const double> p, double alpha, LogBase base) {
  if (!(alpha > 0.0) || alpha == 1.0 || std::isnan(alpha)) {
    std::ostringstream msg;
    msg << "Renyi order must be positive and different from 1, got " << alpha;
    throw ParameterError(msg.str());
  }
  if (std::isinf(alpha)) {
    const double pmax = *std::max_element(p.begin(), p.end());
    return -log_in(pmax, base);
  }
  double sum = 0.0;
  for (double v : p) {
    if (v > kZeroProbability) sum += std::pow(v, alpha);
  }
  // alpha/(1-alpha) * log ||p||_alpha = 1/(1-alpha) * log sum p_i^alpha
  return log_in(sum, base) / (1.0 - alpha);
}

double renyi(const ProbabilityVector& p, double alpha, LogBase base) {
  return renyi(p.values(), alpha, base);
}

RelativeEntropy relative_entropy(const ProbabilityVector& p,
                                 const ProbabilityVector& q, LogBase base) {
  if (p.size() != q.size()) {
    throw InstanceError("relative entropy of distributions of unequal length");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= kZeroProbability) continue;
    if (q[i] <= kZeroProbability) {
      return {std::numeric_limits<double>::infinity(), true};
    }
    d += p[i] * log_in(p[i] / q[i], base);
  }
  return {std::max(d, 0.0), false};
}

double binary_entropy(double x, LogBase base) {
  const double pair[2] = {x, 1.0 - x};
  return shannon(std::span<const double>(pair, 2), base);
}

double weighted_uncertainty(const MeasurementPair& pair,
                            const QuantumState& state, const Weights& w,
                            LogBase base) {
  const auto px = outcome_distribution(state, pair, Basis::kX);
  const auto py = outcome_distribution(state, pair, Basis::kY);
  double total = 0.0;
  if (w.lambda() > 0.0) total += w.lambda() * shannon(px, LogBase::kBits);
  if (w.mu() > 0.0) total += w.mu() * shannon(py, LogBase::kBits);
  return from_bits(total, base);
}

double weighted_uncertainty_bits(const Matrix& unitary, const Vector& phi,
                                 double lambda, double mu) {
  Eigen::VectorXd px, py;
  outcome_probabilities(phi, unitary, px, py);
  double total = 0.0;
  if (lambda > 0.0) {
    total += lambda * shannon_bits(std::span<const double>(px.data(), px.size()));
  }
  if (mu > 0.0) {
    total += mu * shannon_bits(std::span<const double>(py.data(), py.size()));
  }
  return total;
}

}  // namespace entrobound
