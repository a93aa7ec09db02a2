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

#ifndef ENTROBOUND_ENTROPY_HPP_
#define ENTROBOUND_ENTROPY_HPP_

#include <span>

#include "entrobound/quantum_core.hpp"

namespace entrobound {

/// Entries below this are treated as exact zeros (0 log 0 = 0).
inline constexpr double kZeroProbability = 1e-15;

enum class LogBase { kBits, kNats };

/// Converts a value in bits to the requested unit.
double from_bits(double bits, LogBase base);

/// Non-negative weights (lambda, mu) of a linear uncertainty relation.
class Weights {
 public:
  Weights(double lambda, double mu);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double total() const { return lambda_ + mu_; }

  /// Rescaled so that lambda + mu = 1.
  Weights normalized() const { return scaled(1.0 / total()); }
  Weights scaled(double t) const { return Weights(t * lambda_, t * mu_); }
  Weights swapped() const { return Weights(mu_, lambda_); }

 private:
  double lambda_;
  double mu_;
};

double shannon(const ProbabilityVector& p, LogBase base = LogBase::kBits);
double shannon(std::span<const double> p, LogBase base = LogBase::kBits);

/// H_alpha(p) = alpha/(1-alpha) log ||p||_alpha for alpha > 0, alpha != 1.
/// alpha = +infinity gives the min-entropy -log max_i p_i.
double renyi(const ProbabilityVector& p, double alpha,
             LogBase base = LogBase::kBits);
double renyi(std::span<const double> p, double alpha,
             LogBase base = LogBase::kBits);

struct RelativeEntropy {
  double value;     // +infinity when divergent
  bool divergent;   // supp(p) is not contained in supp(q)
};

RelativeEntropy relative_entropy(const ProbabilityVector& p,
                                 const ProbabilityVector& q,
                                 LogBase base = LogBase::kBits);

/// h2(x) = -x log x - (1-x) log(1-x)
double binary_entropy(double x, LogBase base = LogBase::kBits);

/// lambda H(X|rho) + mu H(Y|rho)
double weighted_uncertainty(const MeasurementPair& pair,
                            const QuantumState& state, const Weights& w,
                            LogBase base = LogBase::kBits);

/// Unvalidated fast path for optimizer inner loops; phi must be normalized.
/// Result in bits.
double weighted_uncertainty_bits(const Matrix& unitary, const Vector& phi,
                                 double lambda, double mu);

}  // namespace entrobound

#endif  // ENTROBOUND_ENTROPY_HPP_
