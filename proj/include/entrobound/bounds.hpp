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

// Bounds on c(lambda, mu) = min_rho lambda H(X|rho) + mu H(Y|rho).
//
// Lower bounds come from norms (mu_bound, omega_lower_bound); upper bounds
// come from explicit witness states found by two independent minimizers.
// Everything is in bits.

#ifndef ENTROBOUND_BOUNDS_HPP_
#define ENTROBOUND_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entrobound/entropy.hpp"
#include "entrobound/pq_norms.hpp"
#include "entrobound/quantum_core.hpp"

namespace entrobound {

enum class BoundMethod { kMuGeneralized, kOmegaN, kAlternating, kDirect, kCombined };

std::string to_string(BoundMethod method);

struct OmegaTracePoint {
  double N = 0.0;
  double bound = 0.0;  // -N log2 omega_N, scaled to the caller's weights
  double omega = 0.0;
  double cross_check_defect = 0.0;
};

struct BoundResult {
  double lambda = 0.0;
  double mu = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Vector witness;  // unit vector attaining `upper`
  BoundMethod method = BoundMethod::kCombined;
  BoundMethod lower_method = BoundMethod::kMuGeneralized;
  BoundMethod upper_method = BoundMethod::kAlternating;
  std::optional<NormParams> params;  // at the N that gave `lower`
  int iterations = 0;
  std::vector<OmegaTracePoint> omega_trace;
  /// Largest single-step objective increase seen by the alternating
  /// minimizer (should be <= 0 up to round-off).
  double max_objective_increase = 0.0;
  bool converged = true;

  double gap() const { return upper - lower; }
  QuantumState witness_state() const { return QuantumState::normalized(witness); }
};

/// Generalized Maassen-Uffink bound -2 lambda log2 max_i ||row_i(U)||_t with
/// t = 2/(1 - mu/lambda) for lambda >= mu; the adjoint with swapped weights
/// otherwise. Zero when either weight vanishes.
double mu_bound(const MeasurementPair& pair, const Weights& w);

/// -N log2 omega_N(lambda, mu).
double omega_lower_bound(const MeasurementPair& pair, const Weights& w, double N,
                         std::uint64_t seed, const SolverOptions& options = {});

struct MinimizerOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  /// Stop a run once an iteration lowers the objective by less than this (bits).
  double tolerance = 1e-13;
  int max_iterations = 5000;
};

/// Alternates between the ground state of lambda A(p) + mu B(q) and
/// resetting (p, q) to that state's outcome distributions.
BoundResult alternating_minimization(const MeasurementPair& pair,
                                     const Weights& w,
                                     const MinimizerOptions& options);

/// Projected gradient descent of the weighted entropy on the unit sphere.
BoundResult direct_minimization(const MeasurementPair& pair, const Weights& w,
                                const MinimizerOptions& options);

struct BoundConfig {
  int n_max_exponent = 10;  // N runs over 2, 4, ..., 2^n_max_exponent
  int restarts = 32;
  std::uint64_t seed = 0;
  double minimizer_tolerance = 1e-13;
  int minimizer_max_iterations = 5000;
  SolverOptions omega_options;  // restarts are taken from `restarts`
};

/// Certified lower bound (max of mu_bound and the omega_N schedule) and
/// witnessed upper bound (min of both minimizers).
BoundResult optimal_bound(const MeasurementPair& pair, const Weights& w,
                          const BoundConfig& config = {});

struct RenyiCheckReport {
  double lambda = 0.0;
  double mu = 0.0;
  double N = 0.0;
  double alpha_x = 0.0;  // r/2
  double alpha_y = 0.0;  // s'/2, possibly infinite
  double bound = 0.0;    // -N log2 omega_N
  double sampled_infimum = 0.0;
  int samples = 0;
  int violations = 0;
  double worst_slack = 0.0;  // min over samples of value - bound
  bool pass = false;
};

inline constexpr double kRenyiSlack = 1e-8;

/// Samples random pure states and checks
/// lambda H_{r/2}(X) + mu H_{s'/2}(Y) >= -N log2 omega_N - 1e-8.
/// Requires lambda, mu <= N/2.
RenyiCheckReport renyi_bound_check(const MeasurementPair& pair, const Weights& w,
                                   double N, int samples, std::uint64_t seed,
                                   const SolverOptions& options = {});

inline constexpr int kDefaultDimensionCap = 36;

struct AdditivityReport {
  BoundResult c_a;
  BoundResult c_b;
  BoundResult c_ab;
  double defect = 0.0;           // |c_ab - c_a - c_b| on the uppers
  double witness_product = 0.0;  // objective of witness_a (x) witness_b on AB
  double witness_defect = 0.0;   // |witness_product - c_a - c_b|
  double max_gap = 0.0;
  double tol = 0.0;
  double gap_guard = 0.0;
  bool pass = false;
};

/// Throws ResourceError when d_A d_B exceeds `dimension_cap`.
AdditivityReport additivity_check(const MeasurementPair& a,
                                  const MeasurementPair& b, const Weights& w,
                                  const BoundConfig& config, double tol,
                                  double gap_guard = 1e-3,
                                  int dimension_cap = kDefaultDimensionCap);

struct ThreePauliReport {
  double local_min = 0.0;    // min over qubit states of H(sx) + H(sy) + H(sz)
  Vector local_witness;
  double product_min = 0.0;  // twice the local minimum
  double bell_value = 0.0;   // the same sum on the singlet, per two-qubit basis
  bool violated = false;     // bell_value < product_min
};

/// The two-qubit measurements sx(x)sx, sy(x)sy, sz(x)sz with unit weights.
ThreePauliReport three_pauli_counterexample();

/// Basis changes of the three Pauli eigenbases (x, y, z order).
Matrix pauli_basis(int axis);

}  // namespace entrobound

#endif  // ENTROBOUND_BOUNDS_HPP_
