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

// l^p -> l^q operator norms of unitaries, the nested (mixed) norm on
// bipartite vectors, and the bilinear ball functional
//
//   omega_N(lambda, mu) = sup_{x in B_r, y in B_s} |x^dagger U y|,
//   r = 2N/(N + 2 lambda),  s = 2N/(N + 2 mu),
//
// whose negative log, scaled by N, lower-bounds the optimal weighted
// entropic uncertainty constant.
//
// Infinite exponents are passed as kInfinity and always handled by explicit
// branches, never as a large finite power.

#ifndef ENTROBOUND_PQ_NORMS_HPP_
#define ENTROBOUND_PQ_NORMS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "entrobound/entropy.hpp"
#include "entrobound/quantum_core.hpp"

namespace entrobound {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Hoelder conjugate p/(p-1) for p in [1, inf]; 1 <-> inf.
double conjugate_exponent(double p);

/// Exponents derived from (lambda, mu) and N.
struct NormParams {
  double N = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  double r = 0.0;  // 1/r = 1/2 + lambda/N
  double s = 0.0;  // 1/s = 1/2 + mu/N
  std::optional<double> r_dual;  // 1/r + 1/r' = 1; infinite at lambda = N/2
  std::optional<double> s_dual;
  /// 2/(1 - mu/lambda) when lambda > mu; infinite when lambda == mu.
  std::optional<double> t;

  /// Any finite N > 0; omega itself requires N >= 1.
  static NormParams make(const Weights& w, double N);
};

/// A witness-backed estimate of a norm: value == |x^dagger U y| for the
/// stored witnesses, so it is always a lower bound on the true supremum.
struct NormEstimate {
  double value = 0.0;
  Vector witness_x;
  Vector witness_y;
  int restarts = 0;
  int iterations = 0;
  bool converged = false;
  bool exact = false;  // closed-form case, value is the true norm
};

struct SolverOptions {
  int restarts = 32;
  int max_iterations = 500;
  /// Stop once a step improves the value by less than tolerance * value.
  double tolerance = 1e-12;
  bool accelerate = true;
  /// Tried (in order) before the random restarts.
  std::vector<Vector> extra_starts;
};

double vector_norm(const Vector& x, double p);

/// w with ||w||_{q'} = 1 and w^dagger z = ||z||_q (the Hoelder-dual direction).
Vector dual_vector(const Vector& z, double q);

struct BipartiteSplit {
  int dim_a;
  int dim_b;
};

/// (sum_i (sum_j |phi_ij|^inner)^(outer/inner))^(1/outer) with
/// phi_ij = phi[i * dim_b + j]; i runs over A, j over B.
double mixed_norm(const Vector& phi, BipartiteSplit split, double outer,
                  double inner);

/// Index transposition (i, j) -> (j, i): the result is laid out as
/// dim_b x dim_a.
Vector flip(const Vector& phi, BipartiteSplit split);

/// sup_phi ||U phi||_q / ||phi||_p. Exact for p = q = 2, p = 1 and q = inf;
/// otherwise multi-start alternating dual-map iteration.
NormEstimate pq_norm(const Matrix& u, double p, double q, std::uint64_t seed,
                     const SolverOptions& options = {});

struct OmegaResult {
  NormParams params;
  NormEstimate estimate;  // best over all evaluated forms
  NormEstimate bilinear;  // sup over B_r x B_s
  /// sup ||U phi||_{r'} / ||phi||_s, when lambda, mu <= N/2.
  std::optional<NormEstimate> ratio_form;
  /// sup ||U^dagger phi||_{s'} / ||phi||_r, when lambda, mu <= N/2.
  std::optional<NormEstimate> ratio_form_adjoint;
  double cross_check_defect = 0.0;
  bool consistent = true;  // all forms agree within 1e-8
};

inline constexpr double kOmegaCrossCheckTolerance = 1e-8;

OmegaResult omega(const MeasurementPair& pair, const Weights& w, double N,
                  std::uint64_t seed, const SolverOptions& options = {});

struct MultiplicativityReport {
  double p = 0.0;
  double q = 0.0;
  double eta_a = 0.0;
  double eta_b = 0.0;
  double eta_ab = 0.0;
  double defect = 0.0;
  double tol = 0.0;
  bool exact = false;
  bool pass = false;
};

/// Compares ||U_A (x) U_B||_{q,p} with ||U_A||_{q,p} ||U_B||_{q,p}.
/// Requires 1 <= p <= q.
MultiplicativityReport multiplicativity_check(const MeasurementPair& a,
                                              const MeasurementPair& b,
                                              double p, double q, double tol,
                                              std::uint64_t seed,
                                              const SolverOptions& options = {});

}  // namespace entrobound

#endif  // ENTROBOUND_PQ_NORMS_HPP_
