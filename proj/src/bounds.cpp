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

#include "entrobound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

constexpr double kProbabilityFloor = 1e-12;
constexpr double kNumericSlack = 1e-8;

double entropy_bits(const Eigen::VectorXd& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > kZeroProbability) h -= p(i) * std::log2(p(i));
  }
  return std::max(h, 0.0);
}

double objective(const Matrix& u, const Vector& phi, const Weights& w) {
  return weighted_uncertainty_bits(u, phi, w.lambda(), w.mu());
}

// X eigenstates, Y eigenstates, then Haar-random states.
std::vector<Vector> minimizer_starts(const Matrix& u, int restarts,
                                     std::uint64_t seed) {
  const int d = static_cast<int>(u.rows());
  std::vector<Vector> starts;
  for (int k = 0; k < d; ++k) starts.push_back(Vector::Unit(d, k));
  for (int k = 0; k < d; ++k) starts.push_back(u.col(k));
  Rng rng(seed);
  for (int k = 0; k < restarts; ++k) starts.push_back(random_pure_vector(d, rng));
  return starts;
}

// With a vanishing weight the remaining measurement has an eigenstate.
std::optional<BoundResult> trivial_weight_result(const MeasurementPair& pair,
                                                 const Weights& w,
                                                 BoundMethod method) {
  if (w.lambda() > 0.0 && w.mu() > 0.0) return std::nullopt;
  BoundResult out;
  out.lambda = w.lambda();
  out.mu = w.mu();
  out.method = method;
  out.lower_method = BoundMethod::kMuGeneralized;
  out.upper_method = method;
  out.witness = w.mu() == 0.0 ? Vector(Vector::Unit(pair.dim(), 0))
                              : Vector(pair.unitary().col(0));
  out.upper = objective(pair.unitary(), out.witness, w);
  out.lower = 0.0;
  return out;
}

}  // namespace

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kMuGeneralized: return "mu_generalized";
    case BoundMethod::kOmegaN: return "omega_N";
    case BoundMethod::kAlternating: return "alternating";
    case BoundMethod::kDirect: return "direct";
    case BoundMethod::kCombined: return "combined";
  }
  return "unknown";
}

double mu_bound(const MeasurementPair& pair, const Weights& w) {
  if (w.lambda() == 0.0 || w.mu() == 0.0) return 0.0;
  if (w.mu() > w.lambda()) return mu_bound(pair.adjoint(), w.swapped());
  const double t =
      w.lambda() == w.mu() ? kInfinity : 2.0 / (1.0 - w.mu() / w.lambda());
  const Matrix& u = pair.unitary();
  double largest = 0.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const Vector row = u.row(i).transpose();
    largest = std::max(largest, vector_norm(row, t));
  }
  return -2.0 * w.lambda() * std::log2(largest);
}

double omega_lower_bound(const MeasurementPair& pair, const Weights& w, double N,
                         std::uint64_t seed, const SolverOptions& options) {
  const OmegaResult om = omega(pair, w, N, seed, options);
  if (!(om.estimate.value > 0.0)) {
    throw NumericError("omega_N estimate is not positive");
  }
  return -N * std::log2(om.estimate.value);
}

BoundResult alternating_minimization(const MeasurementPair& pair,
                                     const Weights& w,
                                     const MinimizerOptions& options) {
  if (auto trivial = trivial_weight_result(pair, w, BoundMethod::kAlternating)) {
    return *trivial;
  }
  const Matrix& u = pair.unitary();
  const Matrix u_adj = u.adjoint();
  const int d = pair.dim();
  BoundResult best;
  best.lambda = w.lambda();
  best.mu = w.mu();
  best.method = BoundMethod::kAlternating;
  best.upper_method = BoundMethod::kAlternating;
  best.lower = mu_bound(pair, w);
  best.upper = kInfinity;
  best.converged = true;
  double max_increase = -kInfinity;
  int total_iterations = 0;

  for (const Vector& start : minimizer_starts(u, options.restarts, options.seed)) {
    Vector phi = start / start.norm();
    double value = objective(u, phi, w);
    bool converged = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      const Eigen::VectorXd p = phi.cwiseAbs2();
      const Eigen::VectorXd q = (u_adj * phi).cwiseAbs2();
      Eigen::VectorXd a(d), b(d);
      for (int i = 0; i < d; ++i) {
        a(i) = -std::log2(std::max(p(i), kProbabilityFloor));
        b(i) = -std::log2(std::max(q(i), kProbabilityFloor));
      }
      Matrix h = w.mu() * (u * b.asDiagonal() * u_adj);
      h.diagonal() += (w.lambda() * a).cast<Complex>();
      h = 0.5 * (h + h.adjoint()).eval();
      const Vector next = lowest_eigenvector(h);
      const double next_value = objective(u, next, w);
      ++total_iterations;
      max_increase = std::max(max_increase, next_value - value);
      const bool small_step = value - next_value < options.tolerance;
      if (next_value < value) {
        phi = next;
        value = next_value;
      }
      if (small_step) {
        converged = true;
        break;
      }
    }
    if (!converged) best.converged = false;
    if (value < best.upper) {
      best.upper = value;
      best.witness = phi;
    }
  }
  best.iterations = total_iterations;
  best.max_objective_increase = max_increase;
  return best;
}

BoundResult direct_minimization(const MeasurementPair& pair, const Weights& w,
                                const MinimizerOptions& options) {
  if (auto trivial = trivial_weight_result(pair, w, BoundMethod::kDirect)) {
    return *trivial;
  }
  const Matrix& u = pair.unitary();
  const Matrix u_adj = u.adjoint();
  const int d = pair.dim();

  // Riemannian gradient of the objective (bits) at a unit vector. Radial
  // components, including those from the constant in dH/dp, drop out.
  auto gradient = [&](const Vector& phi) {
    const Vector y = u_adj * phi;
    Vector gx(d), gy(d);
    for (int i = 0; i < d; ++i) {
      const double px = std::norm(phi(i));
      const double py = std::norm(y(i));
      gx(i) = px > 1e-300 ? std::log2(px) * phi(i) : Complex(0.0);
      gy(i) = py > 1e-300 ? std::log2(py) * y(i) : Complex(0.0);
    }
    Vector g = -2.0 * (w.lambda() * gx + w.mu() * (u * gy));
    g -= phi.dot(g).real() * phi;
    return g;
  };

  BoundResult best;
  best.lambda = w.lambda();
  best.mu = w.mu();
  best.method = BoundMethod::kDirect;
  best.upper_method = BoundMethod::kDirect;
  best.lower = mu_bound(pair, w);
  best.upper = kInfinity;
  best.converged = true;
  int total_iterations = 0;

  for (const Vector& start : minimizer_starts(u, options.restarts, options.seed)) {
    Vector phi = start / start.norm();
    double value = objective(u, phi, w);
    Vector g = gradient(phi);
    double step = 0.1;
    bool converged = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      ++total_iterations;
      const double gnorm2 = g.squaredNorm();
      if (gnorm2 < 1e-24) {
        converged = true;
        break;
      }
      // Armijo backtracking from the Barzilai-Borwein trial step.
      Vector trial;
      double trial_value = value;
      bool accepted = false;
      for (int k = 0; k < 60; ++k) {
        trial = phi - step * g;
        trial /= trial.norm();
        trial_value = objective(u, trial, w);
        if (trial_value <= value - 1e-4 * step * gnorm2) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        converged = true;
        break;
      }
      const Vector next_g = gradient(trial);
      const Vector s = trial - phi;
      const double sy = s.dot(next_g - g).real();
      step = sy > 0.0 ? s.squaredNorm() / sy : 2.0 * step;
      const double decrease = value - trial_value;
      phi = std::move(trial);
      value = trial_value;
      g = next_g;
      if (decrease < options.tolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) best.converged = false;
    if (value < best.upper) {
      best.upper = value;
      best.witness = phi;
    }
  }
  best.iterations = total_iterations;
  return best;
}

BoundResult optimal_bound(const MeasurementPair& pair, const Weights& w,
                          const BoundConfig& config) {
  if (config.n_max_exponent < 1 || config.n_max_exponent > 30) {
    throw ParameterError("N-max exponent must lie in [1, 30]");
  }
  if (config.restarts < 0) throw ParameterError("restarts must be >= 0");
  if (auto trivial = trivial_weight_result(pair, w, BoundMethod::kCombined)) {
    return *trivial;
  }
  const double total = w.total();
  const Weights unit = w.normalized();

  BoundResult result;
  result.lambda = w.lambda();
  result.mu = w.mu();
  result.method = BoundMethod::kCombined;

  double lower = mu_bound(pair, unit);
  result.lower_method = BoundMethod::kMuGeneralized;
  SolverOptions omega_options = config.omega_options;
  omega_options.restarts = config.restarts;
  std::vector<Vector> warm;
  for (int k = 1; k <= config.n_max_exponent; ++k) {
    const double N = std::ldexp(1.0, k);
    SolverOptions opts = omega_options;
    opts.extra_starts.insert(opts.extra_starts.begin(), warm.begin(), warm.end());
    const OmegaResult om = omega(pair, unit, N, derive_seed(config.seed, 16 + k), opts);
    warm.assign(1, om.estimate.witness_y);
    const double b = -N * std::log2(om.estimate.value);
    result.omega_trace.push_back(
        {N * total, total * b, om.estimate.value, om.cross_check_defect});
    if (b > lower) {
      lower = b;
      result.lower_method = BoundMethod::kOmegaN;
      result.params = NormParams::make(w, N * total);
    }
  }

  MinimizerOptions mopts;
  mopts.restarts = config.restarts;
  mopts.tolerance = config.minimizer_tolerance;
  mopts.max_iterations = config.minimizer_max_iterations;
  mopts.seed = derive_seed(config.seed, 1);
  const BoundResult alt = alternating_minimization(pair, unit, mopts);
  mopts.seed = derive_seed(config.seed, 2);
  const BoundResult dir = direct_minimization(pair, unit, mopts);
  const BoundResult& up = dir.upper < alt.upper ? dir : alt;

  result.upper = total * up.upper;
  result.lower = total * lower;
  result.witness = up.witness;
  result.upper_method = up.upper_method;
  result.iterations = alt.iterations + dir.iterations;
  result.max_objective_increase = total * alt.max_objective_increase;
  result.converged = alt.converged && dir.converged;
  if (result.lower > result.upper + kNumericSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "certified lower bound " << result.lower
        << " exceeds witnessed upper bound " << result.upper;
    throw NumericError(msg.str());
  }
  return result;
}

RenyiCheckReport renyi_bound_check(const MeasurementPair& pair, const Weights& w,
                                   double N, int samples, std::uint64_t seed,
                                   const SolverOptions& options) {
  if (samples < 1) throw ParameterError("samples must be >= 1");
  const NormParams params = NormParams::make(w, N);
  if (!params.r_dual || !params.s_dual) {
    std::ostringstream msg;
    msg << "Renyi check needs lambda, mu <= N/2, got (" << w.lambda() << ", "
        << w.mu() << ") at N = " << N;
    throw ParameterError(msg.str());
  }
  RenyiCheckReport report;
  report.lambda = w.lambda();
  report.mu = w.mu();
  report.N = N;
  report.alpha_x = params.r / 2.0;
  report.alpha_y = *params.s_dual / 2.0;
  report.samples = samples;
  report.bound = omega_lower_bound(pair, w, N, derive_seed(seed, 0), options);

  auto entropy = [](const Eigen::VectorXd& p, double alpha) {
    if (alpha == 1.0) return entropy_bits(p);
    return renyi(std::span<const double>(p.data(), p.size()), alpha);
  };
  Rng rng(derive_seed(seed, 1));
  report.sampled_infimum = kInfinity;
  report.worst_slack = kInfinity;
  Eigen::VectorXd px, py;
  for (int k = 0; k < samples; ++k) {
    const Vector phi = random_pure_vector(pair.dim(), rng);
    outcome_probabilities(phi, pair.unitary(), px, py);
    double value = 0.0;
    if (w.lambda() > 0.0) value += w.lambda() * entropy(px, report.alpha_x);
    if (w.mu() > 0.0) value += w.mu() * entropy(py, report.alpha_y);
    report.sampled_infimum = std::min(report.sampled_infimum, value);
    const double slack = value - report.bound;
    report.worst_slack = std::min(report.worst_slack, slack);
    if (slack < -kRenyiSlack) ++report.violations;
  }
  report.pass = report.violations == 0;
  return report;
}

AdditivityReport additivity_check(const MeasurementPair& a,
                                  const MeasurementPair& b, const Weights& w,
                                  const BoundConfig& config, double tol,
                                  double gap_guard, int dimension_cap) {
  const long long joint = static_cast<long long>(a.dim()) * b.dim();
  if (joint > dimension_cap) {
    std::ostringstream msg;
    msg << "product dimension " << a.dim() << " x " << b.dim() << " = " << joint
        << " exceeds the cap of " << dimension_cap;
    throw ResourceError(msg.str());
  }
  AdditivityReport report;
  report.tol = tol;
  report.gap_guard = gap_guard;
  BoundConfig cfg = config;
  cfg.seed = derive_seed(config.seed, 0);
  report.c_a = optimal_bound(a, w, cfg);
  cfg.seed = derive_seed(config.seed, 1);
  report.c_b = optimal_bound(b, w, cfg);
  cfg.seed = derive_seed(config.seed, 2);
  const MeasurementPair ab = tensor_pair(a, b);
  report.c_ab = optimal_bound(ab, w, cfg);

  const double local_sum = report.c_a.upper + report.c_b.upper;
  report.defect = std::abs(report.c_ab.upper - local_sum);
  const Vector product = kron(report.c_a.witness, report.c_b.witness);
  report.witness_product =
      objective(ab.unitary(), product / product.norm(), w);
  report.witness_defect = std::abs(report.witness_product - local_sum);
  report.max_gap = std::max(
      {report.c_a.gap(), report.c_b.gap(), report.c_ab.gap()});
  report.pass = report.defect <= tol && report.witness_defect <= tol &&
                report.max_gap <= gap_guard;
  return report;
}

Matrix pauli_basis(int axis) {
  const double a = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Matrix u(2, 2);
  switch (axis) {
    case 0: u << a, a, a, -a; break;
    case 1: u << a, a, a * i, -a * i; break;
    case 2: u = Matrix::Identity(2, 2); break;
    default: throw ParameterError("Pauli axis must be 0, 1 or 2");
  }
  return u;
}

ThreePauliReport three_pauli_counterexample() {
  const Matrix bases[3] = {pauli_basis(0), pauli_basis(1), pauli_basis(2)};
  auto local_sum = [&](const Vector& phi) {
    double total = 0.0;
    for (const Matrix& u : bases) {
      total += entropy_bits((u.adjoint() * phi).cwiseAbs2());
    }
    return total;
  };

  ThreePauliReport report;
  report.local_min = kInfinity;
  auto consider = [&](const Vector& phi) {
    const double v = local_sum(phi);
    if (v < report.local_min) {
      report.local_min = v;
      report.local_witness = phi;
    }
  };
  // Eigenstates of the three Paulis first, then a Bloch-sphere grid.
  for (const Matrix& u : bases) {
    consider(u.col(0));
    consider(u.col(1));
  }
  const int n_theta = 181;
  const int n_phi = 360;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::numbers::pi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double ph = 2.0 * std::numbers::pi * j / n_phi;
      Vector phi(2);
      phi << std::cos(theta / 2), std::polar(std::sin(theta / 2), ph);
      consider(phi);
    }
  }
  report.product_min = 2.0 * report.local_min;

  Vector singlet = Vector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  report.bell_value = 0.0;
  for (const Matrix& u : bases) {
    report.bell_value += entropy_bits((kron(u, u).adjoint() * singlet).cwiseAbs2());
  }
  report.violated = report.bell_value < report.product_min;
  return report;
}

}  // namespace entrobound
