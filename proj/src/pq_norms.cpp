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

#include "entrobound/pq_norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

Complex phase_of(Complex z) {
  const double a = std::abs(z);
  return a > 0.0 ? z / a : Complex(1.0);
}

void check_exponent(double p, const char* name) {
  if (std::isnan(p) || p < 1.0) {
    std::ostringstream msg;
    msg << "exponent " << name << " must lie in [1, inf], got " << p;
    throw ParameterError(msg.str());
  }
}

Vector basis_vector(int dim, int k, Complex phase = 1.0) {
  Vector e = Vector::Zero(dim);
  e(k) = phase;
  return e;
}

// Maximizes ||A y||_q / ||y||_p by the fixed-point map
//   y -> dual_{p'}(A^dagger dual_q(A y)),
// which never decreases the ratio. Iterates stay on the unit p-sphere.
class RatioMaximizer {
 public:
  RatioMaximizer(const Matrix& a, double p, double q, int max_iterations,
                 double tolerance, bool accelerate)
      : a_(a),
        a_adj_(a.adjoint()),
        p_(p),
        q_(q),
        p_dual_(conjugate_exponent(p)),
        max_iterations_(max_iterations),
        tolerance_(tolerance),
        accelerate_(accelerate) {}

  struct Run {
    Vector y;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
  };

  Run run(const Vector& start) const {
    Run out;
    out.y = normalize(start);
    out.value = value(out.y);
    Vector prev_delta;
    bool have_prev = false;
    for (int it = 1; it <= max_iterations_; ++it) {
      Vector next = step(out.y);
      double next_value = value(next);
      const Vector delta = next - out.y;
      bool extrapolated = false;
      if (accelerate_ && have_prev) {
        // The slow mode of the map is close to geometric; jump to the
        // limit of the series and keep the jump only if it improves.
        const double prev_norm = prev_delta.norm();
        const double rho = prev_norm > 0.0 ? delta.norm() / prev_norm : 0.0;
        if (rho > 0.0 && rho < 1.0) {
          Vector jump = out.y + delta / (1.0 - rho);
          if (jump.norm() > 0.0) {
            jump = normalize(jump);
            const double jump_value = value(jump);
            if (jump_value > next_value) {
              next = std::move(jump);
              next_value = jump_value;
              extrapolated = true;
            }
          }
        }
      }
      out.iterations = it;
      if (next_value - out.value <= tolerance_ * std::abs(next_value)) {
        if (next_value > out.value) {
          out.y = std::move(next);
          out.value = next_value;
        }
        out.converged = true;
        break;
      }
      out.y = std::move(next);
      out.value = next_value;
      prev_delta = delta;
      have_prev = !extrapolated;
    }
    return out;
  }

  // Builds the (x, y) witness for a run: x = dual_q(A y) so that
  // x^dagger A y = ||A y||_q.
  NormEstimate witness(const Vector& y) const {
    NormEstimate est;
    est.witness_y = y;
    const Vector ay = a_ * y;
    est.witness_x = dual_vector(ay, q_);
    est.value = std::abs(est.witness_x.dot(ay));
    return est;
  }

  Vector normalize(const Vector& y) const {
    const double n = vector_norm(y, p_);
    return n > 0.0 ? Vector(y / n) : basis_vector(static_cast<int>(y.size()), 0);
  }

 private:
  double value(const Vector& y) const { return vector_norm(a_ * y, q_); }

  Vector step(const Vector& y) const {
    const Vector x = dual_vector(a_ * y, q_);
    return dual_vector(a_adj_ * x, p_dual_);
  }

  const Matrix& a_;
  Matrix a_adj_;
  double p_;
  double q_;
  double p_dual_;
  int max_iterations_;
  double tolerance_;
  bool accelerate_;
};

// Multi-start driver over extra starts, basis vectors and random vectors.
NormEstimate maximize_ratio(const Matrix& a, double p, double q,
                            std::uint64_t seed, const SolverOptions& options,
                            const std::vector<Vector>& extra_starts) {
  const int dim = static_cast<int>(a.cols());
  RatioMaximizer solver(a, p, q, options.max_iterations, options.tolerance,
                        options.accelerate);
  Rng rng(seed);
  NormEstimate best;
  best.value = -1.0;
  int total_iterations = 0;
  int runs = 0;
  auto consider = [&](const Vector& start) {
    const auto run = solver.run(start);
    total_iterations += run.iterations;
    ++runs;
    NormEstimate est = solver.witness(run.y);
    if (est.value > best.value) {
      est.converged = run.converged;
      best = std::move(est);
    }
  };
  for (const Vector& start : extra_starts) {
    if (start.size() == dim) consider(start);
  }
  for (int k = 0; k < dim; ++k) consider(basis_vector(dim, k));
  for (int k = 0; k < options.restarts; ++k) {
    Vector start(dim);
    for (int i = 0; i < dim; ++i) start(i) = rng.complex_normal();
    consider(start);
  }
  best.restarts = runs;
  best.iterations = total_iterations;
  return best;
}

// p = 1: the supremum is attained at a basis vector (max column q-norm).
NormEstimate max_column_norm(const Matrix& u, double q) {
  NormEstimate best;
  best.value = -1.0;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    const Vector col = u.col(j);
    const double v = vector_norm(col, q);
    if (v > best.value) {
      best.value = v;
      best.witness_y = basis_vector(static_cast<int>(u.cols()), static_cast<int>(j));
      best.witness_x = dual_vector(col, q);
    }
  }
  best.value = std::abs(best.witness_x.dot(u * best.witness_y));
  best.exact = true;
  best.converged = true;
  return best;
}

// q = inf: the supremum is the largest dual p-norm of a row.
NormEstimate max_row_norm(const Matrix& u, double p) {
  const double p_dual = conjugate_exponent(p);
  NormEstimate best;
  best.value = -1.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const Vector row_conj = u.row(i).adjoint();
    const double v = vector_norm(row_conj, p_dual);
    if (v > best.value) {
      best.value = v;
      best.witness_x = basis_vector(static_cast<int>(u.rows()), static_cast<int>(i));
      best.witness_y = dual_vector(row_conj, p_dual);
    }
  }
  best.value = std::abs(best.witness_x.dot(u * best.witness_y));
  best.exact = true;
  best.converged = true;
  return best;
}

NormEstimate spectral_norm(const Matrix& u) {
  Eigen::JacobiSVD<Matrix> svd(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
  NormEstimate est;
  est.witness_x = svd.matrixU().col(0);
  est.witness_y = svd.matrixV().col(0);
  est.value = std::abs(est.witness_x.dot(u * est.witness_y));
  est.exact = true;
  est.converged = true;
  return est;
}

}  // namespace

double conjugate_exponent(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

NormParams NormParams::make(const Weights& w, double N) {
  if (!(N > 0.0) || !std::isfinite(N)) {
    std::ostringstream msg;
    msg << "N must be a finite positive number, got " << N;
    throw ParameterError(msg.str());
  }
  NormParams params;
  params.N = N;
  params.lambda = w.lambda();
  params.mu = w.mu();
  params.r = 2.0 * N / (N + 2.0 * w.lambda());
  params.s = 2.0 * N / (N + 2.0 * w.mu());
  auto dual = [N](double weight) -> std::optional<double> {
    if (2.0 * weight < N) return 2.0 * N / (N - 2.0 * weight);
    if (2.0 * weight == N) return kInfinity;
    return std::nullopt;
  };
  params.r_dual = dual(w.lambda());
  params.s_dual = dual(w.mu());
  if (w.lambda() > w.mu()) {
    params.t = 2.0 / (1.0 - w.mu() / w.lambda());
  } else if (w.lambda() == w.mu()) {
    params.t = kInfinity;
  }
  return params;
}

double vector_norm(const Vector& x, double p) {
  if (std::isnan(p) || !(p > 0.0)) {
    std::ostringstream msg;
    msg << "norm exponent must be positive, got " << p;
    throw ParameterError(msg.str());
  }
  const double m = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
  if (std::isinf(p) || m == 0.0) return m;
  if (p == 2.0) return x.norm();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum += std::pow(std::abs(x(i)) / m, p);
  }
  return m * std::pow(sum, 1.0 / p);
}

Vector dual_vector(const Vector& z, double q) {
  const int dim = static_cast<int>(z.size());
  Vector w = Vector::Zero(dim);
  if (dim == 0) return w;
  const double n = vector_norm(z, q);
  if (!(n > 0.0)) {
    w(0) = 1.0;
    return w;
  }
  if (std::isinf(q)) {
    Eigen::Index k = 0;
    z.cwiseAbs().maxCoeff(&k);
    w(k) = phase_of(z(k));
    return w;
  }
  for (int i = 0; i < dim; ++i) {
    const double a = std::abs(z(i));
    if (a == 0.0) continue;
    w(i) = q == 1.0 ? z(i) / a : (z(i) / a) * std::pow(a / n, q - 1.0);
  }
  return w;
}

double mixed_norm(const Vector& phi, BipartiteSplit split, double outer,
                  double inner) {
  if (split.dim_a < 1 || split.dim_b < 1 ||
      phi.size() != static_cast<Eigen::Index>(split.dim_a) * split.dim_b) {
    std::ostringstream msg;
    msg << "vector of length " << phi.size() << " does not factor as "
        << split.dim_a << " x " << split.dim_b;
    throw InstanceError(msg.str());
  }
  check_exponent(outer, "outer");
  check_exponent(inner, "inner");
  Vector row_norms(split.dim_a);
  for (int i = 0; i < split.dim_a; ++i) {
    row_norms(i) = vector_norm(phi.segment(static_cast<Eigen::Index>(i) * split.dim_b,
                                           split.dim_b),
                               inner);
  }
  return vector_norm(row_norms, outer);
}

Vector flip(const Vector& phi, BipartiteSplit split) {
  if (split.dim_a < 1 || split.dim_b < 1 ||
      phi.size() != static_cast<Eigen::Index>(split.dim_a) * split.dim_b) {
    std::ostringstream msg;
    msg << "flip: vector of length " << phi.size() << " does not factor as "
        << split.dim_a << " x " << split.dim_b;
    throw InstanceError(msg.str());
  }
  Vector out(phi.size());
  for (int i = 0; i < split.dim_a; ++i) {
    for (int j = 0; j < split.dim_b; ++j) {
      out(static_cast<Eigen::Index>(j) * split.dim_a + i) =
          phi(static_cast<Eigen::Index>(i) * split.dim_b + j);
    }
  }
  return out;
}

NormEstimate pq_norm(const Matrix& u, double p, double q, std::uint64_t seed,
                     const SolverOptions& options) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  if (u.rows() < 1 || u.cols() < 1 || !all_finite(u)) {
    throw InstanceError("pq_norm needs a finite non-empty matrix");
  }
  if (p == 1.0) return max_column_norm(u, q);
  if (std::isinf(q)) return max_row_norm(u, p);
  if (p == 2.0 && q == 2.0) return spectral_norm(u);
  return maximize_ratio(u, p, q, seed, options, options.extra_starts);
}

namespace {

// Maps an estimate of sup ||U^dagger phi||_{s'} / ||phi||_r (witness_y = phi
// on the X side, witness_x its dual on the Y side) to (x, y) form.
NormEstimate swap_witnesses(NormEstimate est) {
  std::swap(est.witness_x, est.witness_y);
  return est;
}

// Exact bilinear supremum when one of the balls has exponent <= 1: the
// convex function |x^dagger U y| peaks at a (phased) basis vector there.
std::optional<NormEstimate> bilinear_closed_form(const Matrix& u,
                                                 const NormParams& params) {
  if (params.r <= 1.0 && params.s <= 1.0) {
    Eigen::Index i = 0, j = 0;
    u.cwiseAbs().maxCoeff(&i, &j);
    NormEstimate est;
    est.witness_x = basis_vector(static_cast<int>(u.rows()), static_cast<int>(i),
                                 phase_of(u(i, j)));
    est.witness_y = basis_vector(static_cast<int>(u.cols()), static_cast<int>(j));
    est.value = std::abs(est.witness_x.dot(u * est.witness_y));
    est.exact = true;
    est.converged = true;
    return est;
  }
  if (params.s <= 1.0) return max_column_norm(u, conjugate_exponent(params.r));
  if (params.r <= 1.0) {
    return swap_witnesses(max_column_norm(u.adjoint(), conjugate_exponent(params.s)));
  }
  return std::nullopt;
}

}  // namespace

OmegaResult omega(const MeasurementPair& pair, const Weights& w, double N,
                  std::uint64_t seed, const SolverOptions& options) {
  if (!(N >= 1.0) || !std::isfinite(N)) {
    std::ostringstream msg;
    msg << "N must be a finite number >= 1, got " << N;
    throw ParameterError(msg.str());
  }
  OmegaResult result;
  result.params = NormParams::make(w, N);
  const NormParams& params = result.params;
  const Matrix& u = pair.unitary();
  const Matrix u_adj = u.adjoint();

  // The dual maps contract like 1 - O(max(lambda, mu)/N); scale the
  // iteration budget with N and tighten the stopping rule accordingly.
  SolverOptions tuned = options;
  const double heavier = std::max(w.lambda(), w.mu());
  const double stiffness = N / heavier;
  tuned.max_iterations = std::max(
      options.max_iterations, static_cast<int>(std::ceil(20.0 * stiffness)));
  tuned.tolerance = std::min(options.tolerance, 1e-15);

  if (auto closed = bilinear_closed_form(u, params)) {
    result.bilinear = *closed;
  } else {
    const double r_dual = conjugate_exponent(params.r);
    const double s_dual = conjugate_exponent(params.s);
    // Half of the restarts begin on the Y side, half on the X side.
    SolverOptions half = tuned;
    half.restarts = (tuned.restarts + 1) / 2;
    NormEstimate from_y = maximize_ratio(u, params.s, r_dual,
                                         derive_seed(seed, 0), half,
                                         options.extra_starts);
    half.restarts = tuned.restarts - half.restarts;
    std::vector<Vector> x_starts;
    for (const Vector& y0 : options.extra_starts) {
      if (y0.size() == u.cols()) x_starts.push_back(dual_vector(u * y0, r_dual));
    }
    NormEstimate from_x = swap_witnesses(maximize_ratio(
        u_adj, params.r, s_dual, derive_seed(seed, 1), half, x_starts));
    const int runs = from_y.restarts + from_x.restarts;
    const int iterations = from_y.iterations + from_x.iterations;
    result.bilinear = from_x.value > from_y.value ? from_x : from_y;
    result.bilinear.restarts = runs;
    result.bilinear.iterations = iterations;
  }
  result.estimate = result.bilinear;

  if (params.r_dual && params.s_dual) {
    result.ratio_form =
        pq_norm(u, params.s, *params.r_dual, derive_seed(seed, 2), tuned);
    SolverOptions adj = tuned;
    adj.extra_starts.clear();
    for (const Vector& y0 : options.extra_starts) {
      if (y0.size() == u.cols()) {
        adj.extra_starts.push_back(dual_vector(u * y0, *params.r_dual));
      }
    }
    result.ratio_form_adjoint = swap_witnesses(
        pq_norm(u_adj, params.r, *params.s_dual, derive_seed(seed, 3), adj));
    const double values[3] = {result.bilinear.value, result.ratio_form->value,
                              result.ratio_form_adjoint->value};
    result.cross_check_defect =
        *std::max_element(values, values + 3) - *std::min_element(values, values + 3);
    result.consistent = result.cross_check_defect <= kOmegaCrossCheckTolerance;
    if (result.ratio_form->value > result.estimate.value) {
      result.estimate = *result.ratio_form;
    }
    if (result.ratio_form_adjoint->value > result.estimate.value) {
      result.estimate = *result.ratio_form_adjoint;
    }
  }
  return result;
}

MultiplicativityReport multiplicativity_check(const MeasurementPair& a,
                                              const MeasurementPair& b,
                                              double p, double q, double tol,
                                              std::uint64_t seed,
                                              const SolverOptions& options) {
  check_exponent(p, "p");
  check_exponent(q, "q");
  if (p > q) {
    std::ostringstream msg;
    msg << "multiplicativity requires 1 <= p <= q, got p = " << p << ", q = " << q;
    throw ParameterError(msg.str());
  }
  MultiplicativityReport report;
  report.p = p;
  report.q = q;
  report.tol = tol;
  const NormEstimate eta_a = pq_norm(a.unitary(), p, q, derive_seed(seed, 0), options);
  const NormEstimate eta_b = pq_norm(b.unitary(), p, q, derive_seed(seed, 1), options);
  // The product of the local witnesses is a feasible start for the joint
  // problem, so the joint estimate can never fall below eta_a * eta_b.
  SolverOptions joint = options;
  joint.extra_starts.insert(joint.extra_starts.begin(),
                            kron(eta_a.witness_y, eta_b.witness_y));
  const Matrix u_ab = kron(a.unitary(), b.unitary());
  const NormEstimate eta_ab = pq_norm(u_ab, p, q, derive_seed(seed, 2), joint);
  report.eta_a = eta_a.value;
  report.eta_b = eta_b.value;
  report.eta_ab = eta_ab.value;
  report.exact = eta_a.exact && eta_b.exact && eta_ab.exact;
  report.defect = std::abs(report.eta_ab - report.eta_a * report.eta_b);
  report.pass = report.defect <= tol &&
                report.eta_ab >= report.eta_a * report.eta_b - tol;
  return report;
}

}  // namespace entrobound
