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

#include "entrobound/quantum_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "entrobound/error.hpp"

namespace entrobound {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const Matrix gram = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) ||
        !std::isfinite(m.data()[i].imag())) {
      return false;
    }
  }
  return true;
}

MeasurementPair MeasurementPair::from_unitary(Matrix unitary,
                                              std::string label) {
  if (unitary.rows() < 2 || unitary.rows() != unitary.cols()) {
    std::ostringstream msg;
    msg << "measurement pair needs a square unitary of dimension >= 2, got "
        << unitary.rows() << "x" << unitary.cols();
    throw InstanceError(msg.str());
  }
  if (!all_finite(unitary)) {
    throw InstanceError("unitary has non-finite entries");
  }
  const double defect = unitarity_defect(unitary);
  if (!(defect <= kUnitarityTolerance)) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "matrix is not unitary: ||U^dagger U - 1||_max = " << defect
        << " exceeds " << kUnitarityTolerance;
    throw InstanceError(msg.str());
  }
  return MeasurementPair(std::move(unitary), std::move(label));
}

MeasurementPair MeasurementPair::adjoint() const {
  return MeasurementPair(unitary_.adjoint(),
                         label_.empty() ? std::string() : label_ + "^dagger");
}

MeasurementPair hadamard_pair() {
  Matrix h(2, 2);
  const double a = 1.0 / std::sqrt(2.0);
  h << a, a, a, -a;
  return MeasurementPair::from_unitary(std::move(h), "hadamard");
}

MeasurementPair identity_pair(int dim) {
  return MeasurementPair::from_unitary(Matrix::Identity(dim, dim),
                                       "identity" + std::to_string(dim));
}

QuantumState QuantumState::pure(Vector phi) {
  if (phi.size() < 1 || !all_finite(phi)) {
    throw InstanceError("pure state must be a finite, non-empty vector");
  }
  if (std::abs(phi.norm() - 1.0) > kStateTolerance) {
    std::ostringstream msg;
    msg << "pure state is not normalized: ||phi||_2 = " << phi.norm();
    throw InstanceError(msg.str());
  }
  return QuantumState(Kind::kPure, std::move(phi), Matrix());
}

QuantumState QuantumState::normalized(const Vector& phi) {
  const double n = phi.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InstanceError("cannot normalize a zero or non-finite vector");
  }
  return QuantumState(Kind::kPure, phi / n, Matrix());
}

QuantumState QuantumState::mixed(Matrix rho) {
  if (rho.rows() < 1 || rho.rows() != rho.cols() || !all_finite(rho)) {
    throw InstanceError("density operator must be a finite square matrix");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw InstanceError("density operator is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > kStateTolerance) {
    throw InstanceError("density operator does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kProbabilityTolerance) {
    throw InstanceError("density operator has a negative eigenvalue");
  }
  return QuantumState(Kind::kMixed, Vector(), std::move(rho));
}

int QuantumState::dim() const {
  return static_cast<int>(is_pure() ? phi_.size() : rho_.rows());
}

const Vector& QuantumState::vector() const {
  if (!is_pure()) throw InstanceError("mixed state has no state vector");
  return phi_;
}

Matrix QuantumState::density() const {
  if (is_pure()) return phi_ * phi_.adjoint();
  return rho_;
}

ProbabilityVector ProbabilityVector::from_values(std::vector<double> values) {
  if (values.empty()) throw InstanceError("empty probability vector");
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InstanceError("probability vector has a negative or non-finite entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    std::ostringstream msg;
    msg << "probability vector sums to " << sum << ", not 1";
    throw InstanceError(msg.str());
  }
  return ProbabilityVector(std::move(values));
}

ProbabilityVector ProbabilityVector::tensor(const ProbabilityVector& other) const {
  std::vector<double> out;
  out.reserve(size() * other.size());
  for (double a : values_) {
    for (double b : other.values_) out.push_back(a * b);
  }
  return ProbabilityVector(std::move(out));
}

namespace {

ProbabilityVector clamp_and_normalize(std::vector<double> raw) {
  double sum = 0.0;
  for (double& v : raw) {
    if (v < 0.0) {
      if (v < -kProbabilityTolerance) {
        throw NumericError("outcome probability below -1e-10");
      }
      v = 0.0;
    }
    sum += v;
  }
  if (!(sum > 0.0)) throw NumericError("outcome distribution has zero mass");
  for (double& v : raw) v /= sum;
  return ProbabilityVector::from_values(std::move(raw));
}

}  // namespace

ProbabilityVector outcome_distribution(const QuantumState& state,
                                       const MeasurementPair& pair,
                                       Basis which) {
  if (state.dim() != pair.dim()) {
    std::ostringstream msg;
    msg << "state dimension " << state.dim() << " does not match pair dimension "
        << pair.dim();
    throw InstanceError(msg.str());
  }
  const int d = pair.dim();
  std::vector<double> raw(d);
  if (state.is_pure()) {
    const Vector& phi = state.vector();
    const Vector amplitudes =
        which == Basis::kX ? phi : Vector(pair.unitary().adjoint() * phi);
    for (int i = 0; i < d; ++i) raw[i] = std::norm(amplitudes(i));
  } else {
    const Matrix rho = state.density();
    const Matrix rotated = which == Basis::kX
                               ? rho
                               : Matrix(pair.unitary().adjoint() * rho *
                                        pair.unitary());
    for (int i = 0; i < d; ++i) raw[i] = rotated(i, i).real();
  }
  return clamp_and_normalize(std::move(raw));
}

void outcome_probabilities(const Vector& phi, const Matrix& unitary,
                           Eigen::VectorXd& px, Eigen::VectorXd& py) {
  px = phi.cwiseAbs2();
  py = (unitary.adjoint() * phi).cwiseAbs2();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

MeasurementPair tensor_pair(const MeasurementPair& a, const MeasurementPair& b) {
  std::string label;
  if (!a.label().empty() || !b.label().empty()) {
    label = (a.label().empty() ? "?" : a.label()) + "(x)" +
            (b.label().empty() ? "?" : b.label());
  }
  return MeasurementPair::from_unitary(kron(a.unitary(), b.unitary()),
                                       std::move(label));
}

Matrix haar_unitary(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

MeasurementPair random_unitary(int dim, std::uint64_t seed) {
  if (dim < 2) {
    throw InstanceError("random_unitary needs dim >= 2, got " +
                        std::to_string(dim));
  }
  Rng rng(seed);
  return MeasurementPair::from_unitary(
      haar_unitary(dim, rng),
      "random(d=" + std::to_string(dim) + ",seed=" + std::to_string(seed) + ")");
}

Vector random_pure_vector(int dim, Rng& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

Vector lowest_eigenvector(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  return eig.eigenvectors().col(0);
}

GroundState ground_state(const Matrix& h) {
  if (h.rows() < 1 || h.rows() != h.cols() || !all_finite(h)) {
    throw InstanceError("ground_state needs a finite square matrix");
  }
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermiticityTolerance) {
    std::ostringstream msg;
    msg << "ground_state input is not Hermitian (max |H - H^dagger| = " << asym
        << ")";
    throw InstanceError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw NumericError("Hermitian eigensolver did not converge");
  }
  Vector v = eig.eigenvectors().col(0);
  v /= v.norm();
  return GroundState{eig.eigenvalues()(0), QuantumState::pure(std::move(v))};
}

}  // namespace entrobound
