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

// Dense complex linear algebra for pairs of non-degenerate projective
// measurements. The X measurement is always the computational basis
// {|i><i|}; a pair is fully described by the unitary U with
// Y_i = U X_i U^dagger, so the Y basis vectors are the columns of U.

#ifndef ENTROBOUND_QUANTUM_CORE_HPP_
#define ENTROBOUND_QUANTUM_CORE_HPP_

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entrobound {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kProbabilityTolerance = 1e-10;
inline constexpr double kHermiticityTolerance = 1e-10;

enum class Basis { kX, kY };

/// Seeded pseudo-random source. All stochastic routines take one of these
/// (or a seed) so that results are reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Derives an independent stream seed from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// max_{ij} |(U^dagger U - 1)_{ij}|
double unitarity_defect(const Matrix& u);

bool all_finite(const Matrix& m);

class MeasurementPair {
 public:
  /// Validates shape, finiteness and unitarity (defect <= 1e-10).
  static MeasurementPair from_unitary(Matrix unitary, std::string label = {});

  int dim() const { return static_cast<int>(unitary_.rows()); }
  const Matrix& unitary() const { return unitary_; }
  const std::string& label() const { return label_; }

  /// The pair with the roles of X and Y exchanged (unitary U^dagger).
  MeasurementPair adjoint() const;

 private:
  MeasurementPair(Matrix unitary, std::string label)
      : unitary_(std::move(unitary)), label_(std::move(label)) {}

  Matrix unitary_;
  std::string label_;
};

MeasurementPair hadamard_pair();
MeasurementPair identity_pair(int dim);

class QuantumState {
 public:
  enum class Kind { kPure, kMixed };

  /// Requires | ||phi||_2 - 1 | <= 1e-12.
  static QuantumState pure(Vector phi);
  /// Rescales a non-zero vector to unit norm.
  static QuantumState normalized(const Vector& phi);
  /// Requires a Hermitian, unit-trace, positive semidefinite matrix.
  static QuantumState mixed(Matrix rho);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::kPure; }
  int dim() const;

  /// The state vector; throws for mixed states.
  const Vector& vector() const;
  /// The density operator (computed as |phi><phi| for pure states).
  Matrix density() const;

 private:
  QuantumState(Kind kind, Vector phi, Matrix rho)
      : kind_(kind), phi_(std::move(phi)), rho_(std::move(rho)) {}

  Kind kind_;
  Vector phi_;
  Matrix rho_;
};

class ProbabilityVector {
 public:
  /// Requires non-negative entries summing to one within 1e-10.
  static ProbabilityVector from_values(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  /// Outer product p (x) q with index order (i_p, i_q).
  ProbabilityVector tensor(const ProbabilityVector& other) const;

 private:
  explicit ProbabilityVector(std::vector<double> values)
      : values_(std::move(values)) {}

  std::vector<double> values_;
};

/// Entry i is tr(rho X_i) (which == kX) or tr(rho Y_i) (which == kY).
/// Round-off negatives down to -1e-10 are clamped and the vector renormalized.
ProbabilityVector outcome_distribution(const QuantumState& state,
                                       const MeasurementPair& pair,
                                       Basis which);

/// Same as above for an unnormalized-safe pure vector, without validation.
/// Used on hot paths of the optimizers.
void outcome_probabilities(const Vector& phi, const Matrix& unitary,
                           Eigen::VectorXd& px, Eigen::VectorXd& py);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// U_A (x) U_B; the joint index is (i_A, i_B) in lexicographic order.
MeasurementPair tensor_pair(const MeasurementPair& a, const MeasurementPair& b);

/// Haar-distributed unitary from a seeded complex Gaussian matrix
/// (QR with the phases of R's diagonal moved into Q).
MeasurementPair random_unitary(int dim, std::uint64_t seed);
Matrix haar_unitary(int dim, Rng& rng);

/// Haar-random unit vector in C^dim.
Vector random_pure_vector(int dim, Rng& rng);

struct GroundState {
  double energy;
  QuantumState state;
};

/// Smallest eigenvalue and a normalized eigenvector of a Hermitian matrix.
/// For degenerate minima the eigensolver's (deterministic) choice is returned.
GroundState ground_state(const Matrix& h);

/// Eigenvector-only variant without the Hermiticity check.
Vector lowest_eigenvector(const Matrix& h);

}  // namespace entrobound

#endif  // ENTROBOUND_QUANTUM_CORE_HPP_
