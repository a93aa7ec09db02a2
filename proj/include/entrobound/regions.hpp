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

// Uncertainty sets {(H(X|rho), H(Y|rho))} and their positive convex hulls.
// A hull is stored by its tangents lambda hx + mu hy >= c; the vertices of
// the lower-left boundary are derived from them.

#ifndef ENTROBOUND_REGIONS_HPP_
#define ENTROBOUND_REGIONS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "entrobound/bounds.hpp"

namespace entrobound {

struct UncertaintyPoint {
  double hx = 0.0;
  double hy = 0.0;
  std::optional<Vector> state;
};

/// The 2d basis states of both measurements, then n Haar-random states.
std::vector<UncertaintyPoint> sample_region(const MeasurementPair& pair, int n,
                                            std::uint64_t seed,
                                            bool keep_states = false);

struct Tangent {
  double lambda = 0.0;
  double mu = 0.0;
  double c = 0.0;      // witnessed value of c(lambda, mu)
  double lower = 0.0;  // certified lower bound
  bool certified = false;
};

using Vertex = std::array<double, 2>;

struct PositiveHull {
  std::vector<Tangent> tangents;  // sorted by lambda ascending
  std::vector<Vertex> vertices;   // hx ascending, hy non-increasing
};

/// (0, 1), then `count` ratios lambda/mu log-spaced in
/// [1/max_ratio, max_ratio], then (1, 0). All entries have lambda + mu = 1.
std::vector<Weights> ratio_sweep(int count, bool endpoints = true,
                                 double max_ratio = 32.0);

/// One optimal_bound per sweep entry. Tangents are flagged certified when
/// their gap is at most gap_tol.
PositiveHull positive_hull(const MeasurementPair& pair,
                           const std::vector<Weights>& sweep,
                           const BoundConfig& config, double gap_tol = 1e-4);

/// Recomputes the boundary vertices of the intersection of the halfspaces.
PositiveHull hull_from_tangents(std::vector<Tangent> tangents);

/// Tangent-wise sum of offsets; vertices are the extreme pairwise sums.
/// The two weight grids must coincide.
PositiveHull minkowski_sum(const PositiveHull& a, const PositiveHull& b);

/// Smallest lambda hx + mu hy - c over all points and tangents (negative
/// means a violation).
double worst_tangent_violation(const std::vector<UncertaintyPoint>& points,
                               const PositiveHull& hull);

struct HullCompositionReport {
  PositiveHull hull_a;
  PositiveHull hull_b;
  PositiveHull direct;    // hull of the product pair
  PositiveHull composed;  // minkowski_sum(hull_a, hull_b)
  double discrepancy = 0.0;  // max |c_direct - c_composed| over the sweep
  double tol = 0.0;
  bool pass = false;
};

HullCompositionReport verify_hull_composition(
    const MeasurementPair& a, const MeasurementPair& b,
    const std::vector<Weights>& sweep, const BoundConfig& config, double tol,
    int dimension_cap = kDefaultDimensionCap);

}  // namespace entrobound

#endif  // ENTROBOUND_REGIONS_HPP_
