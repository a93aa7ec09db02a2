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

#include "entrobound/regions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

constexpr double kWeightMatch = 1e-12;
constexpr double kVertexMerge = 1e-9;

UncertaintyPoint make_point(const Matrix& u, const Vector& phi, bool keep) {
  Eigen::VectorXd px, py;
  outcome_probabilities(phi, u, px, py);
  UncertaintyPoint pt;
  pt.hx = shannon(std::span<const double>(px.data(), px.size()));
  pt.hy = shannon(std::span<const double>(py.data(), py.size()));
  if (keep) pt.state = phi;
  return pt;
}

double slack(const Tangent& t, double x, double y) {
  return t.lambda * x + t.mu * y - t.c;
}

// Lower-left part of the convex hull of points + the positive quadrant.
std::vector<Vertex> lower_left_hull(std::vector<Vertex> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vertex& a, const Vertex& b) {
                          return std::abs(a[0] - b[0]) <= kVertexMerge &&
                                 std::abs(a[1] - b[1]) <= kVertexMerge;
                        }),
            pts.end());
  std::vector<Vertex> chain;
  for (const Vertex& p : pts) {
    // Only points strictly below the current chain end can be extreme.
    if (!chain.empty() && p[1] >= chain.back()[1] - kVertexMerge) continue;
    while (chain.size() >= 2) {
      const Vertex& o = chain[chain.size() - 2];
      const Vertex& a = chain.back();
      const double cross =
          (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]);
      if (cross > 0.0) break;
      chain.pop_back();
    }
    chain.push_back(p);
  }
  return chain;
}

}  // namespace

std::vector<UncertaintyPoint> sample_region(const MeasurementPair& pair, int n,
                                            std::uint64_t seed, bool keep_states) {
  if (n < 1) throw ParameterError("sample count must be >= 1");
  const Matrix& u = pair.unitary();
  const int d = pair.dim();
  std::vector<UncertaintyPoint> points;
  points.reserve(static_cast<std::size_t>(n) + 2 * d);
  for (int k = 0; k < d; ++k) {
    points.push_back(make_point(u, Vector::Unit(d, k), keep_states));
  }
  for (int k = 0; k < d; ++k) {
    points.push_back(make_point(u, u.col(k), keep_states));
  }
  Rng rng(seed);
  for (int k = 0; k < n; ++k) {
    points.push_back(make_point(u, random_pure_vector(d, rng), keep_states));
  }
  return points;
}

std::vector<Weights> ratio_sweep(int count, bool endpoints, double max_ratio) {
  if (count < 0) throw ParameterError("sweep count must be >= 0");
  if (!(max_ratio >= 1.0) || !std::isfinite(max_ratio)) {
    throw ParameterError("sweep max ratio must be finite and >= 1");
  }
  std::vector<Weights> sweep;
  if (endpoints) sweep.emplace_back(0.0, 1.0);
  const double lo = -std::log(max_ratio);
  for (int k = 0; k < count; ++k) {
    const double frac = count == 1 ? 0.5 : static_cast<double>(k) / (count - 1);
    const double ratio = std::exp(lo + 2.0 * (-lo) * frac);
    sweep.emplace_back(ratio / (1.0 + ratio), 1.0 / (1.0 + ratio));
  }
  if (endpoints) sweep.emplace_back(1.0, 0.0);
  return sweep;
}

PositiveHull hull_from_tangents(std::vector<Tangent> tangents) {
  std::stable_sort(tangents.begin(), tangents.end(),
                   [](const Tangent& a, const Tangent& b) {
                     return a.lambda < b.lambda;
                   });
  PositiveHull hull;
  hull.tangents = std::move(tangents);
  const auto& ts = hull.tangents;
  // Every boundary vertex of the intersection is a feasible crossing of two
  // tangent lines.
  std::vector<Vertex> candidates;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const double det = ts[i].lambda * ts[j].mu - ts[j].lambda * ts[i].mu;
      if (std::abs(det) < 1e-14) continue;
      const double x = (ts[i].c * ts[j].mu - ts[j].c * ts[i].mu) / det;
      const double y = (ts[i].lambda * ts[j].c - ts[j].lambda * ts[i].c) / det;
      bool feasible = true;
      for (const Tangent& t : ts) {
        if (slack(t, x, y) < -kVertexMerge * (1.0 + std::abs(t.c))) {
          feasible = false;
          break;
        }
      }
      if (feasible) candidates.push_back({x, y});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Vertex& a, const Vertex& b) {
              return a[0] != b[0] ? a[0] < b[0] : a[1] > b[1];
            });
  for (const Vertex& v : candidates) {
    if (!hull.vertices.empty() &&
        std::abs(v[0] - hull.vertices.back()[0]) <= kVertexMerge &&
        std::abs(v[1] - hull.vertices.back()[1]) <= kVertexMerge) {
      continue;
    }
    hull.vertices.push_back(v);
  }
  return hull;
}

PositiveHull positive_hull(const MeasurementPair& pair,
                           const std::vector<Weights>& sweep,
                           const BoundConfig& config, double gap_tol) {
  if (sweep.empty()) throw ParameterError("weight sweep is empty");
  std::vector<Tangent> tangents;
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    const Weights& w = sweep[k];
    if (std::abs(w.total() - 1.0) > kWeightMatch) {
      std::ostringstream msg;
      msg << "sweep entry " << k << " is not normalized (lambda + mu = "
          << w.total() << ")";
      throw ParameterError(msg.str());
    }
    BoundConfig cfg = config;
    cfg.seed = derive_seed(config.seed, k);
    const BoundResult r = optimal_bound(pair, w, cfg);
    tangents.push_back({w.lambda(), w.mu(), r.upper, r.lower, r.gap() <= gap_tol});
  }
  return hull_from_tangents(std::move(tangents));
}

PositiveHull minkowski_sum(const PositiveHull& a, const PositiveHull& b) {
  if (a.tangents.size() != b.tangents.size()) {
    std::ostringstream msg;
    msg << "hulls have different weight grids (" << a.tangents.size() << " vs "
        << b.tangents.size() << " tangents)";
    throw InstanceError(msg.str());
  }
  std::vector<Tangent> tangents;
  for (std::size_t k = 0; k < a.tangents.size(); ++k) {
    const Tangent& ta = a.tangents[k];
    const Tangent& tb = b.tangents[k];
    if (std::abs(ta.lambda - tb.lambda) > kWeightMatch ||
        std::abs(ta.mu - tb.mu) > kWeightMatch) {
      std::ostringstream msg;
      msg << "weight grids differ at tangent " << k << ": (" << ta.lambda
          << ", " << ta.mu << ") vs (" << tb.lambda << ", " << tb.mu << ")";
      throw InstanceError(msg.str());
    }
    tangents.push_back({ta.lambda, ta.mu, ta.c + tb.c, ta.lower + tb.lower,
                        ta.certified && tb.certified});
  }
  if (a.vertices.empty() || b.vertices.empty()) {
    return hull_from_tangents(std::move(tangents));
  }
  PositiveHull out;
  out.tangents = std::move(tangents);
  std::stable_sort(out.tangents.begin(), out.tangents.end(),
                   [](const Tangent& x, const Tangent& y) {
                     return x.lambda < y.lambda;
                   });
  std::vector<Vertex> sums;
  for (const Vertex& va : a.vertices) {
    for (const Vertex& vb : b.vertices) sums.push_back({va[0] + vb[0], va[1] + vb[1]});
  }
  out.vertices = lower_left_hull(std::move(sums));
  return out;
}

double worst_tangent_violation(const std::vector<UncertaintyPoint>& points,
                               const PositiveHull& hull) {
  double worst = kInfinity;
  for (const UncertaintyPoint& p : points) {
    for (const Tangent& t : hull.tangents) {
      worst = std::min(worst, slack(t, p.hx, p.hy));
    }
  }
  return worst;
}

HullCompositionReport verify_hull_composition(
    const MeasurementPair& a, const MeasurementPair& b,
    const std::vector<Weights>& sweep, const BoundConfig& config, double tol,
    int dimension_cap) {
  const long long joint = static_cast<long long>(a.dim()) * b.dim();
  if (joint > dimension_cap) {
    std::ostringstream msg;
    msg << "product dimension " << a.dim() << " x " << b.dim() << " = " << joint
        << " exceeds the cap of " << dimension_cap;
    throw ResourceError(msg.str());
  }
  HullCompositionReport report;
  report.tol = tol;
  BoundConfig cfg = config;
  cfg.seed = derive_seed(config.seed, 0);
  report.hull_a = positive_hull(a, sweep, cfg);
  cfg.seed = derive_seed(config.seed, 1);
  report.hull_b = positive_hull(b, sweep, cfg);
  cfg.seed = derive_seed(config.seed, 2);
  report.direct = positive_hull(tensor_pair(a, b), sweep, cfg);
  report.composed = minkowski_sum(report.hull_a, report.hull_b);
  for (std::size_t k = 0; k < report.direct.tangents.size(); ++k) {
    report.discrepancy =
        std::max(report.discrepancy, std::abs(report.direct.tangents[k].c -
                                              report.composed.tangents[k].c));
  }
  report.pass = report.discrepancy <= tol;
  return report;
}

}  // namespace entrobound
