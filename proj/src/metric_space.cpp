// Copyright 2026 The lipfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lipfree/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace lipfree {

PointedMetricSpace::PointedMetricSpace(std::vector<std::string> points,
                                       Index base, Eigen::MatrixXd dist)
    : points_(std::move(points)), base_(base), dist_(std::move(dist)) {
  const Index n = size();
  if (n == 0) throw InputError("metric space needs at least the base point");
  if (dist_.rows() != n || dist_.cols() != n) {
    std::ostringstream msg;
    msg << "distance matrix is " << dist_.rows() << "x" << dist_.cols()
        << " but there are " << n << " points";
    throw InputError(msg.str());
  }
  if (base_ < 0 || base_ >= n) throw InputError("base point out of range");
  if (!dist_.allFinite()) throw InputError("distance matrix has non-finite entries");
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw InputError("duplicate point id '" + p + "'");
  }
}

Index PointedMetricSpace::index_of(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw InputError("unknown point id '" + name + "'");
  return static_cast<Index>(it - points_.begin());
}

double PointedMetricSpace::diameter() const {
  return size() > 1 ? dist_.maxCoeff() : 0.0;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDiagonal: return "diagonal";
    case ViolationKind::kSymmetry: return "symmetry";
    case ViolationKind::kPositivity: return "positivity";
    case ViolationKind::kTriangle: return "triangle";
  }
  return "unknown";
}

ValidationReport validate(const PointedMetricSpace& space) {
  ValidationReport report;
  const auto& d = space.distances();
  const Index n = space.size();
  for (Index i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) {
      report.violations.push_back({ViolationKind::kDiagonal, i, i, 0, std::abs(d(i, i))});
    }
    for (Index j = i + 1; j < n; ++j) {
      if (d(i, j) != d(j, i)) {
        report.violations.push_back(
            {ViolationKind::kSymmetry, i, j, 0, std::abs(d(i, j) - d(j, i))});
      }
      if (!(d(i, j) > 0.0) || !(d(j, i) > 0.0)) {
        report.violations.push_back(
            {ViolationKind::kPositivity, i, j, 0, -std::min(d(i, j), d(j, i))});
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      for (Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = d(i, k) - d(i, j) - d(j, k);
        if (excess > kTriangleTolerance) {
          report.violations.push_back({ViolationKind::kTriangle, i, j, k, excess});
        }
      }
    }
  }
  return report;
}

PointedMetricSpace truncate_diameter(const PointedMetricSpace& space,
                                     double cap) {
  if (!(cap > 0.0)) throw InputError("truncation cap must be positive");
  Eigen::MatrixXd d = space.distances();
  if (std::isfinite(cap)) d = d.cwiseMin(cap);
  return PointedMetricSpace(space.points(), space.base(), std::move(d));
}

PointedMetricSpace adjoin_basepoint(const PointedMetricSpace& space,
                                    const std::string& name) {
  if (space.diameter() > 2.0 + kTriangleTolerance) {
    throw InputError("adjoin_basepoint needs diameter <= 2 (truncate first)");
  }
  std::vector<std::string> points = space.points();
  std::string fresh = name;
  for (int suffix = 1;
       std::find(points.begin(), points.end(), fresh) != points.end();
       ++suffix) {
    fresh = name + std::to_string(suffix);
  }
  points.push_back(fresh);
  const Index n = space.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Ones(n + 1, n + 1);
  d.topLeftCorner(n, n) = space.distances();
  d(n, n) = 0.0;
  return PointedMetricSpace(std::move(points), n, std::move(d));
}

PointedMetricSpace real_line_space(const std::vector<double>& values) {
  std::vector<double> v = values;
  v.push_back(0.0);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const Index n = static_cast<Index>(v.size());
  Eigen::MatrixXd d(n, n);
  std::vector<std::string> names;
  Index base = 0;
  for (Index i = 0; i < n; ++i) {
    std::ostringstream s;
    s.precision(17);
    s << "x" << v[i];
    names.push_back(s.str());
    if (v[i] == 0.0) base = i;
    for (Index j = 0; j < n; ++j) d(i, j) = std::abs(v[i] - v[j]);
  }
  return PointedMetricSpace(std::move(names), base, std::move(d));
}

}  // namespace lipfree
