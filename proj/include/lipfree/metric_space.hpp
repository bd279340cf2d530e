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

#ifndef LIPFREE_METRIC_SPACE_HPP_
#define LIPFREE_METRIC_SPACE_HPP_

#include <Eigen/Dense>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipfree {

using Index = Eigen::Index;

// Thrown for malformed input: wrong shapes, unknown point ids, violated
// preconditions. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kTriangleTolerance = 1e-12;
inline constexpr double kNoCap = std::numeric_limits<double>::infinity();

// A finite set of named points, a distance matrix and a distinguished base
// point. Construction only checks structure (square, finite, matching sizes,
// unique names); the metric axioms are checked by validate() so that invalid
// inputs can still be reported on.
class PointedMetricSpace {
 public:
  PointedMetricSpace(std::vector<std::string> points, Index base,
                     Eigen::MatrixXd dist);

  Index size() const { return static_cast<Index>(points_.size()); }
  Index base() const { return base_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(Index i) const { return points_.at(i); }
  const Eigen::MatrixXd& distances() const { return dist_; }

  double operator()(Index i, Index j) const { return dist_(i, j); }
  // d(x, 0).
  double norm(Index i) const { return dist_(i, base_); }

  // Throws InputError for unknown names.
  Index index_of(const std::string& name) const;
  bool contains(Index i) const { return i >= 0 && i < size(); }

  double diameter() const;

 private:
  std::vector<std::string> points_;
  Index base_;
  Eigen::MatrixXd dist_;
};

using SpacePtr = std::shared_ptr<const PointedMetricSpace>;

template <typename... Args>
SpacePtr make_space(Args&&... args) {
  return std::make_shared<const PointedMetricSpace>(
      std::forward<Args>(args)...);
}

struct PointRef {
  SpacePtr space;
  Index index = 0;
};

enum class ViolationKind { kDiagonal, kSymmetry, kPositivity, kTriangle };

struct Violation {
  ViolationKind kind;
  Index i = 0;
  Index j = 0;
  Index k = 0;       // only meaningful for kTriangle
  double excess = 0; // how far the axiom is violated
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

std::string to_string(ViolationKind kind);

// Lists every violated axiom with its witnesses. Triangle violations are
// reported for ordered (i, j, k) with dist(i, k) > dist(i, j) + dist(j, k)
// + kTriangleTolerance.
ValidationReport validate(const PointedMetricSpace& space);

// dist' = min(dist, cap). cap must be positive; kNoCap is the identity.
PointedMetricSpace truncate_diameter(const PointedMetricSpace& space,
                                     double cap = 2.0);

// Adds a new point at distance 1 from every existing point and makes it the
// base point. Requires diameter <= 2. The new point is called `name`, or
// `name` with a numeric suffix if that id is taken.
PointedMetricSpace adjoin_basepoint(const PointedMetricSpace& space,
                                    const std::string& name = "e");

// Subset of real numbers with the distance |s - t|. The point equal to 0.0
// is the base point; it is added if missing. Names are "x<value>" unless
// given explicitly.
PointedMetricSpace real_line_space(const std::vector<double>& values);

}  // namespace lipfree

#endif  // LIPFREE_METRIC_SPACE_HPP_
