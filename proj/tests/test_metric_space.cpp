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


#include <gtest/gtest.h>

#include "lipfree/metric_space.hpp"
#include "support/oracles.hpp"

namespace lipfree {
namespace {

Eigen::MatrixXd Path3() {
  Eigen::MatrixXd d(3, 3);
  d << 0, 1, 2,
       1, 0, 1,
       2, 1, 0;
  return d;
}

TEST(PointedMetricSpace, LooksUpNamesAndNorms) {
  PointedMetricSpace s({"a", "0", "b"}, 1, Path3());
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.base(), 1);
  EXPECT_EQ(s.index_of("b"), 2);
  EXPECT_DOUBLE_EQ(s.norm(0), 1.0);
  EXPECT_DOUBLE_EQ(s(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(s.diameter(), 2.0);
  EXPECT_THROW(s.index_of("zz"), InputError);
}

TEST(PointedMetricSpace, RejectsMalformedInput) {
  EXPECT_THROW(PointedMetricSpace({"a", "a", "b"}, 0, Path3()), InputError);
  EXPECT_THROW(PointedMetricSpace({"a", "b", "c"}, 3, Path3()), InputError);
  EXPECT_THROW(PointedMetricSpace({"a", "b"}, 0, Path3()), InputError);
  Eigen::MatrixXd d = Path3();
  d(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(PointedMetricSpace({"a", "b", "c"}, 0, d), InputError);
}

TEST(PointedMetricSpace, SinglePointHasZeroDiameter) {
  PointedMetricSpace s({"0"}, 0, Eigen::MatrixXd::Zero(1, 1));
  EXPECT_EQ(s.diameter(), 0.0);
  EXPECT_TRUE(validate(s).valid());
}

TEST(Validate, AcceptsMetric) {
  EXPECT_TRUE(validate(PointedMetricSpace({"0", "a", "b"}, 0, Path3())).valid());
}

TEST(Validate, ReportsEachAxiom) {
  Eigen::MatrixXd d = Path3();
  d(0, 2) = d(2, 0) = 5;  // 5 > 1 + 1
  auto rep = validate(PointedMetricSpace({"0", "a", "b"}, 0, d));
  ASSERT_FALSE(rep.valid());
  bool triangle = false;
  for (const auto& v : rep.violations) {
    if (v.kind == ViolationKind::kTriangle) {
      triangle = true;
      EXPECT_NEAR(v.excess, 3.0, 1e-15);
    }
  }
  EXPECT_TRUE(triangle);

  d = Path3();
  d(0, 1) = 1.5;
  rep = validate(PointedMetricSpace({"0", "a", "b"}, 0, d));
  ASSERT_FALSE(rep.valid());
  EXPECT_EQ(rep.violations.front().kind, ViolationKind::kSymmetry);

  d = Path3();
  d(1, 2) = d(2, 1) = 0;
  rep = validate(PointedMetricSpace({"0", "a", "b"}, 0, d));
  ASSERT_FALSE(rep.valid());
  EXPECT_EQ(rep.violations.front().kind, ViolationKind::kPositivity);

  d = Path3();
  d(1, 1) = 0.25;
  rep = validate(PointedMetricSpace({"0", "a", "b"}, 0, d));
  ASSERT_FALSE(rep.valid());
  EXPECT_EQ(rep.violations.front().kind, ViolationKind::kDiagonal);
  EXPECT_EQ(to_string(ViolationKind::kDiagonal), "diagonal");
}

TEST(Validate, ToleratesRoundingInTriangle) {
  Eigen::MatrixXd d = Path3();
  d(0, 2) = d(2, 0) = 2.0 + 1e-14;
  EXPECT_TRUE(validate(PointedMetricSpace({"0", "a", "b"}, 0, d)).valid());
}

TEST(Truncate, CapsDistances) {
  PointedMetricSpace s({"0", "a", "b"}, 0, 3 * Path3());
  PointedMetricSpace t = truncate_diameter(s);
  EXPECT_DOUBLE_EQ(t(0, 1), 2.0);
  EXPECT_DOUBLE_EQ(t(0, 2), 2.0);
  EXPECT_TRUE(validate(t).valid());
  EXPECT_EQ(truncate_diameter(s, kNoCap).distances(), s.distances());
  EXPECT_THROW(truncate_diameter(s, 0.0), InputError);
}

TEST(Truncate, StaysMetricOnRandomSpaces) {
  testing::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    SpacePtr s = testing::random_space(rng, 6);
    EXPECT_TRUE(validate(*s).valid());
    EXPECT_TRUE(validate(truncate_diameter(*s, 1.7)).valid());
  }
}

TEST(AdjoinBasepoint, AddsPointAtDistanceOne) {
  PointedMetricSpace s({"0", "e", "b"}, 0, Path3());
  PointedMetricSpace t = adjoin_basepoint(s);
  ASSERT_EQ(t.size(), 4);
  EXPECT_EQ(t.base(), 3);
  EXPECT_EQ(t.name(3), "e1");  // "e" is taken
  for (Index i = 0; i < 3; ++i) EXPECT_EQ(t.norm(i), 1.0);
  EXPECT_TRUE(validate(t).valid());
  EXPECT_THROW(adjoin_basepoint(PointedMetricSpace({"0", "a", "b"}, 0, 2 * Path3())), InputError);
}

TEST(RealLine, AddsZeroAndSorts) {
  PointedMetricSpace s = real_line_space({3, -1, 3});
  ASSERT_EQ(s.size(), 3);
  EXPECT_EQ(s.name(s.base()), "x0");
  EXPECT_DOUBLE_EQ(s(0, 2), 4.0);
  EXPECT_DOUBLE_EQ(s.norm(0), 1.0);
}

}  // namespace
}  // namespace lipfree
