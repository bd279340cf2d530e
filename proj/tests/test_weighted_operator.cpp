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

#include <cmath>

#include "lipfree/weighted_operator.hpp"
#include "support/oracles.hpp"

namespace lipfree {
namespace {

using namespace std::complex_literals;

SpacePtr Line(std::vector<double> v) { return make_space(real_line_space(v)); }

TEST(WeightedMap, ValidatesConstruction) {
  SpacePtr m = Line({1, 2}), n = Line({1});
  EXPECT_NO_THROW(WeightedMap(m, n, {0, 1, 1}, {0.0, 1.0, 1.0}));
  EXPECT_THROW(WeightedMap(m, n, {0, 1}, {0.0, 1.0}), InputError);
  EXPECT_THROW(WeightedMap(m, n, {0, 1, 2}, {0.0, 1.0, 1.0}), InputError);
  EXPECT_THROW(WeightedMap(m, n, {0, 1, 1}, {0.0, NAN, 1.0}), InputError);
  // f(0) != 0_N needs w(0) = 0.
  EXPECT_THROW(WeightedMap(m, n, {1, 1, 1}, {1.0, 1.0, 1.0}), InputError);
  EXPECT_NO_THROW(WeightedMap(m, n, {1, 1, 1}, {0.0, 1.0, 1.0}));
}

TEST(PairStats, HandComputed) {
  // d = 2, d(fx,0) = 3, d(fy,0) = 1, d(fx,fy) = 2, w = 1, -1.
  PairStats s = pair_stats(2, 3, 1, 2, 1.0, -1.0);
  EXPECT_DOUBLE_EQ(s.a, 2.0);          // |3 + 1| / 2
  EXPECT_DOUBLE_EQ(s.b_xy, 2.0);       // |3 + (3 - 2)| / 2
  EXPECT_DOUBLE_EQ(s.b_yx, 0.0);       // |-1 - (1 - 2)| / 2
  EXPECT_EQ(s.s_xy, 1);
  EXPECT_EQ(s.s_yx, 0);
  EXPECT_DOUBLE_EQ(s.sigma, 1.0);      // 2/2 * |w(x)|
  EXPECT_DOUBLE_EQ(s.tau, 1.0);        // |2| / 2 * min(3, 1)
  EXPECT_DOUBLE_EQ(s.n1_x, 1.0);
  EXPECT_DOUBLE_EQ(s.n2_x, 3.0);
}

TEST(PairStats, InequalitiesOnRandomOperators) {
  testing::Rng rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 100; ++t) {
    SpacePtr m = testing::random_space(rng, 5), n = testing::random_space(rng, 4);
    std::vector<Index> f = {0};
    std::vector<Complex> w = {0.0};
    for (Index x = 1; x < 5; ++x) {
      f.push_back(std::uniform_int_distribution<Index>(0, 3)(rng));
      w.push_back(t % 2 ? Complex(u(rng), u(rng)) : Complex(u(rng)));
    }
    WeightedMap op(m, n, f, w);
    for (Index x = 0; x < 5; ++x) {
      for (Index y = 0; y < 5; ++y) {
        if (x == y) continue;
        PairStats s = pair_stats(op, x, y);
        const double tol = 1e-12 * (1 + s.a + s.b_xy + s.b_yx);
        const double b = std::max(s.b_xy, s.b_yx);
        EXPECT_LE(s.sigma, 2 * (s.a + b) + tol);
        EXPECT_LE(s.tau, s.a + s.sigma + tol);
        EXPECT_LE(s.a, s.sigma + s.tau + tol);
        EXPECT_LE(b, s.a + 2 * s.sigma + tol);
      }
    }
  }
}

TEST(Boundedness, WitnessesAndJobs) {
  testing::Rng rng(13);
  SpacePtr m = testing::random_space(rng, 7), n = testing::random_space(rng, 5);
  std::vector<Index> f = {0, 1, 2, 3, 4, 1, 0};
  std::vector<Complex> w = {0.0, 1.0, -1.0, 2.0, 0.5, 1.5, 3.0};
  WeightedMap op(m, n, f, w);
  BoundednessReport r1 = boundedness_report(op, 1), r4 = boundedness_report(op, 4);
  EXPECT_EQ(r1.a.value, r4.a.value);
  EXPECT_EQ(r1.sigma.value, r4.sigma.value);
  EXPECT_EQ(pair_stats(op, r1.a.x, r1.a.y).a, r1.a.value);
  EXPECT_EQ(r1.max_ab, std::max(r1.a.value, r1.b.value));
  EXPECT_TRUE(r1.real_weights);
  EXPECT_TRUE(r1.estimate.exact());
  EXPECT_NEAR(operator_norm(op).norm.hi, r1.max_ab, 1e-12 * r1.max_ab);
}

TEST(Boundedness, ComplexEstimateBracketsNorm) {
  testing::Rng rng(19);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 10; ++t) {
    SpacePtr m = testing::random_space(rng, 4), n = testing::random_space(rng, 4);
    WeightedMap op(m, n, {0, 1, 2, 3}, {0.0, Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), 1i});
    BoundednessReport r = boundedness_report(op);
    EXPECT_FALSE(r.real_weights);
    OperatorNorm nrm = operator_norm(op, {.polygon_order = 32});
    EXPECT_LE(r.estimate.lo, nrm.norm.hi * (1 + 1e-9));
    EXPECT_GE(r.estimate.hi, nrm.norm.lo * (1 - 1e-9));
  }
}

TEST(OperatorNorm, FormulaLpAndVertexOracleAgree) {
  testing::Rng rng(43);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 40; ++t) {
    SpacePtr m = testing::random_space(rng, 4), n = testing::random_space(rng, 3);
    std::vector<Index> f = {0};
    std::vector<Complex> w = {0.0};
    for (Index x = 1; x < 4; ++x) {
      f.push_back(std::uniform_int_distribution<Index>(0, 2)(rng));
      w.push_back(u(rng));
    }
    WeightedMap op(m, n, f, w);
    OperatorNormOptions lp;
    lp.real_oracle = MoleculeOracle::kLp;
    const double want = testing::vertex_operator_norm(op);
    EXPECT_NEAR(operator_norm(op).norm.hi, want, 1e-9 * std::max(1.0, want));
    EXPECT_NEAR(operator_norm(op, lp).norm.hi, want, 1e-9 * std::max(1.0, want));
  }
}

TEST(Apply, MapsDeltasAndMolecules) {
  SpacePtr m = Line({1, 2}), n = Line({5});
  WeightedMap op(m, n, {0, 1, 1}, {0.0, 2.0, -1.0});
  FreeElement g(m, {{1, 1.0}, {2, 3.0}});
  FreeElement h = apply(op, g);
  EXPECT_EQ(h.coefficient(1), Complex(2.0 - 3.0));
  // Molecule (x1, x2) goes to (2 + 1) delta(5) / 1.
  EXPECT_EQ(molecule_image(op, 1, 2).coefficient(1), Complex(3.0));
  EXPECT_THROW(apply(op, FreeElement(n)), InputError);
}

TEST(Composition, MatrixAndRank) {
  SpacePtr m = Line({1, 2, 3}), n = Line({1, 2});
  WeightedMap op(m, n, {0, 1, 1, 2}, {0.0, 1.0, 2.0, 0.0});
  Eigen::MatrixXcd c = composition_matrix(op);
  ASSERT_EQ(c.rows(), 3);
  ASSERT_EQ(c.cols(), 2);
  EXPECT_EQ(c(0, 0), Complex(1.0));
  EXPECT_EQ(c(1, 0), Complex(2.0));
  EXPECT_EQ(c(2, 1), Complex(0.0));
  EXPECT_EQ(composition_rank(op), 1);
  EXPECT_FALSE(is_injective_criterion(op));  // x2 is hit only with weight 0
  EXPECT_EQ(non_base_indices(*m).size(), 3u);
}

TEST(Composition, CriteriaMatchRankOnSmallCases) {
  testing::Rng rng(53);
  const std::vector<Complex> grid = {0.0, 1.0, -2.0};
  int checked = 0;
  for (int t = 0; t < 3; ++t) {
    SpacePtr m = testing::random_space(rng, 3), n = testing::random_space(rng, 3);
    testing::for_each_map(3, 3, [&](const std::vector<Index>& f) {
      testing::for_each_weight(3, grid, [&](const std::vector<Complex>& w) {
        if (f[0] != 0 && w[0] != 0.0) return;
        WeightedMap op(m, n, f, w);
        const Index rank = testing::svd_rank(composition_matrix(op));
        EXPECT_EQ(is_injective_criterion(op), rank == 2);
        EXPECT_EQ(is_surjective_criterion(op).surjective, rank == 2);
        ++checked;
      });
    });
  }
  EXPECT_GT(checked, 100);
}

TEST(Surjectivity, GatesAndSups) {
  SpacePtr m = Line({1, 2}), n = Line({1, 3});
  WeightedMap good(m, n, {0, 1, 2}, {0.0, 1.0, 1.0});
  SurjectivityReport r = is_surjective_criterion(good);
  EXPECT_TRUE(r.weight_gate && r.injective_gate && r.base_gate);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(std::isfinite(r.sup_first));

  SurjectivityReport z = is_surjective_criterion(WeightedMap(m, n, {0, 1, 2}, {0.0, 0.0, 1.0}));
  EXPECT_FALSE(z.weight_gate);
  EXPECT_FALSE(z.surjective);
  EXPECT_TRUE(std::isinf(z.sup_first));

  EXPECT_FALSE(is_surjective_criterion(WeightedMap(m, n, {0, 1, 1}, {0.0, 1.0, 1.0})).injective_gate);
  EXPECT_FALSE(is_surjective_criterion(WeightedMap(m, n, {0, 0, 1}, {0.0, 1.0, 1.0})).base_gate);
}

}  // namespace
}  // namespace lipfree
