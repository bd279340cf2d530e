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

#include "lipfree/asymptotics.hpp"
#include "lipfree/families.hpp"

namespace lipfree {
namespace {

LimitOptions Quick() {
  LimitOptions o;
  o.ladder = power_ladder(4, 16);
  o.rtol = 1e-3;
  return o;
}

PairSequenceFamily Shift(double a, double b, const char* x, const char* y) {
  return shift_pair_family(ShiftExample{a, b}, parse_index_expression(x), parse_index_expression(y));
}

TEST(Expression, Arithmetic) {
  EXPECT_EQ(parse_index_expression("n")(7), 7);
  EXPECT_EQ(parse_index_expression("2*n^2 - (n+1)/1")(3), 14);
  EXPECT_EQ(parse_index_expression("-n + 10")(4), 6);
  EXPECT_EQ(parse_index_expression("n^0")(9), 1);
  EXPECT_EQ(parse_index_expression("2^3^2")(0), 512);  // right associative
}

TEST(Expression, Errors) {
  EXPECT_THROW(parse_index_expression("n +"), InputError);
  EXPECT_THROW(parse_index_expression("m"), InputError);
  EXPECT_THROW(parse_index_expression("(n"), InputError);
  EXPECT_THROW(parse_index_expression("n/3")(4), InputError);
  EXPECT_THROW(parse_index_expression("n/0")(4), InputError);
  EXPECT_THROW(parse_index_expression("n^(0-1)")(4), InputError);
  EXPECT_THROW(parse_index_expression("n^40")(1000), InputError);
}

TEST(ShiftExample, MetricAndWeights) {
  ShiftExample ex{2, 1};
  EXPECT_EQ(ex.d(0), 0.0);
  EXPECT_DOUBLE_EQ(ex.d(2), 0.25);
  EXPECT_DOUBLE_EQ(ex.dist(1, 2), 1.25);
  EXPECT_EQ(ex.dist(3, 3), 0.0);
  EXPECT_DOUBLE_EQ(ex.w(4), 0.25);
  EXPECT_EQ(ex.shift_weight(1), 0.0);
  EXPECT_DOUBLE_EQ(ex.shift_weight(2), 4.0 / 2.0);
  WeightedMap op = shift_truncation(ex, 5);
  EXPECT_EQ(op.domain()->size(), 6);
  EXPECT_EQ(op.f(1), 0);
  EXPECT_EQ(op.f(5), 4);
  EXPECT_TRUE(validate(*op.domain()).valid());
}

TEST(ShiftMatrix, ColumnsMatchMoleculeNorms) {
  ShiftOptions o;
  o.psi_limit = 12;
  o.limits = Quick();
  ShiftReport r = shift_operator_matrix(ShiftExample{1, 1}, 12, o);
  EXPECT_EQ(r.matrix(1, 2), 1.0);
  EXPECT_EQ(r.psi_checked, 12);
  EXPECT_LE(r.psi_defect, 1e-9);
  EXPECT_EQ(r.verdict, "compact");
  ShiftReport flat = shift_operator_matrix(ShiftExample{1, 0}, 8, o);
  EXPECT_EQ(flat.verdict, "not compact");
  EXPECT_THROW(shift_operator_matrix(ShiftExample{0, 1}, 8, o), InputError);
  EXPECT_THROW(shift_operator_matrix(ShiftExample{1, 1}, 1, o), InputError);
}

TEST(Appendix, EqualExponents) {
  CaseReport r = classify_appendix_case(Shift(1, 1, "n", "n-1"), Quick());
  EXPECT_EQ(r.label, "1");
  EXPECT_EQ(r.theorem_case, 1);
  EXPECT_EQ(r.criterion_id, "Appendix-case-1");
  EXPECT_EQ(r.outcome, Outcome::kPass);
  EXPECT_NEAR(r.a.value.real(), 0.5, 1e-3);
}

TEST(Appendix, MirroredForm) {
  CaseReport r = classify_appendix_case(Shift(2, 1, "n^2", "n"), Quick());
  EXPECT_EQ(r.label, "2'");
  EXPECT_EQ(r.theorem_case, 2);
  EXPECT_FALSE(r.mirrored);  // a_n is the finite nonzero one
  EXPECT_TRUE(r.b.diverges());
  CaseReport swapped = classify_appendix_case(Shift(2, 1, "n", "n^2"), Quick());
  EXPECT_EQ(swapped.label, "2'");
  EXPECT_TRUE(swapped.mirrored);
  EXPECT_TRUE(swapped.a.diverges());
  EXPECT_EQ(swapped.outcome, r.outcome);
}

TEST(Appendix, DivergingDifferenceIsFourPrime) {
  // alpha > beta + 1: a_n - b_n ~ -beta n^(alpha - beta - 1) / 2 grows.
  CaseReport r = classify_appendix_case(Shift(3, 1, "n", "n-1"), Quick());
  EXPECT_EQ(r.label, "4'");
  EXPECT_EQ(r.theorem_case, 4);
  EXPECT_TRUE(r.diff.diverges());
}

TEST(Appendix, CustomFamilyRefusesOscillation) {
  PairSequenceFamily fam;
  fam.name = "wobble";
  fam.sample = [](long n) {
    PairSample s;
    s.d_xy = 1;
    s.df_x0 = s.df_y0 = 1;
    s.df_xy = 1;
    s.w_x = std::sin(double(n));
    s.w_y = 1;
    return s;
  };
  CaseReport r = classify_appendix_case(fam, Quick());
  EXPECT_EQ(r.label, "refused");
  EXPECT_EQ(r.theorem_case, 0);
  EXPECT_EQ(r.outcome, Outcome::kInconclusive);
}

TEST(Appendix, UncoveredPair) {
  PairSequenceFamily fam;
  fam.name = "split";
  fam.sample = [](long n) {
    PairSample s;
    s.d_xy = 1;
    s.df_x0 = s.df_y0 = s.df_xy = 1;
    s.w_x = 1.0 / n;
    s.w_y = double(n);
    return s;
  };
  EXPECT_EQ(classify_appendix_case(fam, Quick()).label, "uncovered");
}

TEST(ImageConverges, UsesCrossDistances) {
  PairSequenceFamily fam = Shift(1, 1, "n", "n-1");
  EXPECT_EQ(image_converges(fam, 'x', Quick()).outcome, Outcome::kPass);
  fam.fx_cross = nullptr;
  fam.sample = [](long) {
    PairSample s;
    s.d_xy = s.df_x0 = s.df_y0 = s.df_xy = 1;
    return s;
  };
  EXPECT_EQ(image_converges(fam, 'x', Quick()).outcome, Outcome::kInconclusive);
}

TEST(Nets, GreedySizeAndGrowth) {
  auto line = [](long i, long j) { return std::abs(double(i - j)) / 10; };
  EXPECT_EQ(greedy_net_size(100, line, 1.0), 10);
  EXPECT_EQ(greedy_net_size(100, line, 0.05), 100);
  EXPECT_EQ(greedy_net_size(0, line, 1.0), 0);
  EXPECT_TRUE(net_growth({4, 8, 16}));
  EXPECT_FALSE(net_growth({4, 8, 9}));
  EXPECT_FALSE(net_growth({1, 2}));  // +1 is resolution noise
  EXPECT_FALSE(net_growth({5}));
}

TEST(Flatness, Classification) {
  EXPECT_EQ(flatness_check("p", {1.0, 0.5, 0.25, 0.1}, 0.75).outcome, Outcome::kPass);
  EXPECT_EQ(flatness_check("p", {1.0, 1.0, 1.0}, 0.75).outcome, Outcome::kFail);
  EXPECT_EQ(flatness_check("p", {-1.0, -1.0}, 0.75).outcome, Outcome::kPass);
  EXPECT_EQ(flatness_check("p", {1.0, 0.0}, 0.75).outcome, Outcome::kPass);
}

TEST(Caraccompact, SquareRemark) {
  // x_n = n, y_n = n + 1 under x^2, 1/x: d(f x, f y) = 2n + 1 does not vanish,
  // min d(f(.), 0) = n^2 neither, so the family is out of regime.
  CriterionReport r = check_caraccompact(
      {remark_square_pair_family(parse_index_expression("n"), parse_index_expression("n+1"))},
      Quick());
  EXPECT_EQ(r.criterion_id, "CaracCompact");
  EXPECT_EQ(r.verdict, "no family in regime");
}

TEST(Caraccompact, ShiftFamilyIsInRegime) {
  CriterionReport r = check_caraccompact({Shift(1, 1, "n", "n-1")}, Quick());
  EXPECT_EQ(r.outcome, Outcome::kPass);
}

TEST(Truncations, RemarkSquare) {
  WeightedMap op = remark_square_truncation(50);
  EXPECT_EQ(op.domain()->size(), 51);
  BoundednessReport r = boundedness_report(op);
  EXPECT_LE(r.sigma.value, 2.0);
  EXPECT_LE(r.tau.value, 1.0);
  EXPECT_DOUBLE_EQ(pair_stats(op, 1, 50).n1_x, 51.0);
}

TEST(W1Compact, KnownFamilies) {
  EXPECT_EQ(check_w1_compact(zero_map_family()).verdict, "compact");
  EXPECT_EQ(check_w1_compact(snowflake_family()).verdict, "compact");
  EXPECT_EQ(check_w1_compact(identity_discrete_family()).verdict, "not compact");
  EXPECT_EQ(check_w1_compact(sqrt_bump_family()).verdict, "not compact");
  EXPECT_THROW(check_w1_compact(rank_one_family()), InputError);  // w != 1
}

TEST(W1Compact, DiscreteIdentityFailsThroughBoundedSets) {
  CriterionReport r = check_w1_compact(identity_discrete_family());
  bool p1_failed = false, p2_vacuous = false;
  for (const auto& c : r.checks) {
    if (c.name.rfind("P1", 0) == 0 && c.outcome == Outcome::kFail) p1_failed = true;
    if (c.name.rfind("P2", 0) == 0 && c.outcome == Outcome::kPass) p2_vacuous = true;
  }
  EXPECT_TRUE(p1_failed);
  EXPECT_TRUE(p2_vacuous);
}

TEST(PhiSufficient, RankOne) {
  PhiReport r = check_phi_sufficient(rank_one_family());
  EXPECT_EQ(r.report.verdict, "sufficient condition not met");
  for (Index k : r.ranks) EXPECT_EQ(k, 1);
  EXPECT_EQ(check_phi_sufficient(zero_map_family()).report.verdict, "compact (sufficient)");
}

TEST(Udb, BoundedDiscreteSpace) {
  TruncationFamily t = identity_discrete_family();
  UdbOptions o;
  o.theta = 1;
  o.diameter = 1;
  o.limits = Quick();
  CriterionReport r = check_udb(t, {}, o);
  EXPECT_EQ(r.verdict, "not compact");
  o.theta = 0;
  EXPECT_THROW(check_udb(t, {}, o), InputError);
}

TEST(Names, Outcomes) {
  EXPECT_EQ(to_string(Outcome::kPass), "pass");
  EXPECT_EQ(to_string(LimitClass::kInfinite), "infinite");
}

}  // namespace
}  // namespace lipfree
