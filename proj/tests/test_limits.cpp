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

#include "lipfree/limits.hpp"
#include "lipfree/metric_space.hpp"

namespace lipfree {
namespace {

using namespace std::complex_literals;

TEST(Ladder, PowersOfTwo) {
  EXPECT_EQ(power_ladder(2, 4), (std::vector<long>{4, 8, 16}));
  EXPECT_EQ(default_ladder().front(), 16);
  EXPECT_EQ(default_ladder().back(), 1L << 20);
}

TEST(DetectLimit, Constant) {
  LimitVerdict v = detect_limit([](long) { return 3.0; });
  ASSERT_TRUE(v.converges());
  EXPECT_EQ(v.value, 3.0);
  EXPECT_EQ(v.rule, "plain");
  EXPECT_EQ(v.ladder.size(), v.evidence.size());
}

TEST(DetectLimit, ZeroTail) {
  LimitVerdict v = detect_limit([](long n) { return n < 100 ? 1.0 : 0.0; });
  EXPECT_TRUE(v.converges_to_zero());
  EXPECT_EQ(v.rule, "zero-tail");
}

TEST(DetectLimit, HarmonicGoesToZero) {
  LimitVerdict v = detect_limit([](long n) { return 1.0 / n; });
  EXPECT_TRUE(v.converges_to_zero());
  EXPECT_EQ(v.rule.rfind("extrapolated", 0), 0u);
}

TEST(DetectLimit, ShiftedHarmonic) {
  LimitVerdict v = detect_limit([](long n) { return 2.0 + 1.0 / n + 5.0 / (double(n) * n); });
  ASSERT_TRUE(v.converges());
  EXPECT_NEAR(v.value.real(), 2.0, 1e-6);
}

TEST(DetectLimit, SlowPowerDecay) {
  LimitVerdict v = detect_limit([](long n) { return 1.0 / std::sqrt(double(n)); });
  EXPECT_TRUE(v.converges_to_zero());
}

TEST(DetectLimit, Divergence) {
  EXPECT_TRUE(detect_limit([](long n) { return double(n); }).diverges());
  EXPECT_TRUE(detect_limit([](long n) { return -std::sqrt(double(n)); }).diverges());
  EXPECT_TRUE(detect_limit([](long n) { return std::log(double(n)); }).diverges());
  LimitVerdict v = detect_limit([](long n) { return 1e3 * double(n) * n; });
  EXPECT_EQ(v.rule, "threshold");
}

TEST(DetectLimit, OscillationIsInconclusive) {
  LimitVerdict v = detect_limit([](long n) { return std::sin(double(n)); });
  EXPECT_EQ(v.tag, LimitTag::kInconclusive);
  EXPECT_EQ(v.rule, "oscillation");
  // Parity flips are visible only through the neighbours.
  auto alt = [](long n) { return (n % 2 ? -1.0 : 1.0) + 1.0 / n; };
  EXPECT_EQ(detect_limit(alt).rule, "oscillation");
  LimitOptions even;
  even.check_neighbours = false;
  ASSERT_TRUE(detect_limit(alt, even).converges());
  EXPECT_NEAR(detect_limit(alt, even).value.real(), 1.0, 1e-6);
}

TEST(DetectLimit, RejectsBadInput) {
  LimitOptions o;
  o.ladder = {1, 2, 3};
  EXPECT_THROW(detect_limit([](long) { return 1.0; }, o), InputError);
  o.ladder = {1, 2, 3, 3, 4, 5};
  EXPECT_THROW(detect_limit([](long) { return 1.0; }, o), InputError);
  EXPECT_THROW(detect_limit([](long) { return NAN; }), InputError);
}

TEST(DetectLimitComplex, ComponentsAndModulus) {
  LimitVerdict v = detect_limit_complex([](long n) { return (1.0 + 1i) + 1i / double(n); });
  ASSERT_TRUE(v.converges());
  EXPECT_NEAR(v.value.real(), 1.0, 1e-6);
  EXPECT_NEAR(v.value.imag(), 1.0, 1e-6);
  EXPECT_TRUE(detect_limit_complex([](long n) { return std::polar(1.0 / n, 0.3); }).converges_to_zero());
  EXPECT_TRUE(detect_limit_complex([](long n) { return 1i * double(n); }).diverges());
  // Unit modulus but the phase keeps turning.
  LimitVerdict spin = detect_limit_complex([](long n) { return std::polar(1.0, std::log(double(n))); });
  EXPECT_EQ(spin.tag, LimitTag::kInconclusive);
}

TEST(LimitTagNames, Strings) {
  EXPECT_EQ(to_string(LimitTag::kConvergesTo), "converges");
  EXPECT_EQ(to_string(LimitTag::kDivergesToInfinity), "diverges");
  EXPECT_EQ(to_string(LimitTag::kInconclusive), "inconclusive");
}

}  // namespace
}  // namespace lipfree
