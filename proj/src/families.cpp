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

#include "lipfree/families.hpp"

#include <cmath>
#include <string>

namespace lipfree {
namespace {

long checked_index(const IndexMap& m, long n, const char* which) {
  const long v = m(n);
  if (v < 0) {
    throw InputError(std::string(which) + " is negative at n = " + std::to_string(n));
  }
  return v;
}

// Space on the given reals with the usual metric, base at 0.0 (which must be
// among the values).
SpacePtr line(const std::vector<double>& values) {
  return std::make_shared<const PointedMetricSpace>(real_line_space(values));
}

WeightedMap identity_with_unit_weight(SpacePtr m, SpacePtr n) {
  std::vector<Index> f(m->size());
  for (Index i = 0; i < m->size(); ++i) f[i] = i;
  return WeightedMap(m, std::move(n), std::move(f), std::vector<Complex>(m->size(), 1.0));
}

}  // namespace

PairSequenceFamily shift_pair_family(const ShiftExample& ex, IndexMap xn, IndexMap yn,
                                     std::string name) {
  PairSequenceFamily fam;
  fam.name = std::move(name);
  auto f = [](long k) { return k > 0 ? k - 1 : 0L; };
  fam.sample = [ex, xn, yn, f](long n) {
    const long x = checked_index(xn, n, "x_n");
    const long y = checked_index(yn, n, "y_n");
    if (x == y) throw InputError("x_n = y_n at n = " + std::to_string(n));
    PairSample s;
    s.d_xy = ex.dist(x, y);
    s.df_x0 = ex.d(f(x));
    s.df_y0 = ex.d(f(y));
    s.df_xy = ex.dist(f(x), f(y));
    s.w_x = ex.w(x);
    s.w_y = ex.w(y);
    return s;
  };
  fam.fx_cross = [ex, xn, f](long n, long m) {
    return ex.dist(f(checked_index(xn, n, "x_n")), f(checked_index(xn, m, "x_n")));
  };
  fam.fy_cross = [ex, yn, f](long n, long m) {
    return ex.dist(f(checked_index(yn, n, "y_n")), f(checked_index(yn, m, "y_n")));
  };
  fam.dx0 = [ex, xn](long n) { return ex.d(checked_index(xn, n, "x_n")); };
  fam.dy0 = [ex, yn](long n) { return ex.d(checked_index(yn, n, "y_n")); };
  return fam;
}

PairSequenceFamily remark_square_pair_family(IndexMap xn, IndexMap yn, std::string name) {
  // Points live in {0} u [1, inf); the index maps give integers.
  auto point = [](const IndexMap& m, long n, const char* which) {
    return static_cast<double>(checked_index(m, n, which));
  };
  auto weight = [](double x) { return x == 0.0 ? 0.0 : 1.0 / x; };
  PairSequenceFamily fam;
  fam.name = std::move(name);
  fam.sample = [=](long n) {
    const double x = point(xn, n, "x_n");
    const double y = point(yn, n, "y_n");
    if (x == y) throw InputError("x_n = y_n at n = " + std::to_string(n));
    PairSample s;
    s.d_xy = std::abs(x - y);
    s.df_x0 = x * x;
    s.df_y0 = y * y;
    s.df_xy = std::abs(x * x - y * y);
    s.w_x = weight(x);
    s.w_y = weight(y);
    return s;
  };
  fam.fx_cross = [=](long n, long m) {
    const double a = point(xn, n, "x_n"), b = point(xn, m, "x_n");
    return std::abs(a * a - b * b);
  };
  fam.fy_cross = [=](long n, long m) {
    const double a = point(yn, n, "y_n"), b = point(yn, m, "y_n");
    return std::abs(a * a - b * b);
  };
  fam.dx0 = [=](long n) { return point(xn, n, "x_n"); };
  fam.dy0 = [=](long n) { return point(yn, n, "y_n"); };
  return fam;
}

WeightedMap remark_square_truncation(long n) {
  if (n < 1) throw InputError("remark-square truncation needs n >= 1");
  std::vector<double> xs, squares;
  for (long k = 0; k <= n; ++k) {
    xs.push_back(static_cast<double>(k));
    squares.push_back(static_cast<double>(k) * static_cast<double>(k));
  }
  SpacePtr m = line(xs);
  SpacePtr target = line(squares);
  std::vector<Index> f(n + 1);
  std::vector<Complex> w(n + 1);
  for (long k = 0; k <= n; ++k) {
    f[k] = k;
    w[k] = k == 0 ? 0.0 : 1.0 / static_cast<double>(k);
  }
  return WeightedMap(m, target, std::move(f), std::move(w));
}

TruncationFamily identity_discrete_family() {
  TruncationFamily t;
  t.name = "identity-discrete";
  t.levels = {2, 3, 4, 5, 6};
  t.at = [](int level) {
    const Index size = (Index{1} << level) + 1;
    std::vector<std::string> names;
    for (Index i = 0; i < size; ++i) names.push_back("p" + std::to_string(i));
    Eigen::MatrixXd d = Eigen::MatrixXd::Ones(size, size);
    d.diagonal().setZero();
    SpacePtr m = make_space(std::move(names), 0, std::move(d));
    return identity_with_unit_weight(m, m);
  };
  return t;
}

TruncationFamily sqrt_bump_family() {
  TruncationFamily t;
  t.name = "sqrt-bump";
  t.levels = {2, 3, 4, 5};
  t.at = [](int level) {
    // {0} u [1, 2^level] with step 2^-level.
    const double step = std::ldexp(1.0, -level);
    const long count = (std::lround(std::ldexp(1.0, level)) - 1) * std::lround(1.0 / step) + 1;
    std::vector<double> xs = {0.0}, fx = {0.0};
    for (long k = 0; k < count; ++k) {
      const double x = 1.0 + static_cast<double>(k) * step;
      xs.push_back(x);
      fx.push_back(std::sqrt(1.0 + x * x) - 1.0);
    }
    SpacePtr m = line(xs);
    SpacePtr n = line(fx);
    return identity_with_unit_weight(m, n);
  };
  return t;
}

TruncationFamily snowflake_family() {
  TruncationFamily t;
  t.name = "snowflake";
  t.levels = {4, 6, 8, 10};
  t.at = [](int level) {
    const long count = 1L << level;
    std::vector<double> xs = {0.0};
    for (long k = 1; k <= count; ++k) xs.push_back(std::ldexp(static_cast<double>(k), -level));
    const Index size = static_cast<Index>(xs.size());
    std::vector<std::string> names;
    Eigen::MatrixXd d(size, size);
    for (Index i = 0; i < size; ++i) {
      names.push_back("s" + std::to_string(i));
      for (Index j = 0; j < size; ++j) d(i, j) = std::sqrt(std::abs(xs[i] - xs[j]));
    }
    SpacePtr m = make_space(std::move(names), 0, std::move(d));
    return identity_with_unit_weight(m, line(xs));
  };
  return t;
}

TruncationFamily rank_one_family() {
  TruncationFamily t;
  t.name = "rank-one";
  t.levels = {1, 2, 3, 4};
  t.at = [](int level) {
    // {0} u [1, 1 + 2^level] with step 1/16; the right end doubles per level.
    const long count = 16L * (1L << level) + 1;
    std::vector<double> xs = {0.0};
    for (long k = 0; k < count; ++k) xs.push_back(1.0 + static_cast<double>(k) / 16.0);
    SpacePtr m = line(xs);
    SpacePtr n = line({0.0, 1.0});
    std::vector<Index> f(xs.size(), 1);
    std::vector<Complex> w(xs.size());
    f[0] = 0;
    for (size_t i = 0; i < xs.size(); ++i) w[i] = xs[i];
    return WeightedMap(m, n, std::move(f), std::move(w));
  };
  return t;
}

TruncationFamily zero_map_family() {
  TruncationFamily t;
  t.name = "zero-map";
  t.levels = {2, 3, 4, 5};
  t.at = [](int level) {
    std::vector<double> xs;
    for (long k = 0; k <= (1L << level); ++k) xs.push_back(static_cast<double>(k));
    SpacePtr m = line(xs);
    SpacePtr n = line({0.0});
    return WeightedMap(m, n, std::vector<Index>(xs.size(), 0),
                       std::vector<Complex>(xs.size(), 1.0));
  };
  return t;
}

}  // namespace lipfree
