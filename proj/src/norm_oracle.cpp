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

#include "lipfree/norm_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lipfree/min_cost_flow.hpp"

namespace lipfree {
namespace {

std::vector<Index> non_base_points(const PointedMetricSpace& space) {
  std::vector<Index> pts;
  for (Index i = 0; i < space.size(); ++i) {
    if (i != space.base()) pts.push_back(i);
  }
  return pts;
}

void require_real(const FreeElement& g) {
  if (!g.is_real()) throw InputError("real norm requested for an element with complex coefficients");
}

double checked_value(const lp::Solution<double>& s) {
  if (s.status != lp::Status::kOptimal) {
    throw std::runtime_error("norm LP did not reach an optimum");
  }
  return std::max(0.0, s.value);
}

}  // namespace

double real_norm_lp(const FreeElement& g, const NormOptions& options) {
  require_real(g);
  if (g.is_zero()) return 0.0;
  const PointedMetricSpace& space = *g.space();
  std::vector<Index> pts;
  if (options.scope == LpScope::kSupport) {
    for (const auto& [x, c] : g.terms()) pts.push_back(x);
  } else {
    pts = non_base_points(space);
  }
  const Index n = static_cast<Index>(pts.size());
  const Index pairs = n * (n - 1) / 2;
  lp::InequalityProblem<double> problem;
  problem.a = Eigen::MatrixXd::Zero(2 * pairs + 2 * n, n);
  problem.b.resize(2 * pairs + 2 * n);
  problem.c.resize(n);
  Index row = 0;
  for (Index p = 0; p < n; ++p) {
    problem.c(p) = g.coefficient(pts[p]).real();
    for (Index q = p + 1; q < n; ++q) {
      const double d = space(pts[p], pts[q]);
      problem.a(row, p) = 1;
      problem.a(row, q) = -1;
      problem.b(row++) = d;
      problem.a(row, p) = -1;
      problem.a(row, q) = 1;
      problem.b(row++) = d;
    }
    problem.a(row, p) = 1;
    problem.b(row++) = space.norm(pts[p]);
    problem.a(row, p) = -1;
    problem.b(row++) = space.norm(pts[p]);
  }
  return checked_value(lp::maximize(problem, options.simplex));
}

double real_norm_flow(const FreeElement& g) {
  require_real(g);
  if (g.is_zero()) return 0.0;
  const PointedMetricSpace& space = *g.space();
  std::vector<Index> nodes;
  for (const auto& [x, c] : g.terms()) nodes.push_back(x);
  nodes.push_back(space.base());
  const Index n = static_cast<Index>(nodes.size());
  Eigen::MatrixXd cost(n, n);
  Eigen::VectorXd supply(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) cost(i, j) = space(nodes[i], nodes[j]);
  }
  double total = 0;
  for (Index i = 0; i + 1 < n; ++i) {
    supply(i) = g.coefficient(nodes[i]).real();
    total += supply(i);
  }
  supply(n - 1) = -total;
  return flow::successive_shortest_paths(cost, supply).cost;
}

NormBracket complex_norm_bracket(const FreeElement& g, int k,
                                 const lp::SimplexOptions& simplex) {
  if (k < 8 || k % 2 != 0) throw InputError("polygon order must be even and >= 8");
  if (g.is_zero()) return {0.0, 0.0, "polygon-lp"};
  const PointedMetricSpace& space = *g.space();
  const std::vector<Index> pts = non_base_points(space);
  const Index n = static_cast<Index>(pts.size());
  // Variables: u_p at column p, v_p at column n + p. Pairs include the base,
  // encoded as q == n.
  const Index pairs = n * (n + 1) / 2;
  lp::InequalityProblem<double> problem;
  problem.a = Eigen::MatrixXd::Zero(pairs * k, 2 * n);
  problem.b.resize(pairs * k);
  problem.c.resize(2 * n);
  for (Index p = 0; p < n; ++p) {
    const Complex a = g.coefficient(pts[p]);
    // Re(a (u + i v)) = Re(a) u - Im(a) v.
    problem.c(p) = a.real();
    problem.c(n + p) = -a.imag();
  }
  std::vector<double> cs(k), sn(k);
  for (int j = 0; j < k; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / k;
    cs[j] = std::cos(theta);
    sn[j] = std::sin(theta);
  }
  Index row = 0;
  for (Index p = 0; p < n; ++p) {
    for (Index q = p + 1; q <= n; ++q) {
      const double d = q < n ? space(pts[p], pts[q]) : space.norm(pts[p]);
      for (int j = 0; j < k; ++j) {
        problem.a(row, p) = cs[j];
        problem.a(row, n + p) = sn[j];
        if (q < n) {
          problem.a(row, q) = -cs[j];
          problem.a(row, n + q) = -sn[j];
        }
        problem.b(row++) = d;
      }
    }
  }
  const double hi = checked_value(lp::maximize(problem, simplex));
  // The inscribed polygon is the circumscribed one scaled by cos(pi/k), and
  // the program is positively homogeneous in its right-hand side.
  const double lo = std::cos(std::numbers::pi / k) * hi;
  return {lo, hi, "polygon-lp"};
}

NormBracket free_norm(const FreeElement& g, int k) {
  if (g.is_real()) {
    const double v = real_norm_lp(g);
    return {v, v, "lp"};
  }
  return complex_norm_bracket(g, k);
}

}  // namespace lipfree
