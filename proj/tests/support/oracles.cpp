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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lipfree::testing {

Eigen::MatrixXd random_metric(Rng& rng, Index n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) d(i, j) = d(j, i) = u(rng);
  }
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    }
  }
  return d;
}

SpacePtr space_from_matrix(const Eigen::MatrixXd& d) {
  std::vector<std::string> names = {"0"};
  for (Index i = 1; i < d.rows(); ++i) names.push_back("p" + std::to_string(i));
  return make_space(std::move(names), 0, d);
}

SpacePtr plane_space(const std::vector<std::pair<std::string, Eigen::Vector2d>>& pts) {
  const Index n = static_cast<Index>(pts.size());
  std::vector<std::string> names;
  Eigen::MatrixXd d(n, n);
  for (Index i = 0; i < n; ++i) {
    names.push_back(pts[i].first);
    for (Index j = 0; j < n; ++j) d(i, j) = (pts[i].second - pts[j].second).norm();
  }
  return make_space(std::move(names), 0, std::move(d));
}

SpacePtr random_space(Rng& rng, Index n, double lo, double hi) {
  return space_from_matrix(random_metric(rng, n, lo, hi));
}

std::vector<Eigen::VectorXd> polytope_vertices(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Index dim = a.cols();
  const Index rows = a.rows();
  std::vector<Eigen::VectorXd> out;
  if (dim == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<Index> pick(dim);
  std::function<void(Index, Index)> choose = [&](Index start, Index depth) {
    if (depth == dim) {
      Eigen::MatrixXd s(dim, dim);
      Eigen::VectorXd r(dim);
      for (Index i = 0; i < dim; ++i) {
        s.row(i) = a.row(pick[i]);
        r(i) = b(pick[i]);
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
      if (svd.singularValues().minCoeff() < 1e-12) return;
      const Eigen::VectorXd g = svd.solve(r);
      if (((a * g - b).array() > 1e-9).any()) return;
      for (const auto& v : out) {
        if ((v - g).norm() < 1e-9) return;
      }
      out.push_back(g);
      return;
    }
    for (Index i = start; i < rows; ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return out;
}

namespace {

// Rows +-(e_i - e_j) <= d(i, j) plus +-e_i <= bound(i).
std::vector<Eigen::VectorXd> ball(const std::vector<Index>& vars, const PointedMetricSpace& n,
                                  const std::function<double(Index)>& bound) {
  const Index dim = static_cast<Index>(vars.size());
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  for (Index i = 0; i < dim; ++i) {
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd r = Eigen::VectorXd::Zero(dim);
      r(i) = s;
      rows.push_back(r);
      rhs.push_back(bound(vars[i]));
    }
    for (Index j = i + 1; j < dim; ++j) {
      for (double s : {1.0, -1.0}) {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(dim);
        r(i) = s;
        r(j) = -s;
        rows.push_back(r);
        rhs.push_back(n(vars[i], vars[j]));
      }
    }
  }
  Eigen::MatrixXd a(rows.size(), dim);
  Eigen::VectorXd b(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    a.row(k) = rows[k].transpose();
    b(k) = rhs[k];
  }
  return polytope_vertices(a, b);
}

// sup over x != y of |h(x) - h(y)| / d(x, y).
double lipschitz(const PointedMetricSpace& m, const std::vector<double>& h) {
  double best = 0;
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = x + 1; y < m.size(); ++y) best = std::max(best, std::abs(h[x] - h[y]) / m(x, y));
  }
  return best;
}

}  // namespace

std::vector<Eigen::VectorXd> lip0_ball_vertices(const PointedMetricSpace& n) {
  std::vector<Index> vars;
  for (Index i = 0; i < n.size(); ++i) {
    if (i != n.base()) vars.push_back(i);
  }
  return ball(vars, n, [&](Index i) { return n.norm(i); });
}

std::vector<Eigen::VectorXd> lip_ball_vertices(const PointedMetricSpace& n) {
  std::vector<Index> vars;
  for (Index i = 0; i < n.size(); ++i) vars.push_back(i);
  return ball(vars, n, [](Index) { return 1.0; });
}

double vertex_operator_norm(const WeightedMap& op) {
  const PointedMetricSpace& m = *op.domain();
  const PointedMetricSpace& n = *op.codomain();
  std::vector<Index> slot(n.size(), -1);
  Index next = 0;
  for (Index i = 0; i < n.size(); ++i) {
    if (i != n.base()) slot[i] = next++;
  }
  double best = 0;
  for (const auto& g : lip0_ball_vertices(n)) {
    std::vector<double> h(m.size());
    for (Index x = 0; x < m.size(); ++x) {
      const Index z = op.f(x);
      h[x] = op.w(x).real() * (slot[z] < 0 ? 0.0 : g(slot[z]));
    }
    best = std::max(best, lipschitz(m, h));
  }
  return best;
}

double vertex_lip_operator_norm(const LipProblem& p) {
  const PointedMetricSpace& m = *p.m;
  double best = 0;
  for (const auto& g : lip_ball_vertices(*p.n)) {
    std::vector<double> h(m.size());
    double sup = 0;
    for (Index x = 0; x < m.size(); ++x) {
      h[x] = p.w[x].real() * g(p.f[x]);
      sup = std::max(sup, std::abs(h[x]));
    }
    best = std::max({best, sup, lipschitz(m, h)});
  }
  return best;
}

Index svd_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  Index r = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol) ++r;
  }
  return r;
}

void for_each_map(Index m, Index n, const std::function<void(const std::vector<Index>&)>& visit) {
  std::vector<Index> f(m, 0);
  while (true) {
    visit(f);
    Index i = 0;
    while (i < m && ++f[i] == n) f[i++] = 0;
    if (i == m) return;
  }
}

void for_each_weight(Index m, const std::vector<Complex>& grid,
                     const std::function<void(const std::vector<Complex>&)>& visit) {
  std::vector<size_t> pos(m, 0);
  std::vector<Complex> w(m, grid[0]);
  while (true) {
    visit(w);
    Index i = 0;
    while (i < m && ++pos[i] == grid.size()) {
      pos[i] = 0;
      w[i] = grid[0];
      ++i;
    }
    if (i == m) return;
    w[i] = grid[pos[i]];
  }
}

}  // namespace lipfree::testing
