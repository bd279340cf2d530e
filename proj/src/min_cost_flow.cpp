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

#include "lipfree/min_cost_flow.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lipfree/metric_space.hpp"

namespace lipfree::flow {

FlowResult successive_shortest_paths(const Eigen::MatrixXd& cost,
                                     const Eigen::VectorXd& supply,
                                     double balance_tol) {
  const Eigen::Index n = cost.rows();
  if (cost.cols() != n || supply.size() != n) {
    throw InputError("flow: cost matrix and supply vector sizes disagree");
  }
  if ((cost.array() < 0).any()) throw InputError("flow: negative arc cost");
  const double total = supply.cwiseAbs().sum();
  if (std::abs(supply.sum()) > balance_tol * std::max(1.0, total)) {
    throw InputError("flow: supplies do not balance");
  }

  FlowResult result;
  result.flow = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd excess = supply;
  const double eps = 1e-13 * std::max(1.0, total);
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> dist(n);
  std::vector<Eigen::Index> pred(n);
  std::vector<bool> pred_backward(n);

  while (true) {
    bool any_source = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      dist[i] = inf;
      pred[i] = -1;
      if (excess(i) > eps) {
        dist[i] = 0;
        any_source = true;
      }
    }
    if (!any_source) break;

    // Bellman-Ford over the residual graph: forward arcs are uncapacitated,
    // backward arcs exist where flow is positive and cost -cost(i, j).
    for (Eigen::Index round = 0; round < n; ++round) {
      bool changed = false;
      for (Eigen::Index u = 0; u < n; ++u) {
        if (dist[u] == inf) continue;
        for (Eigen::Index v = 0; v < n; ++v) {
          if (u == v) continue;
          if (dist[u] + cost(u, v) < dist[v] - 1e-15) {
            dist[v] = dist[u] + cost(u, v);
            pred[v] = u;
            pred_backward[v] = false;
            changed = true;
          }
          if (result.flow(v, u) > eps && dist[u] - cost(v, u) < dist[v] - 1e-15) {
            dist[v] = dist[u] - cost(v, u);
            pred[v] = u;
            pred_backward[v] = true;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }

    Eigen::Index sink = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (excess(i) < -eps && dist[i] < inf &&
          (sink < 0 || dist[i] < dist[sink])) {
        sink = i;
      }
    }
    if (sink < 0) throw std::logic_error("flow: no reachable sink");

    double amount = -excess(sink);
    Eigen::Index v = sink;
    while (pred[v] >= 0) {
      const Eigen::Index u = pred[v];
      if (pred_backward[v]) amount = std::min(amount, result.flow(v, u));
      v = u;
    }
    const Eigen::Index source = v;
    amount = std::min(amount, excess(source));

    v = sink;
    while (pred[v] >= 0) {
      const Eigen::Index u = pred[v];
      if (pred_backward[v]) {
        result.flow(v, u) -= amount;
      } else {
        result.flow(u, v) += amount;
      }
      v = u;
    }
    excess(source) -= amount;
    excess(sink) += amount;
    ++result.augmentations;
  }

  result.cost = (result.flow.array() * cost.array()).sum();
  return result;
}

}  // namespace lipfree::flow
