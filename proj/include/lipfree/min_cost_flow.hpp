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

#ifndef LIPFREE_MIN_COST_FLOW_HPP_
#define LIPFREE_MIN_COST_FLOW_HPP_

#include <Eigen/Dense>

namespace lipfree::flow {

struct FlowResult {
  double cost = 0;
  Eigen::MatrixXd flow;  // flow(i, j) >= 0 on arc i -> j
  int augmentations = 0;
};

// Uncapacitated min-cost flow on the complete directed graph with arc costs
// cost(i, j) >= 0, by successive shortest augmenting paths (Bellman-Ford on
// the residual graph). supply(i) > 0 is a source, < 0 a sink; the supplies
// must sum to zero within `balance_tol`.
FlowResult successive_shortest_paths(const Eigen::MatrixXd& cost,
                                     const Eigen::VectorXd& supply,
                                     double balance_tol = 1e-9);

}  // namespace lipfree::flow

#endif  // LIPFREE_MIN_COST_FLOW_HPP_
