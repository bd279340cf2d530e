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

// Brute-force free-space norms.
//
//  * real_norm_lp: the Lipschitz dual, max sum a_i t_i over t(0) = 0 and
//    |t_i - t_j| <= d(x_i, x_j).
//  * real_norm_flow: the transport primal, the cheapest way to route mass a_i
//    out of every x_i with the base point absorbing the imbalance.
//  * complex_norm_bracket: the complex dual has disc constraints
//    |(u_i - u_j, v_i - v_j)| <= d(x_i, x_j). Replacing each disc by the
//    circumscribed regular k-gon overestimates the norm; shrinking that
//    polygon by cos(pi/k) gives the inscribed one and an underestimate.

#ifndef LIPFREE_NORM_ORACLE_HPP_
#define LIPFREE_NORM_ORACLE_HPP_

#include "lipfree/free_element.hpp"
#include "lipfree/simplex.hpp"

namespace lipfree {

inline constexpr int kDefaultPolygonOrder = 64;

enum class LpScope {
  kWholeSpace,  // Lipschitz constraints between every pair of points of M
  kSupport,     // only between points of supp(g) and the base point
};

struct NormOptions {
  LpScope scope = LpScope::kWholeSpace;
  lp::SimplexOptions simplex;
};

// Throws InputError if g has a coefficient with nonzero imaginary part.
double real_norm_lp(const FreeElement& g, const NormOptions& options = {});

double real_norm_flow(const FreeElement& g);

// k must be even and >= 8. The complex program always runs over the whole
// space: restricting a complex Lipschitz function to a subset and extending
// it back can cost a factor 4/pi, so the support-only program is not exact.
NormBracket complex_norm_bracket(const FreeElement& g,
                                 int k = kDefaultPolygonOrder,
                                 const lp::SimplexOptions& simplex = {});

// Exact for real elements (lp), bracketed otherwise.
NormBracket free_norm(const FreeElement& g, int k = kDefaultPolygonOrder);

}  // namespace lipfree

#endif  // LIPFREE_NORM_ORACLE_HPP_
