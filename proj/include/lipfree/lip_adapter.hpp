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

// Lip(N) -> Lip(M) operators as Lip0 operators. Lip carries the norm
// max(||g||_inf, ||g||_L). Truncating both metrics at 2 and adjoining a base
// point e at distance 1 from everything makes g -> g (with g(e) = 0) an
// isometry Lip(M) -> Lip0(M^e). Extending f(e) = e, w(e) = 0 conjugates
// wC_f to w^e C_{f^e}.

#ifndef LIPFREE_LIP_ADAPTER_HPP_
#define LIPFREE_LIP_ADAPTER_HPP_

#include <vector>

#include "lipfree/weighted_operator.hpp"

namespace lipfree {

// The base points of m and n are ignored.
struct LipProblem {
  SpacePtr m;
  SpacePtr n;
  std::vector<Index> f;
  std::vector<Complex> w;
};

// Points of M keep their indices in M^e; e is appended last and is the base.
WeightedMap to_lip0(const LipProblem& p);

struct LipBoundednessReport {
  double w_sup = 0;       // ||w||_inf
  double w_lip = 0;       // ||w||_L under the original metric of M
  Witnessed n1;           // max |w(x)| d(f(x), f(y)) / d(x, y), original metrics
  BoundednessReport lifted;
  // max |sigma(x, e) - |w(x)|| over x in M, which should vanish.
  double sigma_e_defect = 0;
};

LipBoundednessReport lip_boundedness_report(const LipProblem& p, int jobs = 1);

struct ExtensionReport {
  bool extends = true;
  double w_sup = 0;
  double w_lip = 0;
};

// Whether a Lip0 operator extends to Lip(N) -> Lip(M): it does iff w is
// bounded and Lipschitz on M, which is automatic on finite spaces. Pairs
// involving the base point count, so w(0_M) matters here.
ExtensionReport lip0_extends_to_lip(const WeightedMap& op);

}  // namespace lipfree

#endif  // LIPFREE_LIP_ADAPTER_HPP_
