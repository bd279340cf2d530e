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

#include "lipfree/lip_adapter.hpp"

#include <cmath>

namespace lipfree {
namespace {

void weight_norms(const PointedMetricSpace& m, const std::vector<Complex>& w,
                  double* sup, double* lip) {
  *sup = 0;
  *lip = 0;
  for (Index x = 0; x < m.size(); ++x) {
    *sup = std::max(*sup, std::abs(w[x]));
    for (Index y = x + 1; y < m.size(); ++y) {
      *lip = std::max(*lip, std::abs(w[x] - w[y]) / m(x, y));
    }
  }
}

}  // namespace

WeightedMap to_lip0(const LipProblem& p) {
  if (!p.m || !p.n) throw InputError("Lip problem needs both spaces");
  const Index size = p.m->size();
  if (static_cast<Index>(p.f.size()) != size || static_cast<Index>(p.w.size()) != size) {
    throw InputError("f and w must be defined on every point of M");
  }
  SpacePtr me = make_space(adjoin_basepoint(truncate_diameter(*p.m, 2.0)));
  SpacePtr ne = make_space(adjoin_basepoint(truncate_diameter(*p.n, 2.0)));
  std::vector<Index> f = p.f;
  std::vector<Complex> w = p.w;
  f.push_back(ne->base());
  w.push_back(0.0);
  return WeightedMap(me, ne, std::move(f), std::move(w));
}

LipBoundednessReport lip_boundedness_report(const LipProblem& p, int jobs) {
  const WeightedMap lifted = to_lip0(p);
  LipBoundednessReport r;
  weight_norms(*p.m, p.w, &r.w_sup, &r.w_lip);
  for (Index x = 0; x < p.m->size(); ++x) {
    for (Index y = 0; y < p.m->size(); ++y) {
      if (x == y) continue;
      const double v = std::abs(p.w[x]) * (*p.n)(p.f[x], p.f[y]) / (*p.m)(x, y);
      if (v > r.n1.value || r.n1.x < 0) r.n1 = {v, x, y};
    }
  }
  r.lifted = boundedness_report(lifted, jobs);
  const Index e = lifted.domain()->base();
  for (Index x = 0; x < p.m->size(); ++x) {
    const double s = pair_stats(lifted, x, e).sigma;
    r.sigma_e_defect = std::max(r.sigma_e_defect, std::abs(s - std::abs(p.w[x])));
  }
  return r;
}

ExtensionReport lip0_extends_to_lip(const WeightedMap& op) {
  ExtensionReport r;
  weight_norms(*op.domain(), op.w(), &r.w_sup, &r.w_lip);
  r.extends = std::isfinite(r.w_sup) && std::isfinite(r.w_lip);
  return r;
}

}  // namespace lipfree
