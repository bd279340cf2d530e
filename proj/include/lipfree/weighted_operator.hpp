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

// Weighted Lipschitz operators wf^ : F(M) -> F(N), delta(x) -> w(x) delta(f(x)),
// and their adjoints wC_f : Lip0(N) -> Lip0(M), g -> w . (g o f).
//
// Pair statistics, for x != y and Dfx = d(f(x), 0), Dfxy = d(f(x), f(y)):
//
//   A(x,y)   = |w(x) Dfx - w(y) Dfy| / d(x,y)
//   B(x,y)   = |w(x) Dfx - w(y) (Dfx - Dfxy)| / d(x,y)
//   sigma    = Dfxy / d(x,y) * (s(x,y) |w(x)| + s(y,x) |w(y)|)
//   tau      = |w(x) - w(y)| / d(x,y) * min(Dfx, Dfy)
//
// with s(x,y) = 1 iff Dfx >= Dfy. The image of the molecule at (x,y) is a
// two-point element whose three-term formula is exactly (A, B(x,y), B(y,x)),
// so for real weights ||wf^|| = max(A, B).

#ifndef LIPFREE_WEIGHTED_OPERATOR_HPP_
#define LIPFREE_WEIGHTED_OPERATOR_HPP_

#include <Eigen/Dense>
#include <vector>

#include "lipfree/free_element.hpp"
#include "lipfree/norm_oracle.hpp"

namespace lipfree {

class WeightedMap {
 public:
  // Throws InputError on size mismatch, out-of-range images, non-finite
  // weights, or when neither f(0_M) = 0_N nor w(0_M) = 0.
  WeightedMap(SpacePtr domain, SpacePtr codomain, std::vector<Index> f,
              std::vector<Complex> w);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  const std::vector<Index>& f() const { return f_; }
  const std::vector<Complex>& w() const { return w_; }
  Index f(Index x) const { return f_[x]; }
  Complex w(Index x) const { return w_[x]; }

  bool has_real_weights() const;
  // d(f(x), 0_N).
  double image_norm(Index x) const { return codomain_->norm(f_[x]); }
  // d(f(x), f(y)).
  double image_distance(Index x, Index y) const {
    return (*codomain_)(f_[x], f_[y]);
  }

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<Index> f_;
  std::vector<Complex> w_;
};

struct PairStats {
  double a = 0;
  double b_xy = 0;
  double b_yx = 0;
  double sigma = 0;
  double tau = 0;
  int s_xy = 0;
  int s_yx = 0;
  double n1_x = 0;  // |w(x)| d(f(x), f(y)) / d(x, y)
  double n2_x = 0;  // d(f(x), 0) |w(x) - w(y)| / d(x, y)
};

// Throws InputError if x == y or either index is out of range.
PairStats pair_stats(const WeightedMap& op, Index x, Index y);

// The same statistics from raw distances: d = d(x,y), fx = d(f(x),0),
// fy = d(f(y),0), fxy = d(f(x),f(y)).
PairStats pair_stats(double d, double fx, double fy, double fxy, Complex wx,
                     Complex wy);

struct Witnessed {
  double value = 0;
  Index x = -1;
  Index y = -1;
};

struct BoundednessReport {
  Witnessed a;
  Witnessed b;  // max over ordered pairs of B(x, y)
  Witnessed sigma;
  Witnessed tau;
  Witnessed n1;
  Witnessed n2;
  double max_ab = 0;
  bool real_weights = true;
  // [max(A,B)/sqrt2, 2 max(A,B)] for complex weights, the point
  // max(A,B) for real ones.
  NormBracket estimate;
};

// Over all ordered pairs x != y of M, base point included.
BoundednessReport boundedness_report(const WeightedMap& op, int jobs = 1);

enum class MoleculeOracle {
  kTwoPointFormula,  // exact three-term formula (real weights only)
  kLp,               // real_norm_lp / complex_norm_bracket on N
};

struct OperatorNormOptions {
  int polygon_order = kDefaultPolygonOrder;
  int jobs = 1;
  MoleculeOracle real_oracle = MoleculeOracle::kTwoPointFormula;
};

struct OperatorNorm {
  NormBracket norm;
  Index x = -1;  // molecule attaining hi
  Index y = -1;
  long molecules = 0;
};

// (w(x) delta(f(x)) - w(y) delta(f(y))) / d(x, y) as an element over N.
FreeElement molecule_image(const WeightedMap& op, Index x, Index y);

// Sup of the image norms over all molecules. Real weights give a point value;
// complex weights always give a bracket.
OperatorNorm operator_norm(const WeightedMap& op,
                           const OperatorNormOptions& options = {});

// Throws InputError if g lives over another space.
FreeElement apply(const WeightedMap& op, const FreeElement& g);

// Rows: M without its base point, columns: N without its base point, in
// index order. entry(x, z) = w(x) when f(x) = z.
Eigen::MatrixXcd composition_matrix(const WeightedMap& op);

// Positions used by composition_matrix.
std::vector<Index> non_base_indices(const PointedMetricSpace& space);

// f(coz w) covers N without its base point.
bool is_injective_criterion(const WeightedMap& op);

struct SurjectivityReport {
  bool weight_gate = false;     // w != 0 on M \ {0}
  bool injective_gate = false;  // f injective on M \ {0}
  bool base_gate = false;       // f(x) != 0_N for x != 0
  bool surjective = false;
  // The two displayed sups of the characterization, with 1/w(0) = 0 and
  // f(0) read as 0_N. +inf when a gate fails.
  double sup_first = 0;
  double sup_second = 0;
  Index first_x = -1, first_y = -1;
  Index second_x = -1, second_y = -1;
};

SurjectivityReport is_surjective_criterion(const WeightedMap& op);

// Rank of composition_matrix by full-pivot LU (threshold 1e-10).
Index composition_rank(const WeightedMap& op);

}  // namespace lipfree

#endif  // LIPFREE_WEIGHTED_OPERATOR_HPP_
