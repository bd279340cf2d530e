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

#ifndef LIPFREE_FREE_ELEMENT_HPP_
#define LIPFREE_FREE_ELEMENT_HPP_

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <string>

#include "lipfree/metric_space.hpp"

namespace lipfree {

using Complex = std::complex<double>;

// Enclosure [lo, hi] of a norm. Exact methods return lo == hi.
struct NormBracket {
  double lo = 0;
  double hi = 0;
  std::string method;

  double mid() const { return 0.5 * (lo + hi); }
  bool exact() const { return lo == hi; }
  bool contains(double v, double tol = 0) const {
    return v >= lo - tol && v <= hi + tol;
  }
};

// A finitely supported element sum_i a_i delta(x_i) of the complex free space
// over a finite pointed metric space.
//
// Canonical form: no zero coefficients (exact zero only, callers round
// explicitly) and no term at the base point. delta(0) is the zero element, so
// base-point terms are silently dropped on every insertion.
class FreeElement {
 public:
  using Terms = std::map<Index, Complex>;

  explicit FreeElement(SpacePtr space);
  FreeElement(SpacePtr space, const Terms& terms);

  static FreeElement delta(SpacePtr space, Index x, Complex coefficient = 1.0);

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  Complex coefficient(Index x) const;

  // Adds c to the coefficient at x, keeping canonical form.
  void accumulate(Index x, Complex c);

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  FreeElement& operator*=(Complex s);

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_space(const FreeElement& other) const;

  SpacePtr space_;
  Terms terms_;
};

FreeElement operator+(FreeElement a, const FreeElement& b);
FreeElement operator-(FreeElement a, const FreeElement& b);
FreeElement operator*(Complex s, FreeElement a);

FreeElement conjugate(const FreeElement& g);
FreeElement real_part(const FreeElement& g);
FreeElement imag_part(const FreeElement& g);

// Points carrying a nonzero coefficient; the zero element has empty support.
std::set<Index> support(const FreeElement& g);

// (delta(x) - delta(y)) / d(x, y); norm at most 1.
struct Molecule {
  Index x = 0;
  Index y = 0;
};
FreeElement to_element(const SpacePtr& space, const Molecule& m);

// Norm of a*delta(x) + b*delta(y) expressed through the three distances
// d(x,0), d(y,0), d(x,y): the largest of
//   |a d(x,0) + b d(y,0)|,
//   |a d(x,0) + b (d(x,0) - d(x,y))|,
//   |b d(y,0) + a (d(y,0) - d(x,y))|.
// For real a, b this is the exact free-space norm. For complex a, b it is the
// quantity m with m / sqrt(2) <= norm <= 2 m. The tighter sqrt(2) m upper
// bound one might expect fails: a = 4.48537 - 2.04667i, b = -2.14273 + 4.59247i
// with d(x,0) = 7.707171, d(y,0) = 7.248486, d(x,y) = 5.775359 has norm
// 50.86 > sqrt(2) m = 44.63.
template <typename Scalar>
double two_point_max(Scalar a, Scalar b, double dx0, double dy0, double dxy) {
  using std::abs;
  const double t1 = abs(a * dx0 + b * dy0);
  const double t2 = abs(a * dx0 + b * (dx0 - dxy));
  const double t3 = abs(b * dy0 + a * (dy0 - dxy));
  return std::max(t1, std::max(t2, t3));
}

// Exact ||a delta(x) + b delta(y)|| in the real free space. Requires x != y.
// Either point may be the base point.
double two_point_norm_real(const PointedMetricSpace& space, double a, Index x,
                           double b, Index y);

// [m / sqrt(2), 2 m] with m = two_point_max on the complex coefficients.
NormBracket two_point_norm_complex_bracket(const PointedMetricSpace& space,
                                           Complex a, Index x, Complex b,
                                           Index y);

}  // namespace lipfree

#endif  // LIPFREE_FREE_ELEMENT_HPP_
