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

#include "lipfree/free_element.hpp"

#include <cmath>

namespace lipfree {

FreeElement::FreeElement(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw InputError("free element needs a space");
}

FreeElement::FreeElement(SpacePtr space, const Terms& terms)
    : FreeElement(std::move(space)) {
  for (const auto& [x, c] : terms) accumulate(x, c);
}

FreeElement FreeElement::delta(SpacePtr space, Index x, Complex coefficient) {
  FreeElement g(std::move(space));
  g.accumulate(x, coefficient);
  return g;
}

bool FreeElement::is_real() const {
  for (const auto& [x, c] : terms_) {
    if (c.imag() != 0.0) return false;
  }
  return true;
}

Complex FreeElement::coefficient(Index x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void FreeElement::accumulate(Index x, Complex c) {
  if (!space_->contains(x)) throw InputError("point index out of range");
  if (x == space_->base()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0)) terms_.erase(it);
}

void FreeElement::require_same_space(const FreeElement& other) const {
  if (space_ != other.space_) {
    throw InputError("free elements live over different spaces");
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  require_same_space(other);
  for (const auto& [x, c] : other.terms_) accumulate(x, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  require_same_space(other);
  for (const auto& [x, c] : other.terms_) accumulate(x, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    // Underflow can produce an exact zero.
    if (it->second == Complex(0.0)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
FreeElement operator*(Complex s, FreeElement a) { return a *= s; }

FreeElement conjugate(const FreeElement& g) {
  FreeElement out(g.space());
  for (const auto& [x, c] : g.terms()) out.accumulate(x, std::conj(c));
  return out;
}

FreeElement real_part(const FreeElement& g) {
  FreeElement out(g.space());
  for (const auto& [x, c] : g.terms()) out.accumulate(x, c.real());
  return out;
}

FreeElement imag_part(const FreeElement& g) {
  FreeElement out(g.space());
  for (const auto& [x, c] : g.terms()) out.accumulate(x, c.imag());
  return out;
}

std::set<Index> support(const FreeElement& g) {
  std::set<Index> s;
  for (const auto& [x, c] : g.terms()) s.insert(x);
  return s;
}

FreeElement to_element(const SpacePtr& space, const Molecule& m) {
  if (m.x == m.y) throw InputError("molecule needs two distinct points");
  const double dxy = (*space)(m.x, m.y);
  FreeElement g(space);
  g.accumulate(m.x, 1.0 / dxy);
  g.accumulate(m.y, -1.0 / dxy);
  return g;
}

double two_point_norm_real(const PointedMetricSpace& space, double a, Index x,
                           double b, Index y) {
  if (x == y) throw InputError("two-point norm needs distinct points (merge terms first)");
  return two_point_max(a, b, space.norm(x), space.norm(y), space(x, y));
}

NormBracket two_point_norm_complex_bracket(const PointedMetricSpace& space,
                                           Complex a, Index x, Complex b,
                                           Index y) {
  if (x == y) throw InputError("two-point norm needs distinct points (merge terms first)");
  const double m = two_point_max(a, b, space.norm(x), space.norm(y), space(x, y));
  return {m / std::sqrt(2.0), 2 * m, "two-point-bounds"};
}

}  // namespace lipfree
