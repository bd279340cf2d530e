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

#include "lipfree/weighted_operator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "parallel.hpp"

namespace lipfree {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void raise(Witnessed& w, double v, Index x, Index y) {
  if (v > w.value || w.x < 0) w = {v, x, y};
}

Witnessed larger(const Witnessed& a, const Witnessed& b) {
  if (a.x < 0) return b;
  if (b.x < 0) return a;
  return b.value > a.value ? b : a;
}

void check_pair(const WeightedMap& op, Index x, Index y) {
  const auto& m = *op.domain();
  if (!m.contains(x) || !m.contains(y)) throw InputError("pair index out of range");
  if (x == y) throw InputError("pair statistics need x != y");
}

}  // namespace

WeightedMap::WeightedMap(SpacePtr domain, SpacePtr codomain,
                         std::vector<Index> f, std::vector<Complex> w)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      f_(std::move(f)),
      w_(std::move(w)) {
  if (!domain_ || !codomain_) throw InputError("weighted map needs both spaces");
  const Index m = domain_->size();
  if (static_cast<Index>(f_.size()) != m || static_cast<Index>(w_.size()) != m) {
    throw InputError("f and w must be defined on every point of the domain");
  }
  for (Index x = 0; x < m; ++x) {
    if (!codomain_->contains(f_[x])) throw InputError("f maps outside the codomain");
    if (!std::isfinite(w_[x].real()) || !std::isfinite(w_[x].imag())) {
      throw InputError("non-finite weight");
    }
  }
  const Index o = domain_->base();
  if (f_[o] != codomain_->base() && w_[o] != Complex(0)) {
    throw InputError("base-point condition fails: need f(0_M) = 0_N or w(0_M) = 0");
  }
}

bool WeightedMap::has_real_weights() const {
  for (const Complex& c : w_) {
    if (c.imag() != 0) return false;
  }
  return true;
}

PairStats pair_stats(double d, double fx, double fy, double fxy, Complex wx,
                     Complex wy) {
  PairStats s;
  s.a = std::abs(wx * fx - wy * fy) / d;
  s.b_xy = std::abs(wx * fx - wy * (fx - fxy)) / d;
  s.b_yx = std::abs(wy * fy - wx * (fy - fxy)) / d;
  s.s_xy = fx >= fy ? 1 : 0;
  s.s_yx = fy >= fx ? 1 : 0;
  s.sigma = fxy / d * (s.s_xy * std::abs(wx) + s.s_yx * std::abs(wy));
  s.tau = std::abs(wx - wy) / d * std::min(fx, fy);
  s.n1_x = std::abs(wx) * fxy / d;
  s.n2_x = fx * std::abs(wx - wy) / d;
  return s;
}

PairStats pair_stats(const WeightedMap& op, Index x, Index y) {
  check_pair(op, x, y);
  return pair_stats((*op.domain())(x, y), op.image_norm(x), op.image_norm(y),
                    op.image_distance(x, y), op.w(x), op.w(y));
}

BoundednessReport boundedness_report(const WeightedMap& op, int jobs) {
  struct Acc {
    Witnessed a, b, sigma, tau, n1, n2;
  };
  const Index m = op.domain()->size();
  Acc acc = internal::reduce_rows(
      m, jobs, Acc{},
      [&](Index x, Acc& r) {
        for (Index y = 0; y < m; ++y) {
          if (y == x) continue;
          const PairStats s = pair_stats(op, x, y);
          raise(r.a, s.a, x, y);
          raise(r.b, s.b_xy, x, y);
          raise(r.sigma, s.sigma, x, y);
          raise(r.tau, s.tau, x, y);
          raise(r.n1, s.n1_x, x, y);
          raise(r.n2, s.n2_x, x, y);
        }
      },
      [](const Acc& l, const Acc& r) {
        return Acc{larger(l.a, r.a),         larger(l.b, r.b),
                   larger(l.sigma, r.sigma), larger(l.tau, r.tau),
                   larger(l.n1, r.n1),       larger(l.n2, r.n2)};
      });
  BoundednessReport rep;
  rep.a = acc.a;
  rep.b = acc.b;
  rep.sigma = acc.sigma;
  rep.tau = acc.tau;
  rep.n1 = acc.n1;
  rep.n2 = acc.n2;
  rep.max_ab = std::max(rep.a.value, rep.b.value);
  rep.real_weights = op.has_real_weights();
  if (rep.real_weights) {
    rep.estimate = {rep.max_ab, rep.max_ab, "max(A,B)"};
  } else {
    // Upper factor 2, not sqrt2: ||Re|| + ||Im|| can pick its two maxima from
    // different terms of the three-term formula.
    rep.estimate = {rep.max_ab / std::numbers::sqrt2, 2 * rep.max_ab, "max(A,B)-bounds"};
  }
  return rep;
}

FreeElement molecule_image(const WeightedMap& op, Index x, Index y) {
  check_pair(op, x, y);
  const double d = (*op.domain())(x, y);
  FreeElement g(op.codomain());
  g.accumulate(op.f(x), op.w(x) / d);
  g.accumulate(op.f(y), -op.w(y) / d);
  return g;
}

OperatorNorm operator_norm(const WeightedMap& op, const OperatorNormOptions& options) {
  const bool real = op.has_real_weights();
  const bool formula = real && options.real_oracle == MoleculeOracle::kTwoPointFormula;
  struct Acc {
    double lo = 0;
    double hi = 0;
    Index x = -1, y = -1;
    long count = 0;
  };
  const Index m = op.domain()->size();
  // The image norm is symmetric in (x, y), so unordered pairs suffice.
  Acc acc = internal::reduce_rows(
      m, options.jobs, Acc{},
      [&](Index x, Acc& r) {
        for (Index y = x + 1; y < m; ++y) {
          double lo, hi;
          if (formula) {
            const double d = (*op.domain())(x, y);
            lo = hi = two_point_max(op.w(x).real(), -op.w(y).real(),
                                    op.image_norm(x), op.image_norm(y),
                                    op.image_distance(x, y)) / d;
          } else {
            const FreeElement g = molecule_image(op, x, y);
            if (real) {
              lo = hi = real_norm_lp(g);
            } else {
              const NormBracket b = complex_norm_bracket(g, options.polygon_order);
              lo = b.lo;
              hi = b.hi;
            }
          }
          ++r.count;
          r.lo = std::max(r.lo, lo);
          if (hi > r.hi || r.x < 0) {
            r.hi = std::max(r.hi, hi);
            r.x = x;
            r.y = y;
          }
        }
      },
      [](const Acc& l, const Acc& r) {
        Acc out = l;
        out.lo = std::max(l.lo, r.lo);
        out.count = l.count + r.count;
        if (r.x >= 0 && (l.x < 0 || r.hi > l.hi)) {
          out.hi = r.hi;
          out.x = r.x;
          out.y = r.y;
        }
        return out;
      });
  OperatorNorm out;
  const char* method = formula ? "molecule-two-point" : real ? "molecule-lp" : "molecule-polygon-lp";
  out.norm = {acc.lo, acc.hi, method};
  out.x = acc.x;
  out.y = acc.y;
  out.molecules = acc.count;
  return out;
}

FreeElement apply(const WeightedMap& op, const FreeElement& g) {
  if (g.space() != op.domain()) throw InputError("element does not live over the domain");
  FreeElement out(op.codomain());
  for (const auto& [x, a] : g.terms()) out.accumulate(op.f(x), a * op.w(x));
  return out;
}

std::vector<Index> non_base_indices(const PointedMetricSpace& space) {
  std::vector<Index> v;
  for (Index i = 0; i < space.size(); ++i) {
    if (i != space.base()) v.push_back(i);
  }
  return v;
}

Eigen::MatrixXcd composition_matrix(const WeightedMap& op) {
  const auto rows = non_base_indices(*op.domain());
  const auto cols = non_base_indices(*op.codomain());
  std::vector<Index> col_of(op.codomain()->size(), -1);
  for (size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<Index>(j);
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const Index z = op.f(rows[i]);
    if (col_of[z] >= 0) mat(i, col_of[z]) = op.w(rows[i]);
  }
  return mat;
}

Index composition_rank(const WeightedMap& op) {
  const Eigen::MatrixXcd mat = composition_matrix(op);
  if (mat.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(mat);
  lu.setThreshold(1e-10);
  return lu.rank();
}

bool is_injective_criterion(const WeightedMap& op) {
  const PointedMetricSpace& n = *op.codomain();
  std::set<Index> hit;
  for (Index x = 0; x < op.domain()->size(); ++x) {
    if (op.w(x) != Complex(0)) hit.insert(op.f(x));
  }
  for (Index z = 0; z < n.size(); ++z) {
    if (z != n.base() && !hit.count(z)) return false;
  }
  return true;
}

SurjectivityReport is_surjective_criterion(const WeightedMap& op) {
  const PointedMetricSpace& m = *op.domain();
  const PointedMetricSpace& n = *op.codomain();
  const Index o = m.base();
  SurjectivityReport r;
  r.weight_gate = true;
  r.base_gate = true;
  r.injective_gate = true;
  std::set<Index> seen;
  for (Index x = 0; x < m.size(); ++x) {
    if (x == o) continue;
    if (op.w(x) == Complex(0)) r.weight_gate = false;
    if (op.f(x) == n.base()) r.base_gate = false;
    if (!seen.insert(op.f(x)).second) r.injective_gate = false;
  }
  r.surjective = r.weight_gate && r.base_gate && r.injective_gate;
  if (!r.surjective) {
    r.sup_first = r.sup_second = kInf;
    return r;
  }
  // Image of the base point read as 0_N: the inverse operator lives on
  // F(f(M)) and sends 0_N back to 0_M.
  auto image = [&](Index x) { return x == o ? n.base() : op.f(x); };
  auto inv = [&](Index x) { return x == o ? Complex(0) : 1.0 / op.w(x); };
  Witnessed first, second;
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = 0; y < m.size(); ++y) {
      if (x == y) continue;
      const double dz = n(image(x), image(y));
      const double v1 = std::abs(m.norm(x) * inv(x) - m.norm(y) * inv(y)) / dz;
      const double v2 = std::abs(m.norm(x) * inv(x) - (m.norm(x) - m(x, y)) * inv(y)) / dz;
      raise(first, v1, x, y);
      raise(second, v2, x, y);
    }
  }
  r.sup_first = first.value;
  r.sup_second = second.value;
  r.first_x = first.x;
  r.first_y = first.y;
  r.second_x = second.x;
  r.second_y = second.y;
  return r;
}

}  // namespace lipfree
