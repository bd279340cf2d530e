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

// Sequential case analysis and the backward shift example.

#include <algorithm>
#include <cmath>
#include <string>

#include "lipfree/asymptotics.hpp"

namespace lipfree {
namespace {

LimitClass classify(const LimitVerdict& v) {
  if (v.diverges()) return LimitClass::kInfinite;
  if (!v.converges()) return LimitClass::kUnknown;
  return v.value == 0.0 ? LimitClass::kZero : LimitClass::kNonzero;
}

ConditionResult vanishing(const std::string& name, const RealSequence& s,
                          const LimitOptions& o) {
  ConditionResult c;
  c.name = name;
  c.verdict = detect_limit(s, o);
  c.outcome = vanishes(c.verdict);
  return c;
}

Outcome all_of(const std::vector<ConditionResult>& cs) {
  bool inconclusive = false;
  for (const auto& c : cs) {
    if (c.outcome == Outcome::kFail) return Outcome::kFail;
    if (c.outcome == Outcome::kInconclusive) inconclusive = true;
  }
  return inconclusive ? Outcome::kInconclusive : Outcome::kPass;
}

Outcome any_of(const std::vector<CaseBranch>& bs) {
  bool inconclusive = false;
  for (const auto& b : bs) {
    if (b.outcome == Outcome::kPass) return Outcome::kPass;
    if (b.outcome == Outcome::kInconclusive) inconclusive = true;
  }
  return inconclusive || bs.empty() ? Outcome::kInconclusive : Outcome::kFail;
}

CaseBranch branch(std::string name, std::vector<ConditionResult> conditions) {
  CaseBranch b{std::move(name), std::move(conditions)};
  b.outcome = all_of(b.conditions);
  return b;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(LimitClass c) {
  switch (c) {
    case LimitClass::kZero: return "zero";
    case LimitClass::kNonzero: return "nonzero";
    case LimitClass::kInfinite: return "infinite";
    case LimitClass::kUnknown: return "unknown";
  }
  return "?";
}

Outcome vanishes(const LimitVerdict& v) {
  if (v.converges_to_zero()) return Outcome::kPass;
  if (v.converges() || v.diverges()) return Outcome::kFail;
  return Outcome::kInconclusive;
}

ConditionResult image_converges(const PairSequenceFamily& fam, char which,
                                const LimitOptions& o) {
  const bool x = which == 'x';
  const std::string z = x ? "x_n" : "y_n";
  ConditionResult base = vanishing(
      "d(f(" + z + "),0) -> 0",
      [&](long n) { return x ? fam.sample(n).df_x0 : fam.sample(n).df_y0; }, o);
  if (base.outcome == Outcome::kPass) {
    base.name = "f(" + z + ") converges (to 0_N)";
    return base;
  }
  const auto& cross = x ? fam.fx_cross : fam.fy_cross;
  if (!cross) {
    ConditionResult c = base;
    c.name = "f(" + z + ") converges (no cross distances supplied)";
    c.outcome = Outcome::kInconclusive;
    return c;
  }
  ConditionResult c = vanishing(
      "f(" + z + ") converges (d(f(" + z + "),f(z_2n)) -> 0)",
      [&](long n) { return cross(n, 2 * n); }, o);
  return c;
}

CaseReport classify_appendix_case(const PairSequenceFamily& fam, const LimitOptions& o) {
  if (!fam.sample) throw InputError("family has no sampler");
  CaseReport r;
  r.a = detect_limit_complex([&](long n) { auto s = fam.sample(n); return s.w_x / s.d_xy; }, o);
  r.b = detect_limit_complex([&](long n) { auto s = fam.sample(n); return s.w_y / s.d_xy; }, o);
  r.diff = detect_limit_complex(
      [&](long n) { auto s = fam.sample(n); return (s.w_x - s.w_y) / s.d_xy; }, o);
  r.a_class = classify(r.a);
  r.b_class = classify(r.b);
  r.diff_class = classify(r.diff);

  auto stat = [&](auto field) {
    return detect_limit(
        [&, field](long n) {
          const PairSample s = fam.sample(n);
          return field(pair_stats(s.d_xy, s.df_x0, s.df_y0, s.df_xy, s.w_x, s.w_y));
        },
        o);
  };
  r.a_stat = stat([](const PairStats& p) { return p.a; });
  r.b_xy_stat = stat([](const PairStats& p) { return p.b_xy; });
  r.b_yx_stat = stat([](const PairStats& p) { return p.b_yx; });
  r.sigma_stat = stat([](const PairStats& p) { return p.sigma; });
  r.tau_stat = stat([](const PairStats& p) { return p.tau; });

  using LC = LimitClass;
  const LC a = r.a_class, b = r.b_class;
  const bool finite_nz_a = a == LC::kNonzero, finite_nz_b = b == LC::kNonzero;
  if (a == LC::kUnknown || b == LC::kUnknown) {
    r.label = "refused";
  } else if (finite_nz_a && finite_nz_b) {
    r.label = "1";
  } else if (finite_nz_a) {
    r.label = b == LC::kZero ? "2" : "2'";
  } else if (finite_nz_b) {
    r.label = a == LC::kZero ? "2" : "2'";
    r.mirrored = true;
  } else if (a == LC::kZero && b == LC::kZero) {
    r.label = "3";
  } else if (a == LC::kInfinite && b == LC::kInfinite) {
    switch (r.diff_class) {
      case LC::kZero: r.label = "4"; break;
      case LC::kInfinite: r.label = "4'"; break;
      case LC::kNonzero: r.label = "5"; break;
      case LC::kUnknown: r.label = "refused"; break;
    }
  } else {
    r.label = "uncovered";
  }
  if (r.label == "refused" || r.label == "uncovered") {
    r.criterion_id = "Appendix-" + r.label;
    return r;
  }
  r.theorem_case = r.label[0] - '0';
  r.criterion_id = "Appendix-case-" + r.label;

  auto as_condition = [](const std::string& name, const LimitVerdict& v) {
    return ConditionResult{name, vanishes(v), v};
  };
  const CaseBranch decay = branch(
      "A, B(x_n,y_n), B(y_n,x_n) -> 0",
      {as_condition("A(x_n,y_n) -> 0", r.a_stat),
       as_condition("B(x_n,y_n) -> 0", r.b_xy_stat),
       as_condition("B(y_n,x_n) -> 0", r.b_yx_stat)});
  r.branches.push_back(decay);

  switch (r.theorem_case) {
    case 1:
      r.branches.push_back(branch("f(x_n), f(y_n) converge",
                                  {image_converges(fam, 'x', o), image_converges(fam, 'y', o)}));
      break;
    case 2:
      if (!r.mirrored) {
        r.branches.push_back(branch(
            "f(x_n) converges and d(f(y_n),0) b_n -> 0",
            {image_converges(fam, 'x', o),
             vanishing("d(f(y_n),0) |b_n| -> 0",
                       [&](long n) {
                         auto s = fam.sample(n);
                         return s.df_y0 * std::abs(s.w_y) / s.d_xy;
                       },
                       o)}));
      } else {
        r.branches.push_back(branch(
            "f(y_n) converges and d(f(x_n),0) a_n -> 0",
            {image_converges(fam, 'y', o),
             vanishing("d(f(x_n),0) |a_n| -> 0",
                       [&](long n) {
                         auto s = fam.sample(n);
                         return s.df_x0 * std::abs(s.w_x) / s.d_xy;
                       },
                       o)}));
      }
      break;
    case 5:
      r.branches.push_back(branch(
          "f(x_n), f(y_n) converge to one point and b_n d(f(x_n),f(y_n)) -> 0",
          {image_converges(fam, 'x', o),
           vanishing("d(f(x_n),f(y_n)) -> 0", [&](long n) { return fam.sample(n).df_xy; }, o),
           vanishing("|b_n| d(f(x_n),f(y_n)) -> 0",
                     [&](long n) {
                       auto s = fam.sample(n);
                       return std::abs(s.w_y) / s.d_xy * s.df_xy;
                     },
                     o)}));
      break;
    default:
      break;  // cases 3 and 4 only have the decay conclusion
  }
  r.outcome = any_of(r.branches);
  return r;
}

// ---------------------------------------------------------------------------

double ShiftExample::d(long n) const { return n == 0 ? 0.0 : std::pow(double(n), -alpha); }

double ShiftExample::dist(long n, long m) const {
  if (n == m) return 0.0;
  return d(n) + d(m);
}

double ShiftExample::w(long n) const { return n == 0 ? 0.0 : std::pow(double(n), -beta); }

double ShiftExample::shift_weight(long n) const {
  if (n <= 1) return 0.0;
  return std::pow(double(n) / double(n - 1), alpha) * std::pow(double(n), -beta);
}

WeightedMap shift_truncation(const ShiftExample& ex, long nmax) {
  if (nmax < 1) throw InputError("shift truncation needs nmax >= 1");
  const Index size = nmax + 1;
  std::vector<std::string> names;
  Eigen::MatrixXd dist(size, size);
  for (Index i = 0; i < size; ++i) {
    names.push_back(std::to_string(i));
    for (Index j = 0; j < size; ++j) dist(i, j) = ex.dist(i, j);
  }
  SpacePtr m = make_space(std::move(names), 0, std::move(dist));
  std::vector<Index> f(size);
  std::vector<Complex> w(size);
  for (Index i = 0; i < size; ++i) {
    f[i] = i == 0 ? 0 : i - 1;
    w[i] = ex.w(i);
  }
  return WeightedMap(m, m, std::move(f), std::move(w));
}

ShiftReport shift_operator_matrix(const ShiftExample& ex, long nmax,
                                  const ShiftOptions& options) {
  if (nmax < 2) throw InputError("shift matrix needs nmax >= 2");
  if (!(ex.alpha > 0)) throw InputError("shift example needs alpha > 0");
  if (!(ex.beta >= 0)) throw InputError("shift example needs beta >= 0");
  ShiftReport r;
  r.matrix = Eigen::MatrixXd::Zero(nmax + 1, nmax + 1);
  r.column_norms.assign(nmax + 1, 0.0);
  for (long n = 2; n <= nmax; ++n) {
    r.matrix(n - 1, n) = ex.shift_weight(n);
    r.column_norms[n] = std::abs(r.matrix(n - 1, n));
  }
  r.max_column_norm = *std::max_element(r.column_norms.begin(), r.column_norms.end());

  r.tail = detect_limit([&](long n) { return ex.shift_weight(n); }, options.limits);
  switch (vanishes(r.tail)) {
    case Outcome::kPass: r.compact = true; r.verdict = "compact"; break;
    case Outcome::kFail: r.verdict = "not compact"; break;
    case Outcome::kInconclusive: r.verdict = "inconclusive"; break;
  }

  const WeightedMap op = shift_truncation(ex, nmax);
  const long top = std::min(nmax, options.psi_limit);
  r.molecule_norms.assign(top + 1, 0.0);
  for (long n = 1; n <= top; ++n) {
    // psi^-1(e_n) = delta(n) / d_n.
    const FreeElement g = FreeElement::delta(op.domain(), n, 1.0 / ex.d(n));
    r.molecule_norms[n] = real_norm_lp(apply(op, g));
    r.psi_defect = std::max(r.psi_defect, std::abs(r.molecule_norms[n] - r.column_norms[n]));
    ++r.psi_checked;
  }
  r.operator_norm = operator_norm(op).norm.hi;
  return r;
}

}  // namespace lipfree
