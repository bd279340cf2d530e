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

// Compactness checks on families: sigma/tau along pair sequences, and
// epsilon-net / delta-ladder probes on growing truncations.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lipfree/asymptotics.hpp"

namespace lipfree {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Outcome aggregate(const std::vector<CriterionCheck>& checks) {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (!c.counts) continue;
    if (c.outcome == Outcome::kFail) return Outcome::kFail;
    if (c.outcome == Outcome::kInconclusive) inconclusive = true;
  }
  return inconclusive ? Outcome::kInconclusive : Outcome::kPass;
}

std::string compact_verdict(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "compact";
    case Outcome::kFail: return "not compact";
    default: return "inconclusive";
  }
}

CriterionCheck from_limit(const std::string& name, const LimitVerdict& v) {
  CriterionCheck c;
  c.name = name;
  c.outcome = vanishes(v);
  c.detail = to_string(v.tag) + " (" + v.rule + ")";
  if (v.converges()) c.detail += " to " + fmt(std::abs(v.value));
  c.evidence = v.evidence;
  return c;
}

struct NetStats {
  std::vector<long> sizes;  // one per epsilon
  double min_gap = 0;       // smallest positive distance in the set
  long distinct = 0;
};

NetStats net_stats(long count, const std::function<double(long, long)>& dist) {
  NetStats st;
  for (double eps : kEpsilonGrid) st.sizes.push_back(greedy_net_size(count, dist, eps));
  st.min_gap = std::numeric_limits<double>::infinity();
  for (long i = 0; i < count; ++i) {
    for (long j = i + 1; j < count; ++j) {
      const double d = dist(i, j);
      if (d > 0) st.min_gap = std::min(st.min_gap, d);
    }
  }
  st.distinct = greedy_net_size(count, dist, 1e-300);
  return st;
}

// One check per epsilon over the per-level stats. A scale is resolved once
// the sample has points closer than eps, or once the sampled set stopped
// changing; unresolved scales are reported but do not count.
void net_checks(const std::string& what, const std::vector<NetStats>& levels,
                std::vector<CriterionCheck>* out, bool counts = true) {
  const NetStats& last = levels.back();
  const bool frozen = levels.size() >= 2 && levels[levels.size() - 2].distinct == last.distinct;
  for (size_t e = 0; e < kEpsilonGrid.size(); ++e) {
    CriterionCheck c;
    c.name = what + ", eps=" + fmt(kEpsilonGrid[e]);
    c.counts = counts;
    std::vector<long> sizes;
    for (const auto& l : levels) sizes.push_back(l.sizes[e]);
    for (long s : sizes) c.evidence.push_back(static_cast<double>(s));
    if (!(last.min_gap <= kEpsilonGrid[e]) && !frozen) {
      c.counts = false;
      c.outcome = Outcome::kInconclusive;
      c.detail = "unresolved: sample spacing above eps";
    } else if (net_growth(sizes)) {
      c.outcome = Outcome::kFail;
      c.detail = "net size grows with the truncation";
    } else {
      c.outcome = Outcome::kPass;
      c.detail = "net size stable";
    }
    out->push_back(std::move(c));
  }
}

void require_levels(const TruncationFamily& t) {
  if (!t.at) throw InputError("truncation family has no generator");
  if (t.levels.size() < 2) throw InputError("truncation family needs at least two levels");
}

}  // namespace

long greedy_net_size(long count, const std::function<double(long, long)>& dist, double eps) {
  std::vector<long> centres;
  for (long i = 0; i < count; ++i) {
    bool covered = false;
    for (long c : centres) {
      if (dist(i, c) < eps) {
        covered = true;
        break;
      }
    }
    if (!covered) centres.push_back(i);
  }
  return static_cast<long>(centres.size());
}

bool net_growth(const std::vector<long>& sizes, double growth_factor) {
  if (sizes.size() < 2) return false;
  const long last = sizes.back();
  const long prev = sizes[sizes.size() - 2];
  return last > prev + 1 && static_cast<double>(last) >= growth_factor * static_cast<double>(prev);
}

CriterionReport check_caraccompact(const std::vector<PairSequenceFamily>& families,
                                   const LimitOptions& o) {
  CriterionReport r;
  r.criterion_id = "CaracCompact";
  bool any_in_regime = false;
  for (const auto& fam : families) {
    const LimitVerdict close = detect_limit([&](long n) { return fam.sample(n).df_xy; }, o);
    const LimitVerdict near_base = detect_limit(
        [&](long n) {
          const PairSample s = fam.sample(n);
          return std::min(s.df_x0, s.df_y0);
        },
        o);
    const Outcome in_sigma = vanishes(close);
    const Outcome in_tau = vanishes(near_base);
    if (in_sigma == Outcome::kPass) {
      any_in_regime = true;
      r.checks.push_back(from_limit(
          fam.name + ": sigma -> 0",
          detect_limit(
              [&](long n) {
                const PairSample s = fam.sample(n);
                return pair_stats(s.d_xy, s.df_x0, s.df_y0, s.df_xy, s.w_x, s.w_y).sigma;
              },
              o)));
    }
    if (in_tau == Outcome::kPass) {
      any_in_regime = true;
      r.checks.push_back(from_limit(
          fam.name + ": tau -> 0",
          detect_limit(
              [&](long n) {
                const PairSample s = fam.sample(n);
                return pair_stats(s.d_xy, s.df_x0, s.df_y0, s.df_xy, s.w_x, s.w_y).tau;
              },
              o)));
    }
    if (in_sigma == Outcome::kFail && in_tau == Outcome::kFail) {
      CriterionCheck c;
      c.name = fam.name + ": out of regime";
      c.counts = false;
      c.outcome = Outcome::kInconclusive;
      c.detail = "neither d(f(x_n),f(y_n)) nor min d(f(.),0) tends to 0; family rejected";
      c.evidence = close.evidence;
      r.checks.push_back(std::move(c));
    } else if (in_sigma != Outcome::kPass && in_tau != Outcome::kPass) {
      CriterionCheck c;
      c.name = fam.name + ": regime undetermined";
      c.outcome = Outcome::kInconclusive;
      c.detail = "limits of d(f(x_n),f(y_n)) or min d(f(.),0) inconclusive";
      r.checks.push_back(std::move(c));
    }
  }
  r.outcome = aggregate(r.checks);
  if (!any_in_regime && r.outcome == Outcome::kPass) r.outcome = Outcome::kInconclusive;
  switch (r.outcome) {
    case Outcome::kPass: r.verdict = "sigma and tau vanish on every in-regime family"; break;
    case Outcome::kFail: r.verdict = "not compact"; break;
    default: r.verdict = any_in_regime ? "inconclusive" : "no family in regime"; break;
  }
  return r;
}

CriterionReport check_udb(const TruncationFamily& trunc,
                          const std::vector<PointSequenceFamily>& extremes,
                          const UdbOptions& options) {
  if (!(options.theta > 0)) throw InputError("uniform discreteness bound must be positive");
  if (!std::isfinite(options.diameter)) throw InputError("domain must be bounded");
  require_levels(trunc);
  CriterionReport r;
  r.criterion_id = "CaracCompactUDB";

  std::vector<std::vector<NetStats>> sizes(options.alpha_grid.size());
  for (int level : trunc.levels) {
    const WeightedMap op = trunc.at(level);
    const PointedMetricSpace& m = *op.domain();
    for (Index x = 0; x < m.size(); ++x) {
      for (Index y = x + 1; y < m.size(); ++y) {
        if (m(x, y) < options.theta - kTriangleTolerance ||
            m(x, y) > options.diameter + kTriangleTolerance) {
          throw InputError("truncation violates the declared discreteness or diameter bound");
        }
      }
    }
    for (size_t a = 0; a < options.alpha_grid.size(); ++a) {
      std::vector<Index> pts;
      for (Index x = 0; x < m.size(); ++x) {
        if (std::abs(op.w(x)) > options.alpha_grid[a]) pts.push_back(op.f(x));
      }
      const PointedMetricSpace& n = *op.codomain();
      sizes[a].push_back(net_stats(static_cast<long>(pts.size()),
                                   [&](long i, long j) { return n(pts[i], pts[j]); }));
    }
  }
  for (size_t a = 0; a < options.alpha_grid.size(); ++a) {
    net_checks("(i) f(|w| > " + fmt(options.alpha_grid[a]) + ") totally bounded",
               sizes[a], &r.checks);
  }
  for (const auto& fam : extremes) {
    r.checks.push_back(from_limit(
        "(ii) " + fam.name + ": w(x_n) d(f(x_n),0) -> 0",
        detect_limit(
            [&](long n) {
              const PointSample s = fam.sample(n);
              return std::abs(s.w) * s.df0;
            },
            options.limits)));
  }
  r.outcome = aggregate(r.checks);
  r.verdict = compact_verdict(r.outcome);
  return r;
}

std::vector<double> local_ratio_ladder(const PointedMetricSpace& m,
                                       const std::function<double(Index, Index)>& image_dist,
                                       const std::vector<double>& deltas) {
  std::vector<double> sups(deltas.size(), -1.0);
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = x + 1; y < m.size(); ++y) {
      const double d = m(x, y);
      double ratio = -1;
      for (size_t j = 0; j < deltas.size(); ++j) {
        if (d >= deltas[j]) continue;
        if (ratio < 0) ratio = image_dist(x, y) / d;
        sups[j] = std::max(sups[j], ratio);
      }
    }
  }
  return sups;
}

CriterionCheck flatness_check(const std::string& name, const std::vector<double>& sups,
                              double flat_ratio) {
  CriterionCheck c;
  c.name = name;
  c.evidence = sups;
  std::vector<double> pop;
  for (double s : sups) {
    if (s >= 0) pop.push_back(s);
  }
  if (pop.empty()) {
    c.outcome = Outcome::kPass;
    c.detail = "vacuous: no pair closer than the largest delta";
    return c;
  }
  const double first = pop.front();
  const double last = pop.back();
  if (last <= 1e-12 * std::max(1.0, first)) {
    c.outcome = Outcome::kPass;
    c.detail = "sup ratio vanishes";
    return c;
  }
  if (pop.size() >= 3) {
    const size_t k = pop.size() - 1;
    if (pop[k] <= flat_ratio * pop[k - 1] && pop[k - 1] <= flat_ratio * pop[k - 2]) {
      c.outcome = Outcome::kPass;
      c.detail = "sup ratio shrinks with delta (last " + fmt(last) + ")";
      return c;
    }
  }
  if (last >= 0.5 * first) {
    c.outcome = Outcome::kFail;
    c.detail = "sup ratio does not shrink with delta (first " + fmt(first) + ", last " +
               fmt(last) + ")";
    return c;
  }
  c.outcome = Outcome::kInconclusive;
  c.detail = "sup ratio decreasing but not clearly to 0";
  return c;
}

CriterionReport check_w1_compact(const TruncationFamily& trunc,
                                 const std::vector<PairSequenceFamily>& escaping,
                                 const FlatnessOptions& options) {
  require_levels(trunc);
  CriterionReport r;
  r.criterion_id = "ThmAcomplex";

  std::vector<std::vector<NetStats>> bounded(options.radii.size());
  std::vector<NetStats> whole;
  std::vector<double> p2;
  double global_ratio = 0;
  for (size_t li = 0; li < trunc.levels.size(); ++li) {
    const WeightedMap op = trunc.at(trunc.levels[li]);
    const PointedMetricSpace& m = *op.domain();
    const PointedMetricSpace& n = *op.codomain();
    for (Index x = 0; x < m.size(); ++x) {
      if (op.w(x) != Complex(1.0)) throw InputError("check_w1_compact needs w = 1");
    }
    auto image = [&](long i, long j) { return n(op.f(i), op.f(j)); };
    for (size_t ri = 0; ri < options.radii.size(); ++ri) {
      std::vector<Index> pts;
      for (Index x = 0; x < m.size(); ++x) {
        if (m.norm(x) <= options.radii[ri]) pts.push_back(x);
      }
      bounded[ri].push_back(net_stats(static_cast<long>(pts.size()), [&](long i, long j) {
        return n(op.f(pts[i]), op.f(pts[j]));
      }));
    }
    whole.push_back(net_stats(m.size(), image));
    if (li + 1 == trunc.levels.size()) {
      p2 = local_ratio_ladder(
          m, [&](Index x, Index y) { return op.image_distance(x, y); }, options.delta_ladder);
      for (Index x = 0; x < m.size(); ++x) {
        for (Index y = x + 1; y < m.size(); ++y) {
          global_ratio = std::max(global_ratio, op.image_distance(x, y) / m(x, y));
        }
      }
    }
  }
  for (size_t ri = 0; ri < options.radii.size(); ++ri) {
    net_checks("P1 f(B(0," + fmt(options.radii[ri]) + ")) totally bounded",
               bounded[ri], &r.checks);
  }
  CriterionCheck flat = flatness_check("P2 uniformly locally flat", p2, options.flat_ratio);
  flat.detail += "; Lip(f) on the last truncation " + fmt(global_ratio);
  r.checks.push_back(flat);

  for (const auto& fam : escaping) {
    const LimitVerdict ratio = detect_limit(
        [&](long n) {
          const PairSample s = fam.sample(n);
          return s.df_xy / s.d_xy;
        },
        options.limits);
    const ConditionResult cx = image_converges(fam, 'x', options.limits);
    const ConditionResult cy = image_converges(fam, 'y', options.limits);
    CriterionCheck c;
    c.name = "P3 " + fam.name;
    const Outcome accumulate =
        cx.outcome == Outcome::kPass && cy.outcome == Outcome::kPass ? Outcome::kPass
        : cx.outcome == Outcome::kFail || cy.outcome == Outcome::kFail ? Outcome::kFail
                                                                       : Outcome::kInconclusive;
    const Outcome flat_ratio = vanishes(ratio);
    if (accumulate == Outcome::kPass || flat_ratio == Outcome::kPass) {
      c.outcome = Outcome::kPass;
    } else if (accumulate == Outcome::kFail && flat_ratio == Outcome::kFail) {
      c.outcome = Outcome::kFail;
    }
    c.detail = "images converge: " + to_string(accumulate) + ", ratio -> 0: " + to_string(flat_ratio);
    c.evidence = ratio.evidence;
    r.checks.push_back(std::move(c));

    const LimitVerdict spread = detect_limit([&](long n) { return fam.sample(n).d_xy; }, options.limits);
    if (spread.diverges()) {
      CriterionCheck rad = from_limit("radial flatness " + fam.name, ratio);
      r.checks.push_back(std::move(rad));
    }
  }

  // The Lip version additionally needs f(M) totally bounded.
  std::vector<CriterionCheck> lip;
  net_checks("Lip version: f(M) totally bounded", whole, &lip, false);
  for (auto& c : lip) r.checks.push_back(std::move(c));

  r.outcome = aggregate(r.checks);
  r.verdict = compact_verdict(r.outcome);
  return r;
}

PhiReport check_phi_sufficient(const TruncationFamily& trunc, const FlatnessOptions& options) {
  require_levels(trunc);
  PhiReport out;
  CriterionReport& r = out.report;
  r.criterion_id = "thmA";
  std::vector<NetStats> sizes;
  std::vector<double> flat;
  for (size_t li = 0; li < trunc.levels.size(); ++li) {
    const WeightedMap op = trunc.at(trunc.levels[li]);
    const PointedMetricSpace& m = *op.domain();
    const Index size = m.size();
    const bool real = op.has_real_weights();
    // ||phi(x) - phi(y)|| in F(N) through the norm oracle.
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(size, size);
    NormOptions support_only;
    support_only.scope = LpScope::kSupport;
    for (Index x = 0; x < size; ++x) {
      for (Index y = x + 1; y < size; ++y) {
        FreeElement g(op.codomain());
        g.accumulate(op.f(x), op.w(x));
        g.accumulate(op.f(y), -op.w(y));
        const double v = real ? real_norm_lp(g, support_only) : complex_norm_bracket(g).hi;
        phi(x, y) = phi(y, x) = v;
      }
    }
    sizes.push_back(net_stats(size, [&](long i, long j) { return phi(i, j); }));
    out.ranks.push_back(composition_rank(op));
    out.operator_norms.push_back(operator_norm(op).norm.hi);
    if (li + 1 == trunc.levels.size()) {
      flat = local_ratio_ladder(m, [&](Index x, Index y) { return phi(x, y); },
                                options.delta_ladder);
    }
  }
  net_checks("phi(M) totally bounded", sizes, &r.checks);
  r.checks.push_back(flatness_check("phi uniformly locally flat", flat, options.flat_ratio));

  CriterionCheck rank;
  rank.name = "finite-rank evidence";
  rank.counts = false;
  for (Index k : out.ranks) rank.evidence.push_back(static_cast<double>(k));
  const Index max_rank = *std::max_element(out.ranks.begin(), out.ranks.end());
  const bool stable = out.ranks.back() == out.ranks[out.ranks.size() - 2];
  rank.outcome = stable ? Outcome::kPass : Outcome::kInconclusive;
  rank.detail = "composition matrix rank per level, max " + std::to_string(max_rank) +
                (stable ? ", stable" : ", still changing");
  r.checks.push_back(std::move(rank));

  r.outcome = aggregate(r.checks);
  r.verdict = r.outcome == Outcome::kPass ? "compact (sufficient)"
              : r.outcome == Outcome::kFail ? "sufficient condition not met"
                                            : "inconclusive";
  return out;
}

}  // namespace lipfree
