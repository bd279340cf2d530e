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

// Compactness criteria evaluated on parametrized families. Two kinds of input:
//
//  * PairSequenceFamily: closed-form n -> (x_n, y_n) data, sampled on a limit
//    ladder. Used by the sequential case analysis and the sigma/tau check.
//  * TruncationFamily: level -> finite WeightedMap, a growing sequence of
//    finite pieces of an infinite operator. Used where total boundedness or
//    local flatness has to be probed (greedy epsilon-nets, delta ladders).
//
// Everything here is numerical evidence and says so (heuristic = true).

#ifndef LIPFREE_ASYMPTOTICS_HPP_
#define LIPFREE_ASYMPTOTICS_HPP_

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lipfree/limits.hpp"
#include "lipfree/weighted_operator.hpp"

namespace lipfree {

struct PairSample {
  double d_xy = 0;   // d(x_n, y_n)
  double df_x0 = 0;  // d(f(x_n), 0)
  double df_y0 = 0;  // d(f(y_n), 0)
  double df_xy = 0;  // d(f(x_n), f(y_n))
  Complex w_x = 0;
  Complex w_y = 0;
};

struct PairSequenceFamily {
  std::string name;
  std::function<PairSample(long)> sample;
  // Optional d(f(x_n), f(x_m)) and d(f(y_n), f(y_m)), used as Cauchy proxies
  // for convergence of the image sequences.
  std::function<double(long, long)> fx_cross;
  std::function<double(long, long)> fy_cross;
  // Optional d(x_n, 0) and d(y_n, 0).
  std::function<double(long)> dx0;
  std::function<double(long)> dy0;
};

enum class Outcome { kPass, kFail, kInconclusive };
std::string to_string(Outcome o);

// Pass iff the verdict is ConvergesTo(0); fail on a nonzero limit or
// divergence.
Outcome vanishes(const LimitVerdict& v);

struct ConditionResult {
  std::string name;
  Outcome outcome = Outcome::kInconclusive;
  LimitVerdict verdict;
};

struct CaseBranch {
  std::string name;
  std::vector<ConditionResult> conditions;
  Outcome outcome = Outcome::kInconclusive;  // pass iff every condition passes
};

enum class LimitClass { kZero, kNonzero, kInfinite, kUnknown };
std::string to_string(LimitClass c);

struct CaseReport {
  LimitVerdict a;     // a_n = w(x_n) / d(x_n, y_n)
  LimitVerdict b;     // b_n = w(y_n) / d(x_n, y_n)
  LimitVerdict diff;  // a_n - b_n
  LimitClass a_class = LimitClass::kUnknown;
  LimitClass b_class = LimitClass::kUnknown;
  LimitClass diff_class = LimitClass::kUnknown;

  // "1", "2", "2'", "3", "4", "4'", "5"; "refused" when a limit is
  // inconclusive, "uncovered" for a_n -> 0 with |b_n| -> inf or the mirror.
  std::string label = "refused";
  int theorem_case = 0;   // 1..5, 0 when refused or uncovered
  bool mirrored = false;  // the "resp." form, roles of x_n and y_n swapped
  std::string criterion_id;

  LimitVerdict a_stat;     // A(x_n, y_n)
  LimitVerdict b_xy_stat;  // B(x_n, y_n)
  LimitVerdict b_yx_stat;  // B(y_n, x_n)
  LimitVerdict sigma_stat;
  LimitVerdict tau_stat;

  // The theorem's alternatives for the governing case; the case holds when
  // some branch passes.
  std::vector<CaseBranch> branches;
  Outcome outcome = Outcome::kInconclusive;
  bool heuristic = true;
};

// Classification is refused (label "refused") when a_n or b_n, or a_n - b_n in
// the |a|,|b| -> inf regime, has no conclusive limit. Only non-refused reports
// carry branches.
CaseReport classify_appendix_case(const PairSequenceFamily& fam,
                                  const LimitOptions& options = {});

// Convergence of f(x_n) (which = 'x') or f(y_n) ('y'): pass if d(f(.), 0) -> 0,
// otherwise by the cross-distance Cauchy proxy d(f(z_n), f(z_2n)) -> 0 when the
// family provides it, otherwise inconclusive.
ConditionResult image_converges(const PairSequenceFamily& fam, char which,
                                const LimitOptions& options);

// ---------------------------------------------------------------------------
// Backward shift example: M = {0} u N, d(n, m) = d_n + d_m, d(n, 0) = d_n,
// d_n = n^-alpha, f(n) = n - 1, w(n) = n^-beta. Through psi(delta(n)) =
// d_n e_n the operator becomes T e_n = (n / (n-1))^alpha n^-beta e_{n-1}.

struct ShiftExample {
  double alpha = 1;
  double beta = 1;

  double d(long n) const;                  // d_n, with d_0 = 0
  double dist(long n, long m) const;       // the metric on M
  double w(long n) const;                  // 0 at n = 0
  double shift_weight(long n) const;       // T e_n = shift_weight(n) e_{n-1}
};

// Space {0, 1, ..., nmax} with the shift metric, the map f and the weight w.
WeightedMap shift_truncation(const ShiftExample& ex, long nmax);

struct ShiftReport {
  Eigen::MatrixXd matrix;  // (nmax+1) x (nmax+1), T(n-1, n); row/col 0 = base
  LimitVerdict tail;       // shift_weight(n) as n -> inf
  bool compact = false;
  std::string verdict;     // "compact", "not compact", "inconclusive"
  std::vector<double> column_norms;    // l1 norms, index n
  std::vector<double> molecule_norms;  // ||wf^(delta(n) / d_n)|| in F(M_nmax)
  double psi_defect = 0;       // max |column_norms - molecule_norms|
  long psi_checked = 0;        // columns compared
  double operator_norm = 0;    // operator_norm(shift_truncation)
  double max_column_norm = 0;
  bool heuristic = true;
};

struct ShiftOptions {
  long psi_limit = 64;  // compare columns n <= psi_limit
  LimitOptions limits;
};

// Throws InputError if nmax < 2, alpha <= 0 or beta < 0.
ShiftReport shift_operator_matrix(const ShiftExample& ex, long nmax,
                                  const ShiftOptions& options = {});

// ---------------------------------------------------------------------------
// Truncation-based checks.

struct TruncationFamily {
  std::string name;
  std::function<WeightedMap(int)> at;
  std::vector<int> levels = {1, 2, 3, 4};
};

struct CriterionCheck {
  std::string name;
  Outcome outcome = Outcome::kInconclusive;
  std::string detail;
  std::vector<double> evidence;
  bool counts = true;  // false: reported alongside, not part of the verdict
};

struct CriterionReport {
  std::string criterion_id;
  Outcome outcome = Outcome::kInconclusive;
  std::string verdict;
  std::vector<CriterionCheck> checks;
  bool heuristic = true;
};

inline const std::vector<double> kEpsilonGrid = {1.0, 0.1, 0.01};

// Greedy epsilon-net: scan points in order, open a new centre whenever the
// point is at distance >= eps from every centre. Returns the number of centres.
long greedy_net_size(long count, const std::function<double(long, long)>& dist,
                     double eps);

// Net sizes over levels grow when the last level's size is at least
// growth_factor times the previous one (and larger by more than one point).
bool net_growth(const std::vector<long>& sizes, double growth_factor = 1.5);

// Theorem on sigma/tau: for families in the regime d(f(x_n), f(y_n)) -> 0,
// sigma must vanish; for families with min(d(f(x_n),0), d(f(y_n),0)) -> 0, tau
// must vanish. Families in neither regime are reported and skipped.
CriterionReport check_caraccompact(const std::vector<PairSequenceFamily>& families,
                                   const LimitOptions& options = {});

struct PointSample {
  Complex w = 0;
  double df0 = 0;  // d(f(x_n), 0)
};

struct PointSequenceFamily {
  std::string name;
  std::function<PointSample(long)> sample;
};

struct UdbOptions {
  double theta = 0;     // declared uniform discreteness bound
  double diameter = std::numeric_limits<double>::infinity();
  std::vector<double> alpha_grid = {0.01, 0.1, 1.0};
  LimitOptions limits;
};

// Uniformly discrete bounded domains: (i) f({|w| > alpha}) totally bounded,
// (ii) w(x_n) d(f(x_n), 0) -> 0 along the supplied families where w -> 0 or
// |w| -> inf. Throws InputError unless theta > 0 and the diameter is finite.
CriterionReport check_udb(const TruncationFamily& trunc,
                          const std::vector<PointSequenceFamily>& extremes,
                          const UdbOptions& options);

struct FlatnessOptions {
  std::vector<double> delta_ladder = {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125};
  std::vector<double> radii = {1.0, 10.0, 100.0};  // bounded sets for P1
  double flat_ratio = 0.75;  // sup-ratio must shrink at least this fast
  LimitOptions limits;
};

// delta -> sup { ratio(x, y) : 0 < d(x, y) < delta } on one finite map.
// Entries are -1 where no pair is closer than delta.
std::vector<double> local_ratio_ladder(
    const PointedMetricSpace& m, const std::function<double(Index, Index)>& image_dist,
    const std::vector<double>& deltas);

// Verdict of a delta ladder: pass if the last populated sup is ~0 or the sups
// shrink geometrically; fail if they stay above half of the first one.
CriterionCheck flatness_check(const std::string& name, const std::vector<double>& sups,
                              double flat_ratio);

// w = 1 maps: P1 (bounded sets have totally bounded images), P2 (uniform local
// flatness), P3 on escaping pair families, radial flatness on families with
// d(x_n, y_n) -> inf, and total boundedness of f(M) for the Lip version.
// Throws InputError if some truncation has a weight other than 1.
CriterionReport check_w1_compact(const TruncationFamily& trunc,
                                 const std::vector<PairSequenceFamily>& escaping = {},
                                 const FlatnessOptions& options = {});

// phi(x) = w(x) delta(f(x)) in F(N): phi(M) totally bounded and phi uniformly
// locally flat imply compactness. Never reports "not compact"; the negative
// verdict is "sufficient condition not met". Reports composition_matrix ranks
// per level as finite-rank evidence.
struct PhiReport {
  CriterionReport report;
  std::vector<Index> ranks;
  std::vector<double> operator_norms;
};

PhiReport check_phi_sufficient(const TruncationFamily& trunc,
                               const FlatnessOptions& options = {});

}  // namespace lipfree

#endif  // LIPFREE_ASYMPTOTICS_HPP_
