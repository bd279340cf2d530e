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

// Numerical limit detection on an index ladder. None of this proves anything;
// every verdict is flagged heuristic and carries the sampled tail.
//
// Rules, applied in order to the values v_k = s(n_k):
//   oscillation   s(n) and s(n+1) disagree at the top of the ladder
//   zero tail     the last three |v_k| are below zero_tol
//   plain         the last three v_k agree within rtol
//   divergence    |v_k| increases over the last four points and either
//                 exceeds divergence_threshold or its increments do not shrink
//   extrapolated  the difference ratios dv_k / dv_{k-1} settle on a value
//                 rho with |rho| < 1 and two successive Aitken-type estimates
//                 v_k + dv_k rho / (1 - rho) agree within rtol

#ifndef LIPFREE_LIMITS_HPP_
#define LIPFREE_LIMITS_HPP_

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace lipfree {

enum class LimitTag { kConvergesTo, kDivergesToInfinity, kInconclusive };

std::string to_string(LimitTag tag);

struct LimitVerdict {
  LimitTag tag = LimitTag::kInconclusive;
  std::complex<double> value = 0;  // meaningful for kConvergesTo
  std::string rule;                // which rule fired
  bool heuristic = true;
  std::vector<long> ladder;
  std::vector<double> evidence;    // |s(n)| on the ladder (real part for real s)

  bool converges() const { return tag == LimitTag::kConvergesTo; }
  bool diverges() const { return tag == LimitTag::kDivergesToInfinity; }
  bool converges_to_zero() const { return converges() && value == 0.0; }
};

struct LimitOptions {
  std::vector<long> ladder;  // empty: 2^4 .. 2^20
  double rtol = 1e-4;
  double zero_tol = 1e-12;
  double divergence_threshold = 1e8;
  double oscillation_rtol = 1e-2;
  bool check_neighbours = true;
};

std::vector<long> default_ladder();
std::vector<long> power_ladder(int lo_exponent, int hi_exponent);

using RealSequence = std::function<double(long)>;
using ComplexSequence = std::function<std::complex<double>(long)>;

// Throws InputError if the ladder is not strictly increasing with at least six
// points, or if the sequence produces NaN.
LimitVerdict detect_limit(const RealSequence& s, const LimitOptions& options = {});

// Converges iff real and imaginary parts both converge; diverges iff |s|
// diverges.
LimitVerdict detect_limit_complex(const ComplexSequence& s,
                                  const LimitOptions& options = {});

}  // namespace lipfree

#endif  // LIPFREE_LIMITS_HPP_
