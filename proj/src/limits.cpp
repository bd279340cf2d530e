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

#include "lipfree/limits.hpp"

#include <algorithm>
#include <cmath>

#include "lipfree/metric_space.hpp"

namespace lipfree {
namespace {

// Ratio agreement needed before extrapolating, and the largest |rho| trusted.
constexpr double kRatioTol = 0.05;
constexpr double kMaxRatio = 0.95;

struct Samples {
  std::vector<double> v;
  std::vector<double> next;  // s(n + 1), empty when neighbours are off
};

const std::vector<long>& ladder_of(const LimitOptions& o, std::vector<long>* storage) {
  if (!o.ladder.empty()) return o.ladder;
  *storage = default_ladder();
  return *storage;
}

void check_ladder(const std::vector<long>& ladder) {
  if (ladder.size() < 6) throw InputError("limit ladder needs at least six points");
  for (size_t i = 1; i < ladder.size(); ++i) {
    if (ladder[i] <= ladder[i - 1]) throw InputError("limit ladder must be strictly increasing");
  }
}

// Delta-squared transform, two entries shorter; pairs with a vanishing second
// difference are dropped.
std::vector<double> aitken(const std::vector<double>& v) {
  std::vector<double> out;
  for (size_t i = 2; i < v.size(); ++i) {
    const double d1 = v[i] - v[i - 1];
    const double d0 = v[i - 1] - v[i - 2];
    if (d1 - d0 == 0) continue;
    out.push_back(v[i] - d1 * d1 / (d1 - d0));
  }
  return out;
}

// Geometric tail test on the last four values: the two ratios of successive
// differences agree and stay below kMaxRatio, and the two extrapolated limits
// agree within rtol against max(|limit|, scale).
bool aitken_agrees(const std::vector<double>& v, double scale, double rtol, double* limit) {
  const size_t k = v.size() - 1;
  const double d0 = v[k] - v[k - 1];
  const double d1 = v[k - 1] - v[k - 2];
  const double d2 = v[k - 2] - v[k - 3];
  if (d1 == 0 || d2 == 0) return false;
  const double rho0 = d0 / d1;
  const double rho1 = d1 / d2;
  if (std::abs(rho0 - rho1) > kRatioTol || std::abs(rho0) > kMaxRatio ||
      std::abs(rho1) > kMaxRatio) {
    return false;
  }
  const double l0 = v[k] + d0 * rho0 / (1 - rho0);
  const double l1 = v[k - 1] + d1 * rho1 / (1 - rho1);
  if (std::abs(l0 - l1) > rtol * std::max(std::abs(l0), scale)) return false;
  *limit = l0;
  return true;
}

double checked(double x, long n) {
  if (std::isnan(x)) {
    throw InputError("sequence evaluates to NaN at n = " + std::to_string(n));
  }
  return x;
}

LimitVerdict analyse(const Samples& s, const LimitOptions& o) {
  LimitVerdict r;
  const std::vector<double>& v = s.v;
  const size_t k = v.size() - 1;
  auto tail_max = [&](size_t count) {
    double m = 0;
    for (size_t i = k + 1 - count; i <= k; ++i) m = std::max(m, std::abs(v[i]));
    return m;
  };

  if (!s.next.empty()) {
    for (size_t i = k - 2; i <= k; ++i) {
      const double scale = std::max(std::abs(v[i]), std::abs(s.next[i]));
      if (std::isinf(scale)) continue;
      if (scale > o.zero_tol && std::abs(v[i] - s.next[i]) > o.oscillation_rtol * scale) {
        r.rule = "oscillation";
        return r;
      }
    }
  }

  if (tail_max(3) <= o.zero_tol) {
    r.tag = LimitTag::kConvergesTo;
    r.value = 0.0;
    r.rule = "zero-tail";
    return r;
  }

  const double scale3 = tail_max(3);
  if (std::isfinite(scale3) && std::abs(v[k] - v[k - 1]) <= o.rtol * scale3 &&
      std::abs(v[k - 1] - v[k - 2]) <= o.rtol * scale3) {
    r.tag = LimitTag::kConvergesTo;
    r.value = v[k];
    r.rule = "plain";
    return r;
  }

  {
    bool increasing = true;
    for (size_t i = k - 2; i <= k; ++i) {
      if (!(std::abs(v[i]) > std::abs(v[i - 1]))) increasing = false;
    }
    if (increasing) {
      const double d1 = std::abs(v[k]) - std::abs(v[k - 1]);
      const double d2 = std::abs(v[k - 1]) - std::abs(v[k - 2]);
      const double d3 = std::abs(v[k - 2]) - std::abs(v[k - 3]);
      const bool not_shrinking = d1 >= d2 * (1 - 1e-9) && d2 >= d3 * (1 - 1e-9);
      if (std::abs(v[k]) >= o.divergence_threshold || not_shrinking) {
        r.tag = LimitTag::kDivergesToInfinity;
        r.rule = std::abs(v[k]) >= o.divergence_threshold ? "threshold" : "growth";
        return r;
      }
    }
  }

  // Aitken on the last four values; if the estimates disagree, once more on
  // the Aitken sequence itself, which removes the next correction term.
  if (std::isfinite(scale3)) {
    std::vector<double> level = v;
    for (int depth = 0; depth < 2 && level.size() >= 4; ++depth) {
      double limit = 0;
      if (aitken_agrees(level, scale3, o.rtol, &limit)) {
        r.tag = LimitTag::kConvergesTo;
        r.value = std::abs(limit) <= o.rtol * scale3 ? 0.0 : limit;
        r.rule = depth == 0 ? "extrapolated" : "extrapolated-2";
        return r;
      }
      level = aitken(level);
    }
  }

  r.rule = "none";
  return r;
}

}  // namespace

std::string to_string(LimitTag tag) {
  switch (tag) {
    case LimitTag::kConvergesTo: return "converges";
    case LimitTag::kDivergesToInfinity: return "diverges";
    case LimitTag::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<long> power_ladder(int lo_exponent, int hi_exponent) {
  std::vector<long> l;
  for (int e = lo_exponent; e <= hi_exponent; ++e) l.push_back(1L << e);
  return l;
}

std::vector<long> default_ladder() { return power_ladder(4, 20); }

LimitVerdict detect_limit(const RealSequence& seq, const LimitOptions& options) {
  std::vector<long> storage;
  const std::vector<long>& ladder = ladder_of(options, &storage);
  check_ladder(ladder);
  Samples s;
  for (long n : ladder) {
    s.v.push_back(checked(seq(n), n));
    if (options.check_neighbours) s.next.push_back(checked(seq(n + 1), n + 1));
  }
  LimitVerdict r = analyse(s, options);
  r.ladder = ladder;
  r.evidence = s.v;
  return r;
}

LimitVerdict detect_limit_complex(const ComplexSequence& seq, const LimitOptions& options) {
  std::vector<long> storage;
  const std::vector<long>& ladder = ladder_of(options, &storage);
  check_ladder(ladder);
  Samples re, im, mod;
  for (long n : ladder) {
    const std::complex<double> z = seq(n);
    re.v.push_back(checked(z.real(), n));
    im.v.push_back(checked(z.imag(), n));
    mod.v.push_back(std::abs(z));
    if (options.check_neighbours) {
      const std::complex<double> z1 = seq(n + 1);
      re.next.push_back(checked(z1.real(), n + 1));
      im.next.push_back(checked(z1.imag(), n + 1));
      mod.next.push_back(std::abs(z1));
    }
  }
  LimitVerdict r = analyse(mod, options);
  if (!r.diverges()) {
    const LimitVerdict vr = analyse(re, options);
    const LimitVerdict vi = analyse(im, options);
    if (vr.converges() && vi.converges()) {
      r.tag = LimitTag::kConvergesTo;
      r.value = {vr.value.real(), vi.value.real()};
      r.rule = vr.rule + "/" + vi.rule;
    } else {
      r.tag = LimitTag::kInconclusive;
      r.value = 0.0;
      r.rule = vr.converges() ? "imaginary-part:" + vi.rule : "real-part:" + vr.rule;
    }
  }
  r.ladder = ladder;
  r.evidence = mod.v;
  return r;
}

}  // namespace lipfree
