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

// Dense two-phase tableau simplex.
//
// The core solves the standard form
//
//     minimize c'x  subject to  A x = b,  x >= 0
//
// and the inequality-form wrapper maps
//
//     maximize c'x  subject to  A x <= b   (x free or x >= 0)
//
// onto it. Free-variable problems are solved through their dual
// (minimize b'y, A'y = c, y >= 0), which keeps the tableau short when there are
// many more constraints than variables; the primal point is recovered from the
// simplex multipliers of the final basis.
//
// Pivoting uses the most negative reduced cost and falls back to Bland's rule
// (smallest eligible index, ties in the ratio test broken by smallest basic
// index) once a run of degenerate pivots is seen, which rules out cycling.
// SimplexOptions::bland_only forces Bland's rule throughout.

#ifndef LIPFREE_SIMPLEX_HPP_
#define LIPFREE_SIMPLEX_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace lipfree::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct SimplexOptions {
  double feasibility_tol = 1e-10;
  double pivot_tol = 1e-12;
  bool bland_only = false;
  int degenerate_run_before_bland = 32;
  long max_iterations = 1'000'000;
};

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct Solution {
  Status status = Status::kIterationLimit;
  Scalar value = 0;
  Vector<Scalar> x;            // primal point
  Vector<Scalar> multipliers;  // simplex multipliers of the final basis
  long iterations = 0;
};

namespace internal {

template <typename Scalar>
class Tableau {
 public:
  Tableau(const Matrix<Scalar>& a, const Vector<Scalar>& b,
          const SimplexOptions& options)
      : m_(a.rows()), n_(a.cols()), options_(options) {
    t_.setZero(m_ + 1, n_ + m_ + 1);
    sign_.resize(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      sign_[i] = b(i) < 0 ? Scalar(-1) : Scalar(1);
      t_.row(i).head(n_) = sign_[i] * a.row(i);
      t_(i, n_ + i) = 1;
      t_(i, rhs()) = sign_[i] * b(i);
    }
    basis_.resize(m_);
    for (Eigen::Index i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  // Phase 1: minimize the sum of artificials.
  Status phase_one(long* iterations) {
    t_.row(m_).setZero();
    for (Eigen::Index i = 0; i < m_; ++i) {
      t_.row(m_).head(n_) -= t_.row(i).head(n_);
      t_(m_, rhs()) -= t_(i, rhs());
    }
    const Status s = iterate(/*allow_artificial=*/false, iterations);
    if (s != Status::kOptimal) return s;
    Scalar scale = 1;
    for (Eigen::Index i = 0; i < m_; ++i) {
      scale = std::max<Scalar>(scale, std::abs(t_(i, rhs())));
    }
    if (-t_(m_, rhs()) > options_.feasibility_tol * scale) {
      return Status::kInfeasible;
    }
    // Drive zero-level artificials out of the basis where possible. Rows
    // where that is impossible are redundant; their artificial stays basic at
    // zero and never moves because the row is zero in every real column.
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      Eigen::Index best = -1;
      Scalar best_abs = options_.pivot_tol;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (std::abs(t_(i, j)) > best_abs) {
          best_abs = std::abs(t_(i, j));
          best = j;
        }
      }
      if (best >= 0) pivot(i, best);
    }
    return Status::kOptimal;
  }

  Status phase_two(const Vector<Scalar>& c, long* iterations) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_) = c.transpose();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index k = basis_[i];
      const Scalar ck = k < n_ ? c(k) : Scalar(0);
      if (ck != Scalar(0)) t_.row(m_) -= ck * t_.row(i);
    }
    return iterate(/*allow_artificial=*/false, iterations);
  }

  Scalar objective() const { return -t_(m_, rhs()); }

  Vector<Scalar> point() const {
    Vector<Scalar> x = Vector<Scalar>::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x(basis_[i]) = t_(i, rhs());
    }
    return x;
  }

  // Solves B' pi = c_B against the original (unflipped) constraint matrix.
  Vector<Scalar> multipliers(const Matrix<Scalar>& a,
                             const Vector<Scalar>& c) const {
    Matrix<Scalar> basis_matrix(m_, m_);
    Vector<Scalar> cb(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index k = basis_[i];
      if (k < n_) {
        basis_matrix.col(i) = a.col(k);
        cb(i) = c(k);
      } else {
        basis_matrix.col(i).setZero();
        basis_matrix(k - n_, i) = sign_[k - n_];
        cb(i) = 0;
      }
    }
    return basis_matrix.transpose().fullPivLu().solve(cb);
  }

 private:
  Eigen::Index rhs() const { return n_ + m_; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar p = t_(row, col);
    t_.row(row) /= p;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Scalar factor = t_(i, col);
      if (factor != Scalar(0)) t_.row(i) -= factor * t_.row(row);
    }
    basis_[row] = col;
  }

  Status iterate(bool allow_artificial, long* iterations) {
    const Eigen::Index ncols = allow_artificial ? n_ + m_ : n_;
    const Scalar tol = options_.feasibility_tol;
    int degenerate_run = 0;
    bool bland = options_.bland_only;
    while (true) {
      if (*iterations >= options_.max_iterations) return Status::kIterationLimit;
      Eigen::Index enter = -1;
      if (bland) {
        for (Eigen::Index j = 0; j < ncols; ++j) {
          if (t_(m_, j) < -tol) {
            enter = j;
            break;
          }
        }
      } else {
        Scalar most = -tol;
        for (Eigen::Index j = 0; j < ncols; ++j) {
          if (t_(m_, j) < most) {
            most = t_(m_, j);
            enter = j;
          }
        }
      }
      if (enter < 0) return Status::kOptimal;

      Eigen::Index leave = -1;
      Scalar best_ratio = std::numeric_limits<Scalar>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        const Scalar a = t_(i, enter);
        if (a <= options_.pivot_tol) continue;
        const Scalar ratio = std::max<Scalar>(t_(i, rhs()), 0) / a;
        if (ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return Status::kUnbounded;

      if (best_ratio == Scalar(0)) {
        if (++degenerate_run >= options_.degenerate_run_before_bland) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      ++*iterations;
    }
  }

  Eigen::Index m_;
  Eigen::Index n_;
  SimplexOptions options_;
  Matrix<Scalar> t_;
  std::vector<Scalar> sign_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace internal

// minimize c'x subject to A x = b, x >= 0.
template <typename Scalar>
Solution<Scalar> solve_standard_form(const Matrix<Scalar>& a,
                                     const Vector<Scalar>& b,
                                     const Vector<Scalar>& c,
                                     const SimplexOptions& options = {}) {
  Solution<Scalar> sol;
  internal::Tableau<Scalar> tableau(a, b, options);
  sol.status = tableau.phase_one(&sol.iterations);
  if (sol.status != Status::kOptimal) return sol;
  sol.status = tableau.phase_two(c, &sol.iterations);
  if (sol.status != Status::kOptimal) return sol;
  sol.value = tableau.objective();
  sol.x = tableau.point();
  sol.multipliers = tableau.multipliers(a, c);
  return sol;
}

// maximize c'x subject to A x <= b, with x free or x >= 0.
template <typename Scalar>
struct InequalityProblem {
  Matrix<Scalar> a;
  Vector<Scalar> b;
  Vector<Scalar> c;
  bool free_variables = true;
};

template <typename Scalar>
Solution<Scalar> maximize(const InequalityProblem<Scalar>& problem,
                          const SimplexOptions& options = {}) {
  const auto& a = problem.a;
  if (problem.free_variables) {
    // Dual: minimize b'y subject to A'y = c, y >= 0.
    Matrix<Scalar> at = a.transpose();
    Solution<Scalar> dual = solve_standard_form<Scalar>(at, problem.c, problem.b, options);
    Solution<Scalar> sol;
    sol.iterations = dual.iterations;
    switch (dual.status) {
      case Status::kOptimal:
        sol.status = Status::kOptimal;
        sol.value = dual.value;
        sol.x = dual.multipliers;
        sol.multipliers = dual.x;
        break;
      // An infeasible dual means the primal is unbounded or infeasible; every
      // problem built in this library has a feasible primal.
      case Status::kInfeasible: sol.status = Status::kUnbounded; break;
      case Status::kUnbounded: sol.status = Status::kInfeasible; break;
      default: sol.status = dual.status; break;
    }
    return sol;
  }
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  Matrix<Scalar> std_a(m, n + m);
  std_a << a, Matrix<Scalar>::Identity(m, m);
  Vector<Scalar> std_c = Vector<Scalar>::Zero(n + m);
  std_c.head(n) = -problem.c;
  Solution<Scalar> s = solve_standard_form<Scalar>(std_a, problem.b, std_c, options);
  if (s.status == Status::kOptimal) {
    s.value = -s.value;
    s.x = s.x.head(n).eval();
    s.multipliers = (-s.multipliers).eval();
  }
  return s;
}

}  // namespace lipfree::lp

#endif  // LIPFREE_SIMPLEX_HPP_
