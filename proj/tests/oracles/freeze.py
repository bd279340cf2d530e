# Copyright 2026 The lipfree Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Regenerates the frozen values in tests/test_frozen.cpp with independent
# solvers: scipy's HiGHS for the real Kantorovich LP, cvxpy (SOC) for the
# exact complex norm. Not needed for the build.

import itertools
import math

import cvxpy as cp
import numpy as np
from scipy.optimize import linprog

P = {"0": (0, 0), "a": (1, 0), "b": (0, 2), "c": (3, 1), "d": (1.5, -2)}
Q = {"0": (0, 0), "u": (2, 0), "v": (0, 1), "t": (1, 1)}


def dist(space):
    names = list(space)
    return names, np.array([[math.dist(space[p], space[q]) for q in names] for p in names])


def real_norm(names, d, coeffs):
    # max sum a_i g_i, g(0) = 0, |g_i - g_j| <= d_ij
    n = len(names)
    c = -np.array([coeffs.get(p, 0.0) for p in names])
    a_ub, b_ub = [], []
    for i, j in itertools.permutations(range(n), 2):
        row = np.zeros(n)
        row[i], row[j] = 1, -1
        a_ub.append(row)
        b_ub.append(d[i, j])
    bounds = [(0, 0) if p == "0" else (None, None) for p in names]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    return -res.fun


def complex_norm(names, d, coeffs):
    n = len(names)
    g = cp.Variable(n, complex=True)
    a = np.array([coeffs.get(p, 0.0) for p in names], dtype=complex)
    cons = [g[names.index("0")] == 0]
    for i, j in itertools.combinations(range(n), 2):
        cons.append(cp.abs(g[i] - g[j]) <= d[i, j])
    prob = cp.Problem(cp.Maximize(cp.real(a @ g)), cons)
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-10, tol_gap_rel=1e-10, tol_feas=1e-10)
    return prob.value


pn, pd = dist(P)
qn, qd = dist(Q)
elements = {
    "g1": {"a": 2.0, "b": -1.0, "c": 0.5, "d": -1.5},
    "g2": {"a": 1.0, "c": -1.0},
    "g3": {"a": 1.0, "b": 1.0, "c": 1.0, "d": 1.0},
}
for k, v in elements.items():
    print(k, "%.12g" % real_norm(pn, pd, v))

complexes = {
    "h1": {"a": 1 + 1j, "b": 2 - 1j, "c": -1.0},
    "h2": {"a": 1j, "b": -1.0},
    "h3": {"a": 1.0, "b": 1j, "c": -1.0, "d": -1j},
}
for k, v in complexes.items():
    print(k, "%.12g" % complex_norm(pn, pd, v))

# Weighted map P -> Q: norm = max over molecules of ||w(x) delta(f x) - w(y) delta(f y)|| / d(x,y).
f = {"0": "0", "a": "u", "b": "v", "c": "t", "d": "u"}
w = {"0": 0.0, "a": 1.0, "b": -2.0, "c": 0.5, "d": 1.5}
best = 0.0
for x, y in itertools.combinations(pn, 2):
    img = {}
    for p, s in ((x, 1.0), (y, -1.0)):
        if f[p] != "0":
            img[f[p]] = img.get(f[p], 0.0) + s * w[p]
    best = max(best, real_norm(qn, qd, img) / pd[pn.index(x), pn.index(y)])
print("opnorm", "%.12g" % best)
