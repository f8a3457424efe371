"""Brute-force validation oracles for the certificate formulas.

These never consult the girth or the cycle enumeration: the nullspace
constant is evaluated by linear programming over the nullspace
intersected with the l1 ball, and extreme points of that polytope are
enumerated geometrically (halfspace intersection in nullspace
coordinates).  They exist to cross-check the formula-based certificates
and are enforced to desk scale.
"""

from __future__ import annotations

import itertools

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import linprog
from scipy.spatial import HalfspaceIntersection

from .l1 import SizeLimitExceeded


def oracle_nullspace_constant(A: np.ndarray, s: int) -> float:
    """Exact max of ||eta_S||_1 over |S| <= s and eta in
    nullsp(A) intersected with the unit l1 ball.

    One LP per (support, sign pattern): maximize sigma' eta_S subject to
    A eta = 0 and ||eta||_1 <= 1 (split variables).  The objective is
    monotone in S, so only supports of size exactly min(s, n) are
    scanned, and the ball's symmetry halves the sign patterns.
    """
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    if n > 25 or s > 6:
        raise SizeLimitExceeded("nullspace-constant oracle limited to n <= 25 and s <= 6")
    if s <= 0:
        return 0.0
    size = min(s, n)
    Aeq = np.hstack([A, -A])
    ball = np.ones((1, 2 * n))
    best = 0.0
    for support in itertools.combinations(range(n), size):
        for signs in itertools.product((1.0, -1.0), repeat=size - 1):
            sigma = (1.0,) + signs
            c = np.zeros(2 * n)
            for j, sg in zip(support, sigma):
                c[j] = -sg
                c[n + j] = sg
            res = linprog(
                c,
                A_ub=ball,
                b_ub=[1.0],
                A_eq=Aeq,
                b_eq=np.zeros(m),
                bounds=(0, None),
                method="highs",
            )
            if not res.success:
                raise RuntimeError(f"oracle LP failed: {res.message}")
            best = max(best, -res.fun)
    return best


def nullspace_ball_extreme_points(A: np.ndarray, zero_tol: float = 1e-9) -> list[np.ndarray]:
    """All extreme points of nullsp(A) intersected with the unit l1 ball.

    Works in nullspace coordinates eta = N c: the polytope becomes
    {c : sigma' N c <= 1 for all sign vectors sigma}, which is
    full-dimensional with 0 interior, so its vertices come straight from
    a halfspace intersection.  The origin-only case returns [].
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[1]
    N = null_space(A)
    d = N.shape[1]
    if d == 0:
        return []
    if d == 1:
        v = N[:, 0] / np.abs(N[:, 0]).sum()
        return [v, -v]
    rows = []
    for sigma in itertools.product((1.0, -1.0), repeat=n):
        rows.append(np.concatenate([np.asarray(sigma) @ N, [-1.0]]))
    hs = HalfspaceIntersection(np.asarray(rows), np.zeros(d))
    points = []
    seen = set()
    for c in hs.intersections:
        eta = N @ c
        key = tuple(np.round(eta / zero_tol).astype(np.int64))
        if key not in seen:
            seen.add(key)
            points.append(eta)
    return points


def oracle_extreme_point_sparsity(
    A: np.ndarray, zero_tol: float = 1e-9
) -> tuple[int, list[np.ndarray]]:
    """Max support size over the extreme points of nullsp(A) cap B1,
    together with the extreme points themselves (0 for a trivial
    nullspace)."""
    A = np.asarray(A, dtype=float)
    if A.shape[1] > 20:
        raise SizeLimitExceeded("extreme-point oracle limited to n <= 20")
    points = nullspace_ball_extreme_points(A, zero_tol=zero_tol)
    max_support = max((int((np.abs(p) > zero_tol).sum()) for p in points), default=0)
    return max_support, points
