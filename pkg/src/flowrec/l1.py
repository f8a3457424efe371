"""Equality-constrained l1-minimization (basis pursuit) via linear
programming, plus a desk-scale brute-force l0 oracle.

The split formulation min 1'(u + v) s.t. A(u - v) = y, u, v >= 0 is
solved with Clarabel's interior-point method by default.  An interior
point is deliberate: when the optimal face is not a singleton the solver
lands in its relative interior rather than on a vertex, so a non-unique
optimum is never mistaken for exact recovery.  A dual-simplex engine
(SciPy/HiGHS) is available as an independent cross-check.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import clarabel
import numpy as np
from scipy import sparse
from scipy.optimize import linprog

FEASIBILITY_RTOL = 1e-8


class InfeasibleError(ValueError):
    """The measurement vector is not in the column space of A."""


class SizeLimitExceeded(ValueError):
    """Problem exceeds the enforced desk-scale bounds of an oracle."""


class SolveStatus(enum.Enum):
    OPTIMAL = "optimal"
    NUMERICAL_FAILURE = "numerical_failure"


@dataclass(frozen=True)
class BasisPursuitProblem:
    """min ||x||_1 subject to A x = y.

    Feasibility (y in the column space of A) is validated on
    construction via the least-squares residual.
    """

    A: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if A.ndim != 2 or y.ndim != 1 or A.shape[0] != y.shape[0]:
            raise ValueError("A must be m-by-n and y length m")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "y", y)
        sol, *_ = np.linalg.lstsq(A, y, rcond=None)
        residual = np.linalg.norm(A @ sol - y)
        if residual > FEASIBILITY_RTOL * (1.0 + np.linalg.norm(y)):
            raise InfeasibleError(
                f"y is not in the column space of A (residual {residual:.3e})"
            )


@dataclass(frozen=True)
class LpSolution:
    x: np.ndarray
    objective: float
    status: SolveStatus
    iterations: int
    dual: np.ndarray | None

    @property
    def optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL


def _solve_clarabel(A: np.ndarray, y: np.ndarray) -> LpSolution:
    m, n = A.shape
    P = sparse.csc_matrix((2 * n, 2 * n))
    q = np.ones(2 * n)
    Aeq = sparse.csc_matrix(np.hstack([A, -A]))
    G = -sparse.identity(2 * n, format="csc")
    Acon = sparse.vstack([Aeq, G], format="csc")
    b = np.concatenate([y, np.zeros(2 * n)])
    cones = [clarabel.ZeroConeT(m), clarabel.NonnegativeConeT(2 * n)]
    settings = clarabel.DefaultSettings()
    settings.verbose = False
    settings.tol_feas = 1e-10
    settings.tol_gap_abs = 1e-10
    settings.tol_gap_rel = 1e-10
    solver = clarabel.DefaultSolver(P, q, Acon, b, cones, settings)
    sol = solver.solve()
    z = np.asarray(sol.x)
    x = z[:n] - z[n:]
    ok = str(sol.status) in ("Solved", "SolverStatus.Solved", "AlmostSolved")
    status = SolveStatus.OPTIMAL if ok else SolveStatus.NUMERICAL_FAILURE
    # Equality multipliers; negated so that dual' y equals the objective.
    dual = -np.asarray(sol.z)[:m] if ok else None
    return LpSolution(
        x=x,
        objective=float(np.abs(x).sum()),
        status=status,
        iterations=int(sol.iterations),
        dual=dual,
    )


def _solve_highs(A: np.ndarray, y: np.ndarray) -> LpSolution:
    m, n = A.shape
    c = np.ones(2 * n)
    Aeq = np.hstack([A, -A])
    res = linprog(c, A_eq=Aeq, b_eq=y, bounds=(0, None), method="highs")
    if not res.success:
        return LpSolution(
            x=np.zeros(n),
            objective=float("nan"),
            status=SolveStatus.NUMERICAL_FAILURE,
            iterations=int(getattr(res, "nit", 0)),
            dual=None,
        )
    x = res.x[:n] - res.x[n:]
    return LpSolution(
        x=x,
        objective=float(np.abs(x).sum()),
        status=SolveStatus.OPTIMAL,
        iterations=int(res.nit),
        dual=np.asarray(res.eqlin.marginals),
    )


_ENGINES = {"interior-point": _solve_clarabel, "simplex": _solve_highs}


def solve_basis_pursuit(
    problem: BasisPursuitProblem, engine: str = "interior-point"
) -> LpSolution:
    """Solve the basis-pursuit LP; see module docstring for engines.

    The returned solution satisfies ||A x - y||_inf <= 1e-8 (1 + ||y||_inf)
    whenever the status is optimal.
    """
    try:
        solve = _ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {sorted(_ENGINES)}") from None
    sol = solve(problem.A, problem.y)
    if sol.optimal:
        resid = np.abs(problem.A @ sol.x - problem.y).max(initial=0.0)
        if resid > 1e-8 * (1.0 + np.abs(problem.y).max(initial=0.0)):
            sol = LpSolution(
                x=sol.x,
                objective=sol.objective,
                status=SolveStatus.NUMERICAL_FAILURE,
                iterations=sol.iterations,
                dual=None,
            )
    return sol


def check_dual_certificate(problem: BasisPursuitProblem, sol: LpSolution, tol: float = 1e-7) -> bool:
    """LP strong duality check: ||A' lam||_inf <= 1 + tol and
    lam' y = ||x||_1 within tol."""
    if sol.dual is None:
        return False
    lam = sol.dual
    if np.abs(problem.A.T @ lam).max(initial=0.0) > 1.0 + tol:
        return False
    return abs(lam @ problem.y - sol.objective) <= tol * (1.0 + abs(sol.objective))


def oracle_l0_min(
    problem: BasisPursuitProblem, max_support: int, tol: float = 1e-8
) -> np.ndarray | None:
    """Sparsest exact solution of A x = y by exhaustive support search.

    Tries all supports of size 0..max_support in order; within a size,
    any exact least-squares fit is accepted, so the returned solution is
    *a* sparsest one (unique only when the spark condition holds).
    Returns None when no support up to the size limit fits.
    """
    m, n = problem.A.shape
    if n > 20 or max_support > 5:
        raise SizeLimitExceeded("l0 oracle limited to n <= 20 and max_support <= 5")
    scale = tol * (1.0 + np.linalg.norm(problem.y))
    if np.linalg.norm(problem.y) <= scale:
        return np.zeros(n)
    for size in range(1, max_support + 1):
        for support in itertools.combinations(range(n), size):
            cols = problem.A[:, support]
            coef, *_ = np.linalg.lstsq(cols, problem.y, rcond=None)
            if np.linalg.norm(cols @ coef - problem.y) <= scale:
                x = np.zeros(n)
                x[list(support)] = coef
                return x
    return None
