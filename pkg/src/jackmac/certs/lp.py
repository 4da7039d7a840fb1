"""Exact feasibility LP over the rationals: find y >= 0 with A y = b, or a Farkas witness.

Dense tableau simplex with Bland's rule.  Phase one only: the targets here
are feasibility problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    feasible: bool
    x: list | None = None          # solution, one entry per column
    witness: list | None = None    # w with w^T A >= 0 and w^T b < 0
    basis: list | None = None      # columns basic in the final tableau
    pivots: int = 0


def solve_feasibility(A: list, b: list, max_pivots: int = 100000) -> LPResult:
    """Decide whether A y = b has a solution y >= 0 (A is m x k, entries rational)."""
    m = len(b)
    k = len(A[0]) if m else 0
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    # flip rows so that b >= 0; remember the signs for the witness
    sign = [1] * m
    for i in range(m):
        if b[i] < 0:
            sign[i] = -1
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # tableau over columns: k structural, m artificial
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [k + i for i in range(m)]
    ncol = k + m
    # phase one objective: minimize sum of artificials; reduced costs row
    cost = [Fraction(0)] * (ncol + 1)
    for i in range(m):
        for j in range(ncol + 1):
            cost[j] -= T[i][j]
    for j in range(k, k + m):
        cost[j] = Fraction(0)
    pivots = 0
    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)  # Bland: smallest index
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                r = T[i][-1] / a
                if best is None or r < best[0] or (r == best[0] and basis[i] < basis[best[1]]):
                    best = (r, i)
        if best is None:  # unbounded cannot happen in phase one
            raise ArithmeticError("phase one is unbounded")
        _pivot(T, cost, best[1], enter)
        basis[best[1]] = enter
        pivots += 1
        if pivots > max_pivots:
            raise ArithmeticError("pivot limit exceeded")
    if cost[-1] != 0:
        w = _farkas(T, basis, k, m)
        return LPResult(False, witness=[w[i] * sign[i] for i in range(m)], basis=list(basis), pivots=pivots)
    x = [Fraction(0)] * k
    for i, j in enumerate(basis):
        if j < k:
            x[j] = T[i][-1]
    return LPResult(True, x=x, basis=list(basis), pivots=pivots)


def _pivot(T, cost, r, c):
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * bb for a, bb in zip(T[i], T[r])]
    if cost[c] != 0:
        f = cost[c]
        for j in range(len(cost)):
            cost[j] -= f * T[r][j]


def _farkas(T, basis, k, m):
    """w = -c_B B^{-1}, the negated phase-one duals; the artificial columns of the tableau hold B^{-1}.

    Optimality gives u^T A <= 0 and u^T b > 0 for u = c_B B^{-1}.
    """
    cB = [Fraction(1) if j >= k else Fraction(0) for j in basis]
    u = [sum((cB[i] * T[i][k + r] for i in range(m)), Fraction(0)) for r in range(m)]
    return [-v for v in u]
