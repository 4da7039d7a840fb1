"""Okounkov-Olshanski branching kernel: numerical checks in two and three variables.

Iterated tanh-sinh quadrature over y_j in [x_{j+1}, x_j].  Every singular factor
is computed from the distance to its endpoint, so the x^(tau - 1) blow-up for
tau < 1 costs no precision.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..partitions import Partition


def _nodes(level: int, cutoff: float = 1e-300):
    """Tanh-sinh abscissae on [-1, 1] with step 2^-level: (1 + x, 1 - x, weight)."""
    h = 2.0 ** -level
    # t large enough that the endpoint distance underflows below cutoff
    tmax = math.asinh(math.log(2 / cutoff) / math.pi)
    t = np.arange(-math.ceil(tmax / h), math.ceil(tmax / h) + 1) * h
    s = 0.5 * math.pi * np.sinh(t)
    with np.errstate(over="ignore"):  # tail nodes overflow to weight 0 and are dropped below
        left = 2.0 / (1.0 + np.exp(-2.0 * s))    # 1 + tanh(s)
        right = 2.0 / (1.0 + np.exp(2.0 * s))    # 1 - tanh(s)
        w = h * 0.5 * math.pi * np.cosh(t) / np.cosh(s) ** 2
    keep = (left > 0) & (right > 0) & (w > 0)
    return left[keep], right[keep], w[keep]


def _poly_evaluator(f):
    """Vectorized float evaluation of a SymPoly with rational coefficients."""
    poly = f.to_poly()
    terms = poly.terms
    exps = np.array(list(terms.keys()), dtype=float).reshape(len(terms), -1)
    coef = np.array([float(c) for c in terms.values()])

    def ev(*ys):
        out = np.zeros_like(ys[0], dtype=float)
        for e, c in zip(exps, coef):
            term = np.full_like(ys[0], c, dtype=float)
            for y, k in zip(ys, e):
                if k:
                    term = term * y ** k
            out = out + term
        return out

    return ev


def _log_const(n: int, tau: float) -> float:
    return math.lgamma(n * tau) - n * math.lgamma(tau)


def _integrate(x: list, tau: float, weight, level: int) -> float:
    """Integral of weight(y) K(x, y) over the interlacing region, at one tanh-sinh level."""
    n = len(x)
    L, R, W = _nodes(level)
    logc = _log_const(n, tau)
    if n == 2:
        a = (x[0] - x[1]) / 2
        dl, dr = a * L, a * R                     # y - x2, x1 - y
        y = x[1] + dl
        logk = (tau - 1) * (np.log(dl) + np.log(dr)) - (2 * tau - 1) * math.log(x[0] - x[1]) + logc
        return float(np.sum(W * a * np.exp(logk) * weight(y)))
    if n == 3:
        a1, a2 = (x[0] - x[1]) / 2, (x[1] - x[2]) / 2
        # y1 in [x2, x1] along axis 0, y2 in [x3, x2] along axis 1
        l1, r1 = (a1 * L)[:, None], (a1 * R)[:, None]
        l2, r2 = (a2 * L)[None, :], (a2 * R)[None, :]
        y1, y2 = x[1] + l1, x[2] + l2
        vy = l1 + r2                               # y1 - y2
        log_pi = (np.log(r1) + np.log(l1) + np.log(l1 + 2 * a2)    # |x_i - y1|
                  + np.log(r2 + 2 * a1) + np.log(r2) + np.log(l2))  # |x_i - y2|
        vx = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2])
        logk = np.log(vy) + (tau - 1) * log_pi - (2 * tau - 1) * math.log(vx) + logc
        w2 = (W * a1)[:, None] * (W * a2)[None, :]
        return float(np.sum(w2 * np.exp(logk) * weight(y1, y2)))
    raise ValueError("only n = 2 and n = 3 are supported")


def integrate_kernel(x: list, tau: float, weight=None, tol: float = 1e-12, max_level: int = 9):
    """Refine the tanh-sinh step until successive levels agree to tol (relative); returns (value, estimate)."""
    if weight is None:
        weight = lambda *ys: np.ones_like(ys[0])
    prev = None
    for level in range(2, max_level + 1):
        cur = _integrate(x, tau, weight, level)
        if prev is not None and abs(cur - prev) <= tol * max(abs(cur), 1e-300):
            return cur, abs(cur - prev)
        prev = cur
    return prev, float("nan")


@dataclass
class QuadratureReport:
    lam: Partition
    n: int
    tau: Fraction
    x: tuple
    kernel_mass: float
    kernel_error: float
    lhs: Fraction
    rhs: float
    identity_error: float

    def to_json(self) -> dict:
        return {"lambda": str(self.lam), "n": self.n, "tau": str(self.tau), "x": [str(v) for v in self.x],
                "kernel_mass": self.kernel_mass, "kernel_error": self.kernel_error,
                "lhs": float(self.lhs), "rhs": self.rhs, "identity_error": self.identity_error}


def oo_kernel_quadrature(lam, n: int, tau0, x, tol: float = 1e-12) -> QuadratureReport:
    """Check int K = 1 and P_(lam,0)(x)/P_(lam,0)(1) = int P_lam(y)/P_lam(1) K(x, y) dy.

    Both errors are relative; the left side of the identity is exact.
    """
    from ..jack import normalized_jack

    lam = Partition(lam)
    tau0 = Fraction(tau0)
    x = tuple(Fraction(v) for v in x)
    if n not in (2, 3) or len(x) != n:
        raise ValueError("need n in {2, 3} and n coordinates")
    if tau0 <= 0:
        raise ValueError("tau0 must be positive")
    if any(x[i] <= x[i + 1] for i in range(n - 1)) or x[-1] <= 0:
        raise ValueError("x must be strictly decreasing and positive")
    if len(lam) > n - 1:
        raise ValueError(f"{lam} is too long to interlace below {n} variables")
    xf = [float(v) for v in x]
    tau = float(tau0)
    mass, _ = integrate_kernel(xf, tau, tol=tol)
    lhs = normalized_jack(lam, n, tau0).eval(list(x))
    inner = normalized_jack(lam, n - 1, tau0)
    rhs, _ = integrate_kernel(xf, tau, _poly_evaluator(inner), tol=tol)
    return QuadratureReport(lam, n, tau0, x, mass, abs(mass - 1), lhs, rhs, abs(rhs - float(lhs)) / abs(float(lhs)))


def random_decreasing_point(n: int, seed: int = 0) -> tuple:
    rng = random.Random(f"oo:{n}:{seed}")
    vals = set()
    while len(vals) < n:
        vals.add(Fraction(rng.randint(1, 40), rng.randint(1, 8)))
    return tuple(sorted(vals, reverse=True))
