"""Schur coefficients of integral Jack polynomials and their binomial-basis coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import flint
import mpmath

from ..exact import Field, Poly, RatFunc, real_root_count_with_multiplicity, to_fraction
from ..partitions import Partition
from ..symfunc import to_basis
from .construct import integral_jack


@dataclass(frozen=True)
class AHWData:
    lam: Partition
    mu: Partition
    v: Poly
    a: list = field(default_factory=list)
    b: list = field(default_factory=list)

    def nonnegative_integers(self) -> bool:
        return all(x.denominator == 1 and x >= 0 for x in self.a + self.b)

    def a_poly(self) -> list:
        """Coefficients of sum_k a_k z^k, lowest first."""
        return list(self.a)

    def b_poly(self) -> list:
        """Coefficients of sum_{k=1}^d b_{d-k} z^k, lowest first."""
        d = len(self.b)
        return [Fraction(0)] + [self.b[d - k] for k in range(1, d + 1)]

    def to_json(self) -> dict:
        return {"lambda": str(self.lam), "mu": str(self.mu), "v": str(self.v),
                "a": [str(x) for x in self.a], "b": [str(x) for x in self.b]}


def _schur_coefficients(lam: Partition) -> dict:
    d = lam.size()
    return to_basis(integral_jack(lam, max(d, 1)), "s").terms


def schur_coefficient(lam, mu) -> Poly:
    """v_{lam mu}(tau): the s_mu coefficient of J_lam."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size():
        raise ValueError("size mismatch")
    c = _schur_coefficients(lam).get(mu, 0)
    fld = Field("tau")
    if not isinstance(c, RatFunc):
        c = fld(c)
    if not c.is_polynomial():
        raise ArithmeticError(f"v_{lam},{mu} is not a polynomial: {c}")
    return c.num * c.den.leading_coefficient() ** -1


def _binomial_shift(k: int, d: int) -> list:
    """Coefficients (lowest first) of binom(tau + k, d) as a polynomial in tau."""
    p = flint.fmpq_poly([1])
    for i in range(d):
        p = p * flint.fmpq_poly([k - i, 1])
    return [to_fraction(p[i]) / factorial(d) for i in range(d + 1)]


def _falling(k: int) -> list:
    p = flint.fmpq_poly([1])
    for i in range(k):
        p = p * flint.fmpq_poly([-i, 1])
    return [to_fraction(p[i]) for i in range(k + 1)]


def _solve(columns: list, target: list) -> list:
    """Solve sum_k x_k columns[k] = target after dropping rows that vanish identically.

    Every basis polynomial vanishes at tau = 0, so the constant row is dropped.
    """
    m = len(columns)
    A = flint.fmpq_mat(len(target), m)
    for k, col in enumerate(columns):
        for i, v in enumerate(col):
            A[i, k] = flint.fmpq(v.numerator, v.denominator)
    b = flint.fmpq_mat(len(target), 1, [flint.fmpq(v.numerator, v.denominator) for v in target])
    sol = _nonzero_rows_solve(A, b)
    return [to_fraction(sol[k, 0]) for k in range(m)]


def _nonzero_rows_solve(A, b):
    rows = [i for i in range(A.nrows()) if any(A[i, k] != 0 for k in range(A.ncols()))]
    if any(b[i, 0] != 0 for i in range(A.nrows()) if i not in rows):
        raise ArithmeticError("target outside the span of the expansion basis")
    sub = flint.fmpq_mat(len(rows), A.ncols(), [A[i, k] for i in rows for k in range(A.ncols())])
    rhs = flint.fmpq_mat(len(rows), 1, [b[i, 0] for i in rows])
    return sub.solve(rhs)


def ahw_coeffs(lam, mu) -> AHWData:
    """v = sum_{k<d} a_k binom(tau+k, d) = sum_{k=1}^d b_{d-k} tau(tau-1)...(tau-k+1)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size():
        raise ValueError("size mismatch")
    d = lam.size()
    v = schur_coefficient(lam, mu)
    target = v.univariate_coeffs("tau") if not v.is_zero() else []
    target = [Fraction(x) for x in target] + [Fraction(0)] * (d + 1 - len(target))
    a = _solve([_binomial_shift(k, d) for k in range(d)], target)
    cols = [_falling(k) + [Fraction(0)] * (d - k) for k in range(1, d + 1)]
    bk = _solve(cols, target)  # bk[k-1] = b_{d-k}
    b = [bk[d - 1 - j] for j in range(d)]  # b[j] = b_j
    return AHWData(lam, mu, v, a, b)


def _real_rooted_exact(coeffs: list) -> bool:
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) <= 2:
        return True
    p = flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in coeffs])
    return real_root_count_with_multiplicity(p) == p.degree()


def max_imaginary_part(coeffs: list, dps: int = 50) -> float:
    """Largest |Im z| over the numeric roots of sum coeffs[k] z^k."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return 0.0
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(coeffs)],
                                 maxsteps=200, extraprec=2 * dps)
        return float(max(abs(mpmath.im(r)) for r in roots))


def real_rootedness(data: AHWData) -> dict:
    return {
        "a_exact": _real_rooted_exact(data.a_poly()),
        "b_exact": _real_rooted_exact(data.b_poly()),
        "a_max_imag": max_imaginary_part(data.a_poly()),
        "b_max_imag": max_imaginary_part(data.b_poly()),
    }
