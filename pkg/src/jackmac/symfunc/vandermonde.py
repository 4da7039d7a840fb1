"""Exact division of a two-variable symmetric polynomial by V(x)^2 = (x1 - x2)^2."""

from __future__ import annotations

from dataclasses import dataclass

from ..partitions import Partition
from .bases import BasisExpansion, monomial, to_basis
from .sympoly import SymPoly, mul


@dataclass
class NotDivisible:
    """f = quotient * V^2 + remainder, with remainder nonzero and led by a term no multiple of V^2 can cancel."""

    quotient: SymPoly
    remainder: SymPoly

    def to_json(self) -> dict:
        return {"verdict": "NotDivisible", "remainder": self.remainder.to_json()}


def _vsq() -> SymPoly:
    return monomial((2,), 2) - monomial((1, 1), 2).scale(2)


def vandermonde_quotient(f: SymPoly) -> tuple[SymPoly, SymPoly]:
    """(g, r) with f = g V^2 + r; r = 0 exactly when V^2 divides f.

    V^2 is monic in x1 for the lexicographic order, so the leading m-term of f
    determines the next quotient term whenever its exponents stay a partition.
    """
    if f.n != 2:
        raise ValueError("division by the squared Vandermonde needs two variables")
    v2 = _vsq()
    g = SymPoly(2, field=f.field)
    rest = f
    while rest:
        lam = max(rest.coeffs)
        a, b = lam.padded(2)
        if a - 2 < b:
            break
        term = SymPoly(2, {Partition((a - 2, b)): rest.coeffs[lam]}, f.field)
        g = g + term
        rest = rest - mul(term, v2)
    return g, rest


def divide_by_vandermonde_sq(f: SymPoly, n: int = 2):
    """f / (x1 - x2)^2 in the two-variable Schur basis, or NotDivisible."""
    if n != 2 or f.n != 2:
        raise ValueError("division by the squared Vandermonde is implemented for n = 2 only")
    g, r = vandermonde_quotient(f)
    if r:
        return NotDivisible(g, r)
    if not g:
        return BasisExpansion("s", 2, {})
    return to_basis(g, "s")
