"""Sturm sequences over Q and exact real-root counting."""

from __future__ import annotations

import math
from fractions import Fraction

import flint

from .field import Poly, to_fmpq

INF = math.inf


class IndeterminateRootCount(ValueError):
    pass


def _as_fmpq_poly(p) -> flint.fmpq_poly:
    if isinstance(p, flint.fmpq_poly):
        return p
    if isinstance(p, Poly):
        return flint.fmpq_poly([to_fmpq(c) for c in p.univariate_coeffs()])
    return flint.fmpq_poly([to_fmpq(c) for c in p])


def squarefree_part(p: flint.fmpq_poly) -> flint.fmpq_poly:
    g = p.gcd(p.derivative())
    return p if g.degree() == 0 else p // g


def sturm_sequence(p) -> list[flint.fmpq_poly]:
    """Canonical Sturm chain p, p', -rem(...), ... of the square-free part."""
    f = squarefree_part(_as_fmpq_poly(p))
    seq = [f, f.derivative()]
    while seq[-1].degree() > 0:
        r = -(seq[-2] % seq[-1])
        if r == 0:
            break
        seq.append(r)
    return seq


def _sign_at(p: flint.fmpq_poly, x) -> int:
    if x == INF or x == -INF:
        d = p.degree()
        if d < 0:
            return 0
        lc = p[d]
        s = 1 if lc > 0 else -1
        return s if (x > 0 or d % 2 == 0) else -s
    v = p(to_fmpq(x))
    return (v > 0) - (v < 0)


def _variations(seq, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p, interval=(-INF, INF)) -> int:
    """Number of distinct real roots of ``p`` in the open interval (a, b)."""
    f = _as_fmpq_poly(p)
    if f == 0:
        raise IndeterminateRootCount("indeterminate root count")
    a, b = interval
    a = a if a in (INF, -INF) else Fraction(a)
    b = b if b in (INF, -INF) else Fraction(b)
    if not a < b:
        return 0
    if f.degree() == 0:
        return 0
    seq = sturm_sequence(f)
    count = _variations(seq, a) - _variations(seq, b)
    if b not in (INF, -INF) and f(to_fmpq(b)) == 0:
        count -= 1
    return count


def real_root_count_with_multiplicity(p) -> int:
    """Real roots counted with multiplicity, via repeated square-free splitting."""
    f = _as_fmpq_poly(p)
    if f == 0:
        raise IndeterminateRootCount("indeterminate root count")
    total = 0
    while f.degree() > 0:
        total += sturm_root_count(f)
        g = f.gcd(f.derivative())
        if g.degree() <= 0:
            break
        f = g
    return total
