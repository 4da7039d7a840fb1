"""Rising factorials and q-analogues."""

from __future__ import annotations

from fractions import Fraction

from .field import Field, RatFunc


def pochhammer(base, k: int):
    """Rising factorial base (base+1) ... (base+k-1); equal to 1 when k == 0."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    out = base * 0 + 1 if isinstance(base, RatFunc) else Fraction(1)
    for i in range(k):
        out = out * (base + i)
    return out


def _q(field: Field, q: str) -> RatFunc:
    return field.gen(q)


def q_pochhammer(a, k: int, field: Field | None = None, q: str = "q") -> RatFunc:
    """(a; q)_k = prod_{i<k} (1 - a q^i)."""
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    if field is None:
        if not isinstance(a, RatFunc):
            raise ValueError("field required when a is a rational")
        field = a.field
    qq = _q(field, q)
    out = field(1)
    qi = field(1)
    for _ in range(k):
        out = out * (1 - a * qi)
        qi = qi * qq
    return out


def q_integer(k: int, field: Field, q: str = "q") -> RatFunc:
    qq = _q(field, q)
    out = field(0)
    p = field(1)
    for _ in range(k):
        out = out + p
        p = p * qq
    return out


def q_factorial(k: int, field: Field, q: str = "q") -> RatFunc:
    out = field(1)
    for i in range(1, k + 1):
        out = out * q_integer(i, field, q)
    return out


def q_binomial(m: int, n: int, field: Field, q: str = "q") -> RatFunc:
    if not m >= n >= 0:
        raise ValueError("q_binomial needs m >= n >= 0")
    return q_factorial(m, field, q) / (q_factorial(n, field, q) * q_factorial(m - n, field, q))
