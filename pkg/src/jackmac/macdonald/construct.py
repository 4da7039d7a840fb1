"""Monic Macdonald polynomials P_lam(x; q, t) by orthogonalization of the monomial basis."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from ..exact import Field, RatFunc, q_pochhammer
from ..partitions import Partition
from ..symfunc import SymPoly, general_gram, qt_weight, triangular_orthogonalize

QT = Field("q", "t")

_lock = threading.Lock()
_families: dict = {}


def _key(at):
    if at is None:
        return None
    q0, t0 = (Fraction(x) for x in at)
    if q0 == 1 or t0 == 1 or q0 <= 0 or t0 <= 0:
        raise ValueError("numeric q, t must be positive and different from 1")
    return (q0, t0)


def mac_family(d: int, at=None) -> dict:
    """All P_lam with |lam| = d in the full degree-d space; exact over Q(q,t), or at a rational point."""
    key = (d, _key(at))
    fam = _families.get(key)
    if fam is not None:
        return fam
    if key[1] is None:
        q, t = QT.gens()
    else:
        q, t = key[1]
    parts, G = general_gram(d, lambda rho: qt_weight(rho, q, t))
    P, _ = triangular_orthogonalize(parts, G)
    with _lock:
        _families.setdefault(key, P)
    return _families[key]


@dataclass(frozen=True)
class MacP:
    lam: Partition
    n: int
    expansion: SymPoly
    at: tuple | None = None

    def __getitem__(self, mu):
        return self.expansion[mu]

    def to_json(self) -> dict:
        out = self.expansion.to_json()
        out["lambda"] = str(self.lam)
        out["field"] = "q,t" if self.at is None else f"q={self.at[0]},t={self.at[1]}"
        return out


def mac_P(lam, n: int, at=None) -> MacP:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    coeffs = {nu: c for nu, c in mac_family(lam.size(), at)[lam].items() if len(nu) <= n}
    if at is None:
        coeffs = {nu: c if isinstance(c, RatFunc) else QT(c) for nu, c in coeffs.items()}
        return MacP(lam, n, SymPoly(n, coeffs, QT))
    return MacP(lam, n, SymPoly(n, coeffs), _key(at))


def tdelta(n: int, t=None) -> list:
    """(t^{n-1}, ..., t, 1)."""
    t = QT.gen("t") if t is None else t
    return [t ** (n - 1 - i) for i in range(n)]


def principal_spec_ones(lam, n: int, at=None):
    return mac_P(lam, n, at).expansion.eval_ones()


def principal_spec_tdelta(lam, n: int, at=None):
    t = None if at is None else Fraction(at[1])
    return mac_P(lam, n, at).expansion.eval(tdelta(n, t))


def one_row_two_vars(d: int) -> SymPoly:
    """P_(d) in two variables: sum_i (q;q)_d/((q;q)_i (q;q)_{d-i}) (t;q)_i (t;q)_{d-i}/(t;q)_d x1^i x2^{d-i}."""
    q, t = QT.gens()

    def qq(k):
        return q_pochhammer(q, k, QT)

    def tq(k):
        return q_pochhammer(t, k, QT)

    coeffs = {}
    for i in range(d + 1):
        mu = Partition(sorted((i, d - i), reverse=True))
        coeffs[mu] = qq(d) / (qq(i) * qq(d - i)) * tq(i) * tq(d - i) / tq(d)
    return SymPoly(2, coeffs, QT)


def invert_parameters(f: SymPoly) -> SymPoly:
    """Substitute q -> 1/q, t -> 1/t in every coefficient."""
    q, t = QT.gens()
    return f.map_coeffs(lambda c: c.subs({"q": 1 / q, "t": 1 / t}) if isinstance(c, RatFunc) else c, QT)
