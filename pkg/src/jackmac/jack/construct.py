"""Monic Jack polynomials P_lam(x; tau) by orthogonalization of the monomial basis."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exact import Field, RatFunc, pochhammer
from ..partitions import Partition, enumerate_partitions
from ..symfunc import BasisExpansion, SymPoly, e_lambda, general_gram, jack_gram, tau_weight, triangular_orthogonalize

INFINITY = "inf"

_lock = threading.Lock()
_families: dict = {}


def _param_key(param):
    if isinstance(param, str):
        return param
    return Fraction(param)


def jack_family(d: int, param="tau") -> dict:
    """All P_lam with |lam| = d in the full degree-d space, as {lam: {nu: coeff}}.

    param is a variable name (exact over Q(param)) or a positive rational.
    """
    key = (d, _param_key(param))
    fam = _families.get(key)
    if fam is not None:
        return fam
    if isinstance(key[1], str):
        parts, G = jack_gram(d, key[1])
    else:
        if key[1] <= 0:
            raise ValueError("numeric Jack parameter must be positive; use specialize() for 0 and infinity")
        parts, G = general_gram(d, lambda rho: tau_weight(rho, key[1]))
    P, _ = triangular_orthogonalize(parts, G)
    with _lock:
        _families.setdefault(key, P)
    return _families[key]


@dataclass(frozen=True)
class JackP:
    lam: Partition
    n: int
    expansion: SymPoly
    param: object = "tau"

    def __getitem__(self, mu):
        return self.expansion[mu]

    def eval_ones(self):
        return self.expansion.eval_ones()

    def to_basis_expansion(self) -> BasisExpansion:
        label = self.param if isinstance(self.param, str) else str(self.param)
        return BasisExpansion("JackP", self.n, {self.lam: Fraction(1)}, param=label)

    def to_json(self) -> dict:
        out = self.expansion.to_json()
        out["lambda"] = str(self.lam)
        out["param"] = str(self.param)
        return out


def jack_P(lam, n: int, param="tau") -> JackP:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    fam = jack_family(lam.size(), param)
    coeffs = {nu: c for nu, c in fam[lam].items() if len(nu) <= n}
    if isinstance(param, str):
        fld = Field(param)
        coeffs = {nu: fld(c) if not isinstance(c, RatFunc) else c for nu, c in coeffs.items()}
        return JackP(lam, n, SymPoly(n, coeffs, fld), param)
    return JackP(lam, n, SymPoly(n, coeffs), Fraction(param))


def specialize(lam, n: int, tau0) -> SymPoly:
    """P_lam at a fixed parameter value, including the endpoints 0 and infinity.

    At infinity the limit is e_{lam'}, taken directly.
    """
    lam = Partition(lam)
    if tau0 == INFINITY or tau0 == math.inf:
        return e_lambda(lam.conjugate(), n)
    return jack_P(lam, n).expansion.subs({"tau": Fraction(tau0)})


def _param_value(param):
    return Field(param).gen(param) if isinstance(param, str) else Fraction(param)


def principal_specialization(lam, n: int, param="tau"):
    """P_lam(1, ..., 1) from the arm/leg product formula."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    tau = _param_value(param)
    out = tau * 0 + 1
    for s in lam.cells():
        out = out * (lam.coarm(s) + (n - lam.coleg(s)) * tau) / (lam.arm(s) + (lam.leg(s) + 1) * tau)
    return out


def one_row_jack(d: int, n: int, param="tau") -> SymPoly:
    """P_(d) = d!/<tau>_d * sum over compositions alpha of prod <tau>_{alpha_i}/alpha_i! x^alpha."""
    tau = _param_value(param)
    head = math.factorial(d) / pochhammer(tau, d)
    coeffs = {}
    for mu in enumerate_partitions(d, n):
        c = head
        for p in mu:
            c = c * pochhammer(tau, p) / math.factorial(p)
        coeffs[mu] = c
    return SymPoly(n, coeffs)


def hook_constant(lam, param="tau"):
    """c_lam = prod_s (a(s) + tau (l(s) + 1)), so that J_lam = c_lam P_lam."""
    lam = Partition(lam)
    tau = _param_value(param)
    out = tau * 0 + 1
    for s in lam.cells():
        out = out * (lam.arm(s) + tau * (lam.leg(s) + 1))
    return out


def integral_jack(lam, n: int, param="tau") -> SymPoly:
    return jack_P(lam, n, param).expansion.scale(hook_constant(lam, param))


@lru_cache(maxsize=None)
def _one_ratio(lam: Partition, n: int):
    tau = Field("tau").gen("tau")
    out = tau * 0 + 1
    for i, p in enumerate(lam, 1):
        out = out * pochhammer((n - i + 1) * tau, p) / pochhammer((n - i) * tau, p)
    return out


def branching_ratio(lam, n: int):
    """P_(lam,0)(1_n) / P_lam(1_{n-1}) as a product of rising factorials."""
    lam = Partition(lam)
    if len(lam) > n - 1:
        raise ValueError("branching ratio needs length(lam) <= n - 1")
    return _one_ratio(lam, n)
