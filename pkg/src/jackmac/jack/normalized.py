"""Normalized Jack polynomials, their differences and generalized binomial coefficients."""

from __future__ import annotations

from functools import lru_cache

from ..exact import fp_membership_tau
from ..partitions import Partition, contains, enumerate_partitions
from ..symfunc import SymPoly, expansion_in
from .construct import INFINITY, jack_P, specialize


def normalized_jack(lam, n: int, param="tau") -> SymPoly:
    """P_lam / P_lam(1, ..., 1); param may also be 0 or infinity."""
    if param == INFINITY or param == float("inf") or (not isinstance(param, str) and param == 0):
        p = specialize(lam, n, param)
    else:
        p = jack_P(lam, n, param).expansion
    return p / p.eval_ones()


def normalized_diff(lam, mu, n: int, param="tau", shift: bool = False) -> SymPoly:
    """P_lam/P_lam(1) - P_mu/P_mu(1), optionally composed with x -> x + 1."""
    f = normalized_jack(lam, n, param) - normalized_jack(mu, n, param)
    return f.shift_ones() if shift else f


@lru_cache(maxsize=None)
def _normalized_basis(top: int, n: int, param) -> dict:
    out = {}
    for d in range(top + 1):
        for nu in enumerate_partitions(d, n):
            out[nu] = normalized_jack(nu, n, param)
    return out


def normalized_jack_coordinates(f: SymPoly, param="tau") -> dict:
    """Coordinates of f in the basis P_nu/P_nu(1) (all degrees up to deg f)."""
    return expansion_in(f, _normalized_basis(max(f.degree(), 0), f.n, param))


def binomial_expansion(lam, n: int, param="tau") -> dict:
    """{nu: binom(lam, nu)} from P_lam(x+1)/P_lam(1) = sum binom(lam, nu) P_nu(x)/P_nu(1)."""
    f = normalized_jack(lam, n, param).shift_ones()
    return normalized_jack_coordinates(f, param)


def generalized_binomial(lam, nu, n: int, param="tau"):
    lam, nu = Partition(lam), Partition(nu)
    if not contains(lam, nu, n):
        raise ValueError(f"{nu} is not contained in {lam}")
    return binomial_expansion(lam, n, param).get(nu, 0)


def containment_positivity(lam, mu, n: int) -> list:
    """Coordinates of the shifted normalized difference in the normalized Jack basis, with cone verdicts.

    Returns [(nu, coefficient, PositivityVerdict)] sorted by nu, largest first.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not contains(lam, mu, n):
        raise ValueError(f"{lam} does not contain {mu}")
    coords = normalized_jack_coordinates(normalized_diff(lam, mu, n, shift=True))
    return [(nu, c, fp_membership_tau(c, "tau")) for nu, c in sorted(coords.items(), reverse=True)]
