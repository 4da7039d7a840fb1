"""Hall-type inner products, evaluated through the power-sum basis.

Products are taken in the full degree-d space (as many variables as the
degree), where the power sums form a basis.  A polynomial in n >= d
variables determines its element there uniquely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

from ..exact import Field, Poly, RatFunc
from ..partitions import Partition, enumerate_partitions, z_lambda
from .bases import p_lambda, to_basis
from .sympoly import SymPoly


@lru_cache(maxsize=None)
def m_in_p(d: int):
    """(partitions of d, A) with m_lam = sum_rho A[lam, rho] p_rho in the full space."""
    parts = enumerate_partitions(d)
    pos = {mu: j for j, mu in enumerate(parts)}
    R = flint.fmpq_mat(len(parts), len(parts))
    for i, rho in enumerate(parts):
        for mu, c in p_lambda(rho, d).coeffs.items():
            R[i, pos[mu]] = int(c)
    return parts, R.inv()


def tau_weight(rho, tau) -> object:
    """<p_rho, p_rho>_tau = z_rho tau^(-l(rho)); tau a RatFunc or rational."""
    rho = Partition(rho)
    w = tau ** (-len(rho)) if isinstance(tau, RatFunc) else Fraction(tau) ** (-len(rho))
    return w * z_lambda(rho)


def qt_weight(rho, q, t) -> object:
    """<p_rho, p_rho>_{q,t} = z_rho prod_i (1 - q^rho_i)/(1 - t^rho_i)."""
    rho = Partition(rho)
    w = Fraction(z_lambda(rho))
    for r in rho:
        w = w * (1 - q ** r) / (1 - t ** r)
    return w


@lru_cache(maxsize=None)
def _jack_gram_layers(d: int):
    """Rational matrices G_k with <m_lam, m_mu>_tau = sum_k G_k[lam, mu] tau^(-k)."""
    parts, A = m_in_p(d)
    N = len(parts)
    layers = {}
    for k in range(1, d + 1):
        D = flint.fmpq_mat(N, N)
        for j, rho in enumerate(parts):
            if len(rho) == k:
                D[j, j] = z_lambda(rho)
        layers[k] = A * D * A.transpose()
    return parts, layers


@lru_cache(maxsize=None)
def jack_gram(d: int, param: str = "tau"):
    """Gram matrix of the monomial basis of the full degree-d space over Q(param)."""
    if d == 0:
        return (Partition(()),), [[Field(param)(1)]]
    parts, layers = _jack_gram_layers(d)
    fld = Field(param)
    den = Poly(fld, {(d,): 1})
    N = len(parts)
    G = []
    for i in range(N):
        row = []
        for j in range(N):
            terms = {}
            for k, L in layers.items():
                v = L[i, j]
                if v != 0:
                    terms[(d - k,)] = Fraction(int(v.p), int(v.q))
            row.append(RatFunc(Poly(fld, terms), den, fld) if terms else fld(0))
        G.append(row)
    return parts, G


def numeric_jack_gram(d: int, tau0):
    """Gram matrix at a rational parameter value, as an fmpq_mat."""
    parts, layers = _jack_gram_layers(d)
    tau0 = Fraction(tau0)
    N = len(parts)
    G = flint.fmpq_mat(N, N)
    for k, L in layers.items():
        c = tau0 ** (-k)
        G = G + L * flint.fmpq(c.numerator, c.denominator)
    return parts, G


def general_gram(d: int, weight):
    """Gram matrix for an arbitrary diagonal power-sum weight rho -> scalar."""
    parts, A = m_in_p(d)
    N = len(parts)
    ws = [weight(rho) for rho in parts]
    G = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i, N):
            acc = 0
            for r in range(N):
                a, b = A[i, r], A[j, r]
                if a != 0 and b != 0:
                    acc = acc + ws[r] * (Fraction(int(a.p), int(a.q)) * Fraction(int(b.p), int(b.q)))
            G[i][j] = G[j][i] = acc
    return parts, G


def _full(f: SymPoly) -> SymPoly:
    if f.n < f.degree():
        raise ValueError("inner products need at least as many variables as the degree")
    return f


def inner_product(f: SymPoly, g: SymPoly, weight) -> object:
    """sum_rho f_rho g_rho weight(rho) over the power-sum coordinates."""
    if f.n != g.n:
        raise ValueError("variable count mismatch")
    fp = to_basis(_full(f), "p").terms
    gp = to_basis(_full(g), "p").terms
    acc = Fraction(0)
    for rho, c in fp.items():
        if rho in gp:
            acc = acc + c * gp[rho] * weight(rho)
    return acc


def tau_inner(f: SymPoly, g: SymPoly, tau) -> object:
    return inner_product(f, g, lambda rho: tau_weight(rho, tau))


def qt_inner(f: SymPoly, g: SymPoly, q, t) -> object:
    return inner_product(f, g, lambda rho: qt_weight(rho, q, t))


def triangular_orthogonalize(parts, G, order=None) -> tuple[dict, dict]:
    """Monic dominance-triangular orthogonal basis from a monomial Gram matrix.

    parts indexes the rows of G.  Returns (P, N) where P[lam] maps nu to the
    coefficient of m_nu and N[lam] = <P_lam, P_lam>.  Each m_lam is reduced
    only against P_mu with mu strictly below lam in dominance.
    """
    from ..partitions import majorizes

    idx = {p: i for i, p in enumerate(parts)}
    P: dict = {}
    N: dict = {}
    for lam in (order or sorted(parts)):
        i = idx[lam]
        vec = {lam: 1}
        for mu, pm in P.items():
            if not majorizes(lam, mu):
                continue
            ip = 0
            for nu, c in pm.items():
                ip = ip + c * G[i][idx[nu]]
            if not ip:
                continue
            coef = ip / N[mu]
            for nu, c in pm.items():
                vec[nu] = vec.get(nu, 0) - coef * c
        vec = {k: v for k, v in vec.items() if v}
        norm = 0
        for nu, c in vec.items():
            norm = norm + c * G[i][idx[nu]]
        if not norm:
            raise ZeroDivisionError(f"degenerate inner product at {lam}")
        P[lam] = vec
        N[lam] = norm
    return P, N
