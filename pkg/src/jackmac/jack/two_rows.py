"""Closed forms for small-length Jack differences, checked against the orthogonalized polynomials."""

from __future__ import annotations

from math import comb

from ..exact import Field, RatFunc, fp_membership_tau, pochhammer
from ..partitions import Partition, enumerate_partitions
from ..symfunc import SymPoly, expansion_in, normalized_monomial, to_basis
from .construct import jack_P
from .normalized import normalized_diff
from .transition import TWO

TAU = Field("tau")


def _tau():
    return TAU.gen("tau")


def _lift(c, field):
    return c.lift(field) if isinstance(c, RatFunc) else field(c)


def _row_pair_terms(d: int, i: int):
    """binom(d,i) <tau>_i <tau>_{d-i} / <2tau>_d, zero outside 0..d."""
    t = _tau()
    if i < 0 or i > d:
        return TAU(0)
    return comb(d, i) * pochhammer(t, i) * pochhammer(t, d - i) / pochhammer(2 * t, d)


def row_pair_f(d: int) -> list:
    """f_0..f_d: coefficients of s^i in the normalized difference of (d) and (d-1,1) at x = (1, s)."""
    return [_row_pair_terms(d, i) - _row_pair_terms(d - 2, i - 1) for i in range(d + 1)]


def row_pair_g(d: int) -> list:
    """g_0..g_{d-2} with f(s) = (s - 1)^2 g(s)."""
    t = _tau()
    return [comb(d - 2, i) * (t + d - 1) / t * pochhammer(t, i + 1) * pochhammer(t, d - i - 1) / pochhammer(2 * t, d)
            for i in range(d - 1)]


def row_pair_f_computed(d: int) -> list:
    diff = normalized_diff((d,), (d - 1, 1), 2)
    return [_lift(diff[Partition(sorted((d - i, i), reverse=True))], TAU) for i in range(d + 1)]


def _poly_mul(a: list, b: list) -> list:
    out = [TAU(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def verify_row_pair(d: int) -> dict:
    if d < 2:
        raise ValueError("needs d >= 2")
    f = row_pair_f(d)
    g = row_pair_g(d)

    def gg(i):
        return g[i] if 0 <= i < len(g) else TAU(0)

    square = _poly_mul([TAU(1), TAU(-2), TAU(1)], g)
    return {
        "f_matches_orthogonalized": f == row_pair_f_computed(d),
        "second_difference": all(f[i] == gg(i - 2) - 2 * gg(i - 1) + gg(i) for i in range(d + 1)),
        "weighted_tail_sums": all(sum(((j - i - 1) * f[j] for j in range(i + 1, d + 1)), TAU(0)) == g[i]
                                  for i in range(d - 1)),
        "square_factor": f == square,
        "g_in_cone": all(fp_membership_tau(x, "tau").in_cone for x in g),
    }


def row_pair_muirhead_coefficients(d: int) -> list:
    """a_0..a_{floor(d/2)} with normalized difference = sum a_i M_(d-i,i), read from the M basis."""
    M = to_basis(normalized_diff((d,), (d - 1, 1), 2), "M")
    return [_lift(M[Partition(sorted((d - i, i), reverse=True))], TAU) for i in range(d // 2 + 1)]


def row_pair_partial_sum_closed_form(d: int, i: int):
    t = _tau()
    return (2 * comb(d - 1, i) * TAU(d - 1 - 2 * i) / (d - 1) * pochhammer(t, i) * pochhammer(t, d - i - 1)
            / pochhammer(2 * t, d) * (t + d - 1))


def verify_row_pair_partial_sums(d: int) -> dict:
    a = row_pair_muirhead_coefficients(d)
    sums, acc = [], TAU(0)
    for x in a:
        acc = acc + x
        sums.append(acc)
    top = d // 2
    closed = [row_pair_partial_sum_closed_form(d, i) for i in range(top)]
    return {
        "partial_sums": sums[:top],
        "closed_form": sums[:top] == closed,
        "in_cone": all(fp_membership_tau(s, "tau").in_cone for s in sums[:top]),
        "total_zero": sums[-1] == 0 if d % 2 == 0 else True,
    }


def hook_pair(n: int) -> tuple[Partition, Partition]:
    """(2, 1^{n-2}) and (1^n)."""
    return Partition((2,) + (1,) * (n - 2)), Partition((1,) * n)


def hook_pair_collapse(n: int, param: str = "tau") -> bool:
    """Normalized difference of (2,1^{n-2}) and (1^n) equals (1+(n-1)x)/(1+nx) (M_lam - M_mu)."""
    lam, mu = hook_pair(n)
    x = Field(param).gen(param)
    diff = normalized_diff(lam, mu, n, param)
    target = (normalized_monomial(lam, n) - normalized_monomial(mu, n)).scale((1 + (n - 1) * x) / (1 + n * x))
    return diff == target


def hook_pair_parameter_ratio(n: int) -> bool:
    """tau-difference = (1+(n-1)tau)(1+n sigma)/((1+n tau)(1+(n-1)sigma)) times the sigma-difference."""
    lam, mu = hook_pair(n)
    t, s = TWO.gen("tau"), TWO.gen("sigma")
    dt = normalized_diff(lam, mu, n, "tau").map_coeffs(lambda c: _lift(c, TWO), TWO)
    ds = normalized_diff(lam, mu, n, "sigma").map_coeffs(lambda c: _lift(c, TWO), TWO)
    factor = (1 + (n - 1) * t) * (1 + n * s) / ((1 + n * t) * (1 + (n - 1) * s))
    return dt == ds.scale(factor)


def jack_coordinates(f: SymPoly, param: str = "sigma", field=TWO) -> dict:
    """Coordinates of a homogeneous f in the basis P_nu(x; param), over ``field``."""
    d = f.degree()
    lifted = f.map_coeffs(lambda c: _lift(c, field), field)
    elements = {nu: jack_P(nu, f.n, param).expansion.map_coeffs(lambda c: _lift(c, field), field)
                for nu in enumerate_partitions(d, f.n)}
    return expansion_in(lifted, elements)


def normalized_jack_coordinates_in(f: SymPoly, param: str = "sigma", field=TWO) -> dict:
    """Coordinates of a homogeneous f in P_nu(x; param)/P_nu(1; param)."""
    d = f.degree()
    lifted = f.map_coeffs(lambda c: _lift(c, field), field)
    elements = {}
    for nu in enumerate_partitions(d, f.n):
        p = jack_P(nu, f.n, param).expansion.map_coeffs(lambda c: _lift(c, field), field)
        elements[nu] = p / p.eval_ones()
    return expansion_in(lifted, elements)
