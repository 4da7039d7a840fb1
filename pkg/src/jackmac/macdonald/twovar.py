"""Normalized Macdonald differences and the two-variable c-product coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..exact import PositivityVerdict, fp_membership_qt
from ..partitions import Partition
from ..symfunc import SymPoly, to_basis
from .construct import QT, mac_P, tdelta


def normalized_mac(lam, n: int, normalization: str = "ones", at=None) -> SymPoly:
    p = mac_P(lam, n, at).expansion
    if normalization == "ones":
        return p / p.eval_ones()
    if normalization == "tdelta":
        t = None if at is None else at[1]
        return p / p.eval(tdelta(n, t))
    raise ValueError(f"unknown normalization {normalization!r}")


def normalized_mac_diff(lam, mu, n: int, normalization: str = "ones", shifted: bool = False, at=None) -> SymPoly:
    lam, mu = Partition(lam), Partition(mu)
    if not shifted and lam.size() != mu.size():
        raise ValueError("sizes differ; use shifted=True for weak majorization")
    f = normalized_mac(lam, n, normalization, at) - normalized_mac(mu, n, normalization, at)
    return f.shift_ones() if shifted else f


# -- the two-variable c-product sequence of (d) versus (d-1, 1) --------------------


def b_seq(k: int):
    """b_k = (1 - t q^{k-1}) / (1 - q^k)."""
    q, t = QT.gens()
    return (1 - t * q ** (k - 1)) / (1 - q ** k)


def c_seq(d: int) -> list:
    """c_0..c_d with c_k = prod_{i<=k} b_i = (t;q)_k/(q;q)_k."""
    out = [QT(1)]
    for k in range(1, d + 1):
        out.append(out[-1] * b_seq(k))
    return out


def _a_general(d: int, c: list) -> list:
    s_mu = sum((c[j - 1] * c[d - j - 1] for j in range(1, d)), QT(0))
    s_lam = sum((c[j] * c[d - j] for j in range(d + 1)), QT(0))
    out = [2 * c[d] * s_mu]
    for i in range(1, (d - 1) // 2 + 1):
        out.append(2 * c[i] * c[d - i] * s_mu - 2 * c[i - 1] * c[d - i - 1] * s_lam)
    if d % 2 == 0:
        k = d // 2
        out.append(c[k] ** 2 * s_mu - c[k - 1] ** 2 * s_lam)
    return out


def _a_by_parity(d: int, c: list) -> list:
    """The regrouped even/odd forms used for the partial-sum argument."""
    if d % 2 == 0:
        k = d // 2
        s1 = sum((c[j - 1] * c[d - j - 1] for j in range(1, k)), QT(0))
        s2 = sum((c[j] * c[d - j] for j in range(1, k)), QT(0))
        out = [4 * c[d] * s1 + 2 * c[k - 1] ** 2 * c[d]]
        for i in range(1, k):
            out.append(4 * c[i] * c[d - i] * s1 - 4 * c[i - 1] * c[d - i - 1] * s2 - 4 * c[i - 1] * c[d - i - 1] * c[d]
                       + 2 * c[i] * c[k - 1] ** 2 * c[d - i] - 2 * c[i - 1] * c[k] ** 2 * c[d - i - 1])
        out.append(2 * c[k] ** 2 * s1 - 2 * c[k - 1] ** 2 * s2 - 2 * c[k - 1] ** 2 * c[d])
        return out
    k = d // 2
    s1 = sum((c[j - 1] * c[d - j - 1] for j in range(1, k + 1)), QT(0))
    s2 = sum((c[j] * c[d - j] for j in range(1, k + 1)), QT(0))
    out = [4 * c[d] * s1]
    for i in range(1, k + 1):
        out.append(4 * c[i] * c[d - i] * s1 - 4 * c[i - 1] * c[d - i - 1] * s2 - 4 * c[i - 1] * c[d - i - 1] * c[d])
    return out


def bracket(d: int, l: int, s: tuple):
    """The (2l+1)-term expression in b; s[i-1] = s_i with l < s_i < d - l."""
    b = {m: b_seq(m) for m in range(1, d + 1)}

    def prod_range(lo, hi):
        out = QT(1)
        for m in range(lo, hi + 1):
            out = out * b[m]
        return out

    total = prod_range(d - l, d)
    for i in range(1, l + 1):
        si = s[i - 1]
        total = total + prod_range(1, i - 1) * (b[i] * b[d - i] - b[si] * b[d - si]) * prod_range(d - l, d - i - 1)
    return total


def bracket_alternative(d: int, l: int, s: tuple):
    """The regrouped form of the same expression."""
    b = {m: b_seq(m) for m in range(1, d + 1)}

    def prod_range(lo, hi):
        out = QT(1)
        for m in range(lo, hi + 1):
            out = out * b[m]
        return out

    total = prod_range(1, l) * b[d - l]
    for i in range(1, l + 1):
        si = s[i - 1]
        total = total + prod_range(1, i - 1) * (b[d - i] * b[d - i + 1] - b[si] * b[d - si]) * prod_range(d - l, d - i - 1)
    return total


def bracket_choices(d: int, l: int):
    return product(range(l + 1, d - l), repeat=l)


@dataclass
class TwoVarSeq:
    d: int
    b: list
    c: list
    a: list
    partial_sums: list
    verdicts: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    def certified(self) -> bool:
        return all(v.in_cone for v in self.verdicts)


def twovar_partial_sums(d: int, certify: bool = True) -> TwoVarSeq:
    """Coefficients a_i of sum a_i M_(d-i,i) for (d) versus (d-1,1) in two variables, up to a positive factor.

    Partial sums a_0 + ... + a_l for l < floor(d/2) are tested for nonnegativity on q, t > 1.
    """
    if d < 2:
        raise ValueError("needs d >= 2")
    bs = [b_seq(k) for k in range(1, d + 1)]
    c = c_seq(d)
    a = _a_by_parity(d, c)
    sums, acc = [], QT(0)
    for x in a:
        acc = acc + x
        sums.append(acc)
    head = sums[: d // 2]
    verdicts: list[PositivityVerdict] = [fp_membership_qt(s) for s in head] if certify else []
    seq = TwoVarSeq(d, bs, c, a, head, verdicts)
    seq.checks["parity_forms_agree"] = a == _a_general(d, c)
    seq.checks["total_zero"] = sums[-1] == 0
    seq.checks["matches_orthogonalized"] = _matches_mac(d, a, c)
    return seq


def _matches_mac(d: int, a: list, c: list) -> bool:
    """a_i equals S_lam S_mu times the M-coordinates of the normalized Macdonald difference."""
    s_mu = sum((c[j - 1] * c[d - j - 1] for j in range(1, d)), QT(0))
    s_lam = sum((c[j] * c[d - j] for j in range(d + 1)), QT(0))
    M = to_basis(normalized_mac_diff((d,), (d - 1, 1), 2), "M")
    return all(M[Partition(sorted((d - i, i), reverse=True))] * s_lam * s_mu == a[i] for i in range(len(a)))


def bracket_collapses_at_q_equals_t(d: int) -> bool:
    t = QT.gen("t")
    for l in range(1, (d - 1) // 2 + 1):
        for s in bracket_choices(d, l):
            for form in (bracket, bracket_alternative):
                if form(d, l, s).subs({"q": t}) != 1:
                    return False
    return True
