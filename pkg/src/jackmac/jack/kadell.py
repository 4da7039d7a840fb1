"""The normalized Selberg-Kadell integral as a rational function of (tau, r, s)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import Field, RatFunc, fp_membership_tau, format_ratfunc, pochhammer
from ..partitions import Partition

KADELL_FIELD = Field("tau", "r", "s")


@dataclass(frozen=True)
class KadellValue:
    lam: Partition
    n: int
    value: RatFunc

    def to_json(self) -> dict:
        return {"lambda": str(self.lam), "n": self.n, "value": format_ratfunc(self.value)}


def _gens():
    return KADELL_FIELD.gens()


def kadell_normalized(lam, n: int) -> KadellValue:
    """I~_lam = prod_i <(n-i) tau + r>_{lam_i} / <(2n-i-1) tau + r + s>_{lam_i}."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    tau, r, s = _gens()
    out = KADELL_FIELD(1)
    for i in range(1, n + 1):
        li = lam.part(i)
        out = out * pochhammer((n - i) * tau + r, li) / pochhammer((2 * n - i - 1) * tau + r + s, li)
    return KadellValue(lam, n, out)


def _raising_indices(lam: Partition, mu: Partition, n: int) -> tuple[int, int]:
    a, b = lam.padded(n), mu.padded(n)
    up = [k for k in range(n) if a[k] - b[k] == 1]
    down = [k for k in range(n) if b[k] - a[k] == 1]
    same = all(a[k] == b[k] or k in up or k in down for k in range(n))
    if len(up) != 1 or len(down) != 1 or not same or up[0] > down[0]:
        raise ValueError(f"{lam} is not R_ij applied to {mu}")
    return up[0] + 1, down[0] + 1


def kadell_adjacent_ratio(lam, mu, n: int) -> RatFunc:
    """Closed form of I~_lam / I~_mu - 1 when lam = R_ij(mu)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size():
        raise ValueError("sizes differ")
    i, j = _raising_indices(lam, mu, n)
    tau, r, s = _gens()
    li, lj = lam.part(i), lam.part(j)
    return (((j - i) * tau + li - lj - 1) * ((n - 1) * tau + s)
            / (((n - j) * tau + lj + r) * ((2 * n - i - 1) * tau + li + r + s - 1)))


def kadell_ratio_holds(lam, mu, n: int) -> bool:
    ratio = kadell_normalized(lam, n).value / kadell_normalized(mu, n).value - 1
    return ratio == kadell_adjacent_ratio(lam, mu, n)


def kadell_difference(lam, mu, n: int, r=1, s=1) -> RatFunc:
    """I~_lam - I~_mu at fixed rational r, s, as a function of tau."""
    diff = kadell_normalized(lam, n).value - kadell_normalized(mu, n).value
    return diff.subs({"r": Fraction(r), "s": Fraction(s)}, field=Field("tau"))


def kadell_certify(lam, mu, n: int, r=1, s=1):
    return fp_membership_tau(kadell_difference(lam, mu, n, r, s), "tau")
