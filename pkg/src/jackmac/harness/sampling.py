"""Exact rational sampling of inequalities and degree-growth comparisons."""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction

import flint

from ..exact import Field, RatFunc, format_scalar
from ..partitions import Partition
from ..symfunc import SymPoly, e_lambda, monomial, p_lambda

DOMAINS = ("full-orthant", "log-pos", "log-neg")


@dataclass
class Verdict:
    """kind: Certified | NumericallyClean | Violated | Unknown."""

    kind: str
    witness: tuple | None = None
    value: Fraction | None = None
    samples: int = 0
    detail: dict = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.kind == "Violated"

    def to_json(self) -> dict:
        out = {"verdict": self.kind, "samples": self.samples}
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
            out["value"] = str(self.value)
        out.update(self.detail)
        return out


def _coordinate(rng: random.Random, domain: str) -> Fraction:
    if domain == "full-orthant":
        r = rng.random()
        if r < 0.05:
            return Fraction(0)
        if r < 0.15:
            return Fraction(1)
        scale = rng.choice((4, 16, 256))
        return Fraction(rng.randint(0, scale * 8), rng.randint(1, scale))
    a, b = rng.randint(1, 64), rng.randint(1, 64)
    if domain == "log-pos":
        return 1 + Fraction(a, b) * rng.choice((Fraction(1, 16), 1, 16))
    if domain == "log-neg":
        return Fraction(a, a + b * rng.choice((1, 16, 256)))
    raise ValueError(f"unknown domain {domain!r}")


def sample_points(n: int, domain: str, samples: int, seed: int = 0):
    """Deterministic rational points; log domains alternate between (0,1)^n and (1,oo)^n when domain="log"."""
    rng = random.Random(f"{seed}:{domain}:{n}")
    for i in range(samples):
        d = domain
        if domain == "log":
            d = "log-neg" if i % 2 else "log-pos"
        yield tuple(_coordinate(rng, d) for _ in range(n))


@lru_cache(maxsize=64)
def _cached_points(n: int, domain: str, samples: int, seed: int, shift: bool) -> tuple:
    """(Fraction points, flint argument tuples) shared by every pair of a scan."""
    pts = tuple(sample_points(n, domain, samples, seed))
    off = 1 if shift else 0
    args = tuple(tuple(flint.fmpq(x.numerator + off * x.denominator, x.denominator) for x in pt) for pt in pts)
    return pts, args


def _rational(diff: SymPoly) -> None:
    if diff.field is not None:
        raise ValueError("sample_check needs numeric parameters; substitute them first")


def sample_check(diff: SymPoly, domain: str = "full-orthant", shift: bool = False, samples: int = 1000,
                 seed: int = 0) -> Verdict:
    """Evaluate diff (at x + 1 when shift) exactly at pseudo-random rational points of the domain.

    domain "log" splits the samples between (0,1)^n and (1,oo)^n.  A violation is
    re-evaluated through the symmetric-orbit formula before it is reported.
    """
    _rational(diff)
    if not diff:
        return Verdict("NumericallyClean", samples=0)
    poly = diff.to_poly()._p
    count = 0
    pts, all_args = _cached_points(diff.n, domain, samples, seed, shift)
    for pt, args in zip(pts, all_args):
        count += 1
        if poly(*args) < 0:
            moved = [x + 1 for x in pt] if shift else list(pt)
            exact = diff.eval(moved)
            if exact < 0:
                return Verdict("Violated", pt, exact, count, {"domain": domain, "shift": shift, "seed": seed})
    return Verdict("NumericallyClean", samples=count, detail={"domain": domain, "shift": shift, "seed": seed})


def replay_witness(diff: SymPoly, witness, shift: bool = False) -> Fraction:
    """Independent exact value of diff at a stored witness (used to reject false violations)."""
    pt = [Fraction(x) for x in witness]
    if shift:
        pt = [x + 1 for x in pt]
    return diff.eval(pt)


# -- degree growth -------------------------------------------------------------------


def family_member(lam, n: int, family: str) -> SymPoly:
    """Normalized member of family m | p | e' | jack(tau0) (tau0 a rational string or number)."""
    lam = Partition(lam)
    if family == "m":
        f = monomial(lam, n)
    elif family == "p":
        f = p_lambda(lam, n)
    elif family in ("e'", "e"):
        f = e_lambda(lam.conjugate(), n)
    elif family.startswith("jack"):
        from ..jack import jack_P

        tau0 = Fraction(family[family.index("(") + 1:-1]) if "(" in family else Fraction(1)
        f = jack_P(lam, n, tau0).expansion
    else:
        raise ValueError(f"unknown family {family!r}")
    v = f.eval_ones()
    if v == 0:
        raise ValueError(f"{family} member for {lam} vanishes at the all-ones point")
    return f / v


def _t_profile(f: SymPoly, k: int, u: list, inverse: bool) -> tuple[int, Fraction]:
    """(exponent, leading coefficient) of f(t u_1, .., t u_k, u_{k+1}, ..) in t (or of 1/t when inverse)."""
    fld = Field("t")
    t = fld.gen("t")
    poly = f.to_poly()
    images = {}
    for i, name in enumerate(poly.field.names):
        images[name] = t * u[i] if i < k else fld(u[i])
    g = RatFunc(poly, field=poly.field).subs(images, field=fld).num
    coeffs = g.univariate_coeffs("t")
    if inverse:
        e = next(i for i, c in enumerate(coeffs) if c)
        return e, coeffs[e]
    return len(coeffs) - 1, coeffs[-1]


def growth_check(lam, mu, k: int, n: int | None = None, family: str = "m", seed: int = 0) -> dict:
    """Compare t-degrees along x(t) = (t u_1..t u_k, u_{k+1}..u_n) with u_i > 1, and decay exponents
    along y(t) = (u_1/t..u_k/t, u_{k+1}..u_n) with u_i in (0,1).

    growth_refutes: deg_lam < deg_mu, so the difference tends to -oo on (1,oo)^n.
    decay_refutes: the lam term decays faster, so the difference is eventually negative on (0,1)^n.
    """
    lam, mu = Partition(lam), Partition(mu)
    n = n or max(len(lam), len(mu), 1)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = random.Random(f"{seed}:{lam}:{mu}:{k}")
    up = [1 + Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(n)]
    down = [Fraction(a, a + rng.randint(1, 50)) for a in (rng.randint(1, 50) for _ in range(n))]
    fl, fm = family_member(lam, n, family), family_member(mu, n, family)
    dl, _ = _t_profile(fl, k, up, False)
    dm, _ = _t_profile(fm, k, up, False)
    al, _ = _t_profile(fl, k, down, True)
    am, _ = _t_profile(fm, k, down, True)
    lp, mp = lam.padded(n), mu.padded(n)
    return {
        "k": k, "family": family,
        "deg_lambda": dl, "deg_mu": dm,
        "prefix_lambda": sum(lp[:k]), "prefix_mu": sum(mp[:k]),
        "decay_lambda": al, "decay_mu": am,
        "suffix_lambda": sum(lp[n - k:]), "suffix_mu": sum(mp[n - k:]),
        "growth_refutes": dl < dm, "decay_refutes": al > am,
        "u_up": [format_scalar(x) for x in up], "u_down": [format_scalar(x) for x in down],
    }
