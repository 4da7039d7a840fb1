"""Membership tests for the positivity cones of rational functions.

Jack case: ``f`` is in the cone iff ``f = g/h`` with ``g, h`` polynomials in
tau with nonnegative coefficients.  After reduction this is equivalent to
num and den (with their tau-power factors removed) being strictly positive
on [0, oo) with positive leading coefficient, which is decided with Sturm
sequences.  A Polya multiplier ``(1+tau)^N`` then exhibits the
nonnegative-coefficient representation explicitly.

Macdonald case: ``f(q, t) >= 0`` for ``q, t > 1``.  This is only a
semi-decision: Polya multipliers after ``q = 1+u, t = 1+v`` certify,
exact evaluation on a grid refutes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product

import flint

from .field import Field, Poly, PoleError, RatFunc, to_fmpq, to_fraction
from .sturm import sturm_root_count

DEFAULT_POLYA_BOUND = 64
DEFAULT_QT_POLYA_BOUND = 24
DEFAULT_QT_GRID = tuple(sorted({1 + Fraction(1, 2 ** k) for k in range(7)} | {Fraction(2), Fraction(3), Fraction(5)}))


class Kind(str, enum.Enum):
    IN_CONE = "InCone"
    NOT_IN_CONE = "NotInCone"
    ZERO = "Zero"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PolyaCertificate:
    """``num / den`` equals ``f`` after substituting ``var = shift + u`` and
    dividing by the recorded ``prod (1+u_i)^e_i`` multipliers.

    ``num`` and ``den`` have nonnegative coefficients in the shifted
    variables.  ``sign`` is the common sign pulled out of both.
    """

    variables: tuple[str, ...]
    shift: Fraction
    num_exponents: tuple[int, ...]
    den_exponents: tuple[int, ...]
    num: Poly
    den: Poly
    sign: int = 1

    def reconstruct(self, field: Field) -> RatFunc:
        """The certified function, back in the original indeterminates of ``field``."""
        sf = self.num.field
        mult_n = sf(1)
        mult_d = sf(1)
        for name, e in zip(sf.names, self.num_exponents):
            mult_n = mult_n * (1 + sf.gen(name)) ** e
        for name, e in zip(sf.names, self.den_exponents):
            mult_d = mult_d * (1 + sf.gen(name)) ** e
        shifted = (sf(self.num) * mult_d) / (sf(self.den) * mult_n)
        back = {u: field.gen(v) - self.shift for u, v in zip(sf.names, self.variables)}
        return shifted.subs(back, field=field)

    def check(self, f: RatFunc) -> bool:
        if any(c < 0 for c in self.num.terms.values()) or any(c < 0 for c in self.den.terms.values()):
            return False
        if self.den.is_zero():
            return False
        return self.reconstruct(f.field) == f


@dataclass(frozen=True)
class PositivityVerdict:
    kind: Kind
    certificate: PolyaCertificate | None = None
    witness: tuple[Fraction, ...] | None = None
    effort: int = 0
    reason: str = ""
    certificate_bound_exceeded: bool = False
    extra: dict = dc_field(default_factory=dict, compare=False)

    @property
    def in_cone(self) -> bool:
        return self.kind in (Kind.IN_CONE, Kind.ZERO)

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "effort": self.effort}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = [str(w) for w in self.witness]
        if self.certificate is not None:
            c = self.certificate
            out["certificate"] = {
                "variables": list(c.variables),
                "shift": str(c.shift),
                "num_exponents": list(c.num_exponents),
                "den_exponents": list(c.den_exponents),
                "sign": c.sign,
                "num": str(c.num),
                "den": str(c.den),
            }
        if self.certificate_bound_exceeded:
            out["certificate_bound_exceeded"] = True
        return out


# -- Jack cone: one indeterminate ------------------------------------------


def _single_var(f: RatFunc, var: str | None) -> str:
    used = f.variables()
    if var is None:
        if len(used) > 1:
            raise ValueError(f"expected a function of one indeterminate, got {used}")
        var = used[0] if used else f.field.names[0]
    elif any(u != var for u in used):
        raise ValueError(f"{f} involves indeterminates other than {var}")
    return var


def _to_univariate(p, idx: int) -> flint.fmpq_poly:
    coeffs = {}
    for k, v in p.to_dict().items():
        coeffs[int(k[idx])] = v
    if not coeffs:
        return flint.fmpq_poly([])
    top = max(coeffs)
    return flint.fmpq_poly([coeffs.get(i, 0) for i in range(top + 1)])


def _strip_low_power(p: flint.fmpq_poly) -> tuple[int, flint.fmpq_poly]:
    a = 0
    while p[a] == 0:
        a += 1
    return a, flint.fmpq_poly([p[i] for i in range(a, p.degree() + 1)])


def _strictly_positive_on_halfline(p: flint.fmpq_poly) -> bool:
    return p[0] > 0 and p[p.degree()] > 0 and (p.degree() == 0 or sturm_root_count(p, (0, float("inf"))) == 0)


def _min_polya_exponent(p: flint.fmpq_poly, bound: int) -> int | None:
    one_plus = flint.fmpq_poly([1, 1])
    cur = p
    for k in range(bound + 1):
        if all(cur[i] >= 0 for i in range(cur.degree() + 1)):
            return k
        cur = cur * one_plus
    return None


def _negative_point(num: flint.fmpq_poly, den: flint.fmpq_poly) -> Fraction | None:
    """A positive rational where num/den < 0, if the sign pattern allows one."""
    prod_poly = num * den
    cands = [Fraction(1, 2 ** 20), Fraction(1), Fraction(2 ** 20)]
    roots = []
    for r, _ in flint.fmpz_poly([int(c * prod_poly.denom()) for c in prod_poly.numer().coeffs()]).complex_roots():
        if abs(float(r.imag)) < 1e-30 and float(r.real) > 0:
            roots.append(float(r.real))
    roots.sort()
    pts = [0.0] + roots + [roots[-1] * 2 + 1 if roots else 2.0]
    for lo, hi in zip(pts, pts[1:]):
        cands.append(Fraction((lo + hi) / 2).limit_denominator(10 ** 12))
    for x in cands:
        if x <= 0:
            continue
        v = prod_poly(to_fmpq(x))
        if v < 0:
            return x
    return None


def fp_membership_tau(f: RatFunc, var: str | None = None, polya_bound: int = DEFAULT_POLYA_BOUND) -> PositivityVerdict:
    """Decide whether ``f`` lies in the cone of ratios of nonnegative polynomials."""
    if not isinstance(f, RatFunc):
        f = Field(var or "tau")(f)
    if f.is_zero():
        return PositivityVerdict(Kind.ZERO, effort=0)
    var = _single_var(f, var)
    idx = f.field.names.index(var)
    num = _to_univariate(f._n, idx)
    den = _to_univariate(f._d, idx)
    _, n0 = _strip_low_power(num)
    _, d0 = _strip_low_power(den)
    ok_n = _strictly_positive_on_halfline(n0)
    ok_d = _strictly_positive_on_halfline(d0)
    if not (ok_n and ok_d):
        if n0[n0.degree()] < 0 and _strictly_positive_on_halfline(-n0) and ok_d:
            reason = "negative on (0, oo)"
        elif not ok_n and not ok_d:
            reason = "numerator and denominator vanish or change sign on (0, oo)"
        elif not ok_n:
            reason = "numerator vanishes or changes sign on (0, oo)"
        else:
            reason = "denominator vanishes or changes sign on (0, oo)"
        w = _negative_point(num, den)
        return PositivityVerdict(Kind.NOT_IN_CONE, witness=(w,) if w is not None else None, reason=reason)
    en = _min_polya_exponent(num, polya_bound)
    ed = _min_polya_exponent(den, polya_bound)
    if en is None or ed is None:
        return PositivityVerdict(Kind.IN_CONE, effort=polya_bound, certificate_bound_exceeded=True,
                                 reason="Polya exponent exceeds bound; membership decided from roots")
    sf = Field(var)
    one_plus = flint.fmpq_poly([1, 1])
    pn = num * one_plus ** en
    pd = den * one_plus ** ed
    cert = PolyaCertificate(
        variables=(var,),
        shift=Fraction(0),
        num_exponents=(en,),
        den_exponents=(ed,),
        num=Poly(sf, {(i,): to_fraction(pn[i]) for i in range(pn.degree() + 1)}),
        den=Poly(sf, {(i,): to_fraction(pd[i]) for i in range(pd.degree() + 1)}),
    )
    return PositivityVerdict(Kind.IN_CONE, certificate=cert, effort=max(en, ed))


# -- Macdonald cone: q, t > 1 ------------------------------------------------


def _qt_values(f: RatFunc, names, pts):
    for pt in pts:
        vals = {n: v for n, v in zip(names, pt)}
        try:
            yield pt, f(**{n: vals.get(n, 0) for n in f.field.names})
        except PoleError:
            continue


def _refute_qt(f: RatFunc, names, grid, depth):
    values = {}
    # simplest points first so witnesses are small
    order = sorted(grid, key=lambda x: (x.denominator, x))
    for pt, v in _qt_values(f, names, product(order, repeat=len(names))):
        if v < 0:
            return pt
        values[pt] = v
    # dyadic refinement between neighbouring grid points that are not both positive
    g = sorted(grid)
    for axis in range(len(names)):
        for pt in list(values):
            i = g.index(pt[axis])
            if i + 1 >= len(g):
                continue
            nb = pt[:axis] + (g[i + 1],) + pt[axis + 1:]
            if nb not in values or (values[pt] > 0 and values[nb] > 0):
                continue
            lo, hi = pt[axis], g[i + 1]
            for k in range(1, depth + 1):
                step = (hi - lo) / 2 ** k
                cand = [pt[:axis] + (lo + step * j,) + pt[axis + 1:] for j in range(1, 2 ** k, 2)]
                for c, v in _qt_values(f, names, cand):
                    if v < 0:
                        return c
    return None


def _nonneg(p) -> bool:
    return all(c >= 0 for c in p.coeffs())


def _polya_multi(p, ctx, bound):
    """Smallest total exponent (e_1..e_k) with prod(1+u_i)^e_i * p >= 0 coefficientwise."""
    gens = ctx.gens()
    k = len(gens)
    if _nonneg(p):
        return (0,) * k, p
    if k == 1:
        cur = p
        for e in range(1, bound + 1):
            cur = cur * (1 + gens[0])
            if _nonneg(cur):
                return (e,), cur
        return None
    if k != 2:
        raise NotImplementedError("Polya search implemented for one or two indeterminates")
    u, v = gens
    rows = [p]
    for _ in range(bound):
        rows.append(rows[-1] * (1 + u))
    for total in range(1, bound + 1):
        for i in range(total, -1, -1):
            cur = rows[i] * (1 + v) ** (total - i)
            if _nonneg(cur):
                return (i, total - i), cur
    return None


def fp_membership_qt(f: RatFunc, names: tuple[str, ...] = ("q", "t"), polya_bound: int = DEFAULT_QT_POLYA_BOUND,
                     grid=DEFAULT_QT_GRID, refine_depth: int = 6) -> PositivityVerdict:
    """Semi-decide ``f >= 0`` on ``(1, oo)^k`` for the indeterminates ``names``."""
    if not isinstance(f, RatFunc):
        f = Field(*names)(f)
    if f.is_zero():
        return PositivityVerdict(Kind.ZERO)
    used = f.variables()
    if any(u not in names for u in used):
        raise ValueError(f"{f} involves indeterminates outside {names}")
    if f.is_constant():
        if f.constant_value() > 0:
            sf = Field(*[f"{n}_shift" for n in names])
            c = f.constant_value()
            cert = PolyaCertificate(tuple(names), Fraction(1), (0,) * len(names), (0,) * len(names),
                                    Poly(sf, {(0,) * len(names): c}), Poly.one(sf))
            return PositivityVerdict(Kind.IN_CONE, certificate=cert)
        return PositivityVerdict(Kind.NOT_IN_CONE, witness=tuple(Fraction(2) for _ in names), reason="negative constant")
    w = _refute_qt(f, names, grid, refine_depth)
    if w is not None:
        return PositivityVerdict(Kind.NOT_IN_CONE, witness=tuple(w), reason="negative sample on the open domain")
    src = f.field if set(f.field.names) == set(names) else Field(*names)
    g = f.lift(src) if src is not f.field else f
    sf = Field(*[f"{n}_shift" for n in src.names])
    shifted = g.subs({n: sf.gen(f"{n}_shift") + 1 for n in src.names}, field=sf)
    for sign in (1, -1):
        a = shifted._n * sign
        b = shifted._d * sign
        ra = _polya_multi(a, sf.ctx, polya_bound)
        if ra is None:
            continue
        rb = _polya_multi(b, sf.ctx, polya_bound)
        if rb is None:
            continue
        cert = PolyaCertificate(tuple(src.names), Fraction(1), ra[0], rb[0], Poly(sf, ra[1]), Poly(sf, rb[1]), sign)
        return PositivityVerdict(Kind.IN_CONE, certificate=cert, effort=max(sum(ra[0]), sum(rb[0])))
    return PositivityVerdict(Kind.UNKNOWN, effort=polya_bound, reason="no Polya certificate within bound and no negative sample")

