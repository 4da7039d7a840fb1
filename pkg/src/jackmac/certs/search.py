"""Certificate search: exact LP over cone generators, with parametric coefficients handled by sampling."""

from __future__ import annotations

from fractions import Fraction

from ..exact import Field, Kind, PoleError, RatFunc, fp_membership_qt, fp_membership_tau
from ..partitions import adjacent_pairs, enumerate_partitions
from ..symfunc import SymPoly, to_basis
from .generators import (ConeCertificate, Infeasible, Unknown, monomial_diff, normalized_monomial_gen,
                         product, jack_diff, target_hash)
from .lp import solve_feasibility

DEFAULT_SAMPLES = (Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3), Fraction(1, 3), Fraction(5, 2), Fraction(7))


# -- coefficient cones ------------------------------------------------------------


def coefficient_in_cone(c, cone: str, sigma=None) -> bool:
    """Membership of one certificate coefficient in the coefficient cone.

    cone: "rational" (c >= 0), "tau" (ratio of nonnegative polynomials in tau),
    "qt" (nonnegative for q, t > 1), "tau>=sigma" (nonnegative whenever tau >= sigma >= 0).
    """
    if not c:
        return True
    if not isinstance(c, RatFunc) or c.is_constant():
        v = c.constant_value() if isinstance(c, RatFunc) else Fraction(c)
        return v >= 0
    if cone == "rational":
        return False
    if cone == "tau":
        return fp_membership_tau(c, "tau").kind in (Kind.IN_CONE, Kind.ZERO)
    if cone == "qt":
        return fp_membership_qt(c).kind in (Kind.IN_CONE, Kind.ZERO)
    if cone == "tau>=sigma":
        return _above_sigma(c, sigma)
    raise ValueError(f"unknown coefficient cone {cone!r}")


def _above_sigma(c: RatFunc, sigma) -> bool:
    """c >= 0 for tau >= sigma: substitute tau = sigma + u and look for sign-coherent coefficients."""
    used = set(c.variables())
    if sigma is not None and not isinstance(sigma, str):
        if used - {"tau"}:
            return False
        u = Field("tau").gen("tau")
        shifted = c.subs({"tau": u + Fraction(sigma)}, field=Field("tau"))
        return fp_membership_tau(shifted, "tau").kind in (Kind.IN_CONE, Kind.ZERO)
    fld = Field("u", "sigma")
    u, s = fld.gens()
    image = {"tau": u + s}
    if "sigma" in c.field.names:
        image["sigma"] = s
    shifted = c.subs(image, field=fld)
    return _same_sign(shifted.num) and _same_sign(shifted.den)


def _same_sign(p) -> bool:
    vals = list(p.terms.values())
    return all(v > 0 for v in vals) or all(v < 0 for v in vals)


# -- linear algebra over exact scalars -----------------------------------------------


def _solve_columns(A: list, b: list):
    """Solve A y = b exactly (A has independent columns); None if inconsistent."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [list(A[i]) + [b[i]] for i in range(rows)]
    piv_rows = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c]), None)
        if p is None:
            return None
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[r])]
        piv_rows.append(r)
        r += 1
    if any(M[i][-1] for i in range(r, rows)):
        return None
    return [M[i][-1] for i in piv_rows]


def _variables(values) -> set:
    out = set()
    for v in values:
        if isinstance(v, RatFunc):
            out |= set(v.variables())
    return out


def _at(v, point: dict):
    if not isinstance(v, RatFunc):
        return Fraction(v)
    names = v.field.names
    return v(**{nm: point.get(nm, Fraction(1)) for nm in names})


def _sample_points(names: list, cone: str, samples=DEFAULT_SAMPLES):
    """Points inside the region where cone coefficients must be nonnegative."""
    names = sorted(names)
    if cone == "qt":
        samples = [s for s in samples if s > 1] or [Fraction(2), Fraction(3)]
    if not names:
        return [{}]
    if len(names) == 1:
        return [{names[0]: s} for s in samples]
    pts = []
    for a in samples:
        for b in samples:
            pt = dict(zip(names, (a, b)))
            if cone == "tau>=sigma" and "tau" in pt and "sigma" in pt and pt["tau"] < pt["sigma"]:
                continue
            pts.append(pt)
    return pts


# -- positive charts: exact per-monomial matching -------------------------------------


def _chart(cone: str, source: Field | None, sigma=None):
    """(chart field, forward images, backward images, target field) for a coefficient cone.

    In the chart every indeterminate ranges over [0, oo), so a polynomial with
    nonnegative coefficients there lies in the cone.
    """
    if cone == "tau":
        fld = Field("tau")
        return fld, {"tau": fld.gen("tau")}, {"tau": fld.gen("tau")}, fld
    if cone == "qt":
        fld, qt = Field("u", "v"), Field("q", "t")
        u, v = fld.gens()
        q, t = qt.gens()
        return fld, {"q": 1 + u, "t": 1 + v}, {"u": q - 1, "v": t - 1}, qt
    if cone == "tau>=sigma" and (sigma is None or isinstance(sigma, str)):
        fld, two = Field("u", "sigma"), Field("tau", "sigma")
        u, s = fld.gens()
        tau, sg = two.gens()
        return fld, {"tau": u + s, "sigma": s}, {"u": tau - sg, "sigma": sg}, two
    if cone == "tau>=sigma":
        fld, one = Field("u"), Field("tau")
        return fld, {"tau": fld.gen("u") + Fraction(sigma)}, {"u": one.gen("tau") - Fraction(sigma)}, one
    raise ValueError(f"no chart for cone {cone!r}")


def _to_chart(c, fld: Field, forward: dict):
    if not isinstance(c, RatFunc):
        return fld(c)
    return c.subs({k: v for k, v in forward.items() if k in c.field.names}, field=fld)


def _chart_lp(vectors: list, target: list, cone: str, sigma=None):
    """Solve sum y_g v_g = target with y_g = (poly with nonnegative chart coefficients) / D.

    D is a sign-coherent common denominator of the target.  The generator vectors
    are rational, so each chart monomial gives an independent rational LP.
    Returns the coefficient list or None when some monomial LP is infeasible.
    """
    if any(isinstance(x, RatFunc) and not x.is_constant() for v in vectors for x in v):
        return None
    fld, forward, back, home = _chart(cone, None, sigma)
    chart = [_to_chart(c, fld, forward) for c in target]
    D = fld(1)
    for c in chart:
        r = c * D
        if not r.is_polynomial():
            D = D * r.den
    if not _same_sign(D.num):
        return None
    if D.num.leading_coefficient() < 0:
        D = -D
    nums = [(c * D).num for c in chart]
    monos = sorted({e for p in nums for e in p.terms})
    cols = len(vectors)
    y = [fld(0)] * cols
    for e in monos:
        b = [p.terms.get(e, Fraction(0)) for p in nums]
        A = [[Fraction(vectors[g][i]) for g in range(cols)] for i in range(len(target))]
        res = solve_feasibility(A, b)
        if not res.feasible:
            return None
        mono = fld(1)
        for name, k in zip(fld.names, e):
            mono = mono * fld.gen(name) ** k
        for g, x in enumerate(res.x):
            if x:
                y[g] = y[g] + mono * x
    out = []
    for c in y:
        r = (c / D).subs(back, field=home) if c else 0
        if isinstance(r, RatFunc) and r.is_constant():
            r = r.constant_value()
        out.append(r)
    return out


# -- core LP driver -------------------------------------------------------------------


def _cone_lp(vectors: list, target: list, index: list, cone: str, sigma=None, samples=DEFAULT_SAMPLES):
    """Find nonnegative (in the coefficient cone) y with sum y_g vectors[g] = target.

    Returns (coefficients list, None) on success, (None, Infeasible) when refuted at a
    sample point, (None, Unknown) when no sampled basis survives symbolic checking.
    """
    cols = len(vectors)
    A = [[vectors[g][i] for g in range(cols)] for i in range(len(index))]
    names = _variables([v for row in A for v in row] + list(target))
    if not names:
        res = solve_feasibility(A, target)
        if res.feasible:
            return res.x, None
        return None, Infeasible({index[i]: w for i, w in enumerate(res.witness)}, "no nonnegative combination")
    if cone != "rational":
        y = _chart_lp(vectors, target, cone, sigma)
        if y is not None:
            return y, None
    tried = set()
    for pt in _sample_points(list(names), cone, samples):
        try:
            An = [[_at(v, pt) for v in row] for row in A]
            bn = [_at(v, pt) for v in target]
        except PoleError:
            continue
        res = solve_feasibility(An, bn)
        if not res.feasible:
            if cone in ("tau", "qt", "tau>=sigma"):
                return None, Infeasible({index[i]: w for i, w in enumerate(res.witness)},
                                        "no nonnegative combination at a sample point", pt)
            continue
        support = tuple(sorted(j for j in res.basis if j < cols))
        if support in tried:
            continue
        tried.add(support)
        sub = [[row[j] for j in support] for row in A]
        y = _solve_columns(sub, list(target)) if support else ([] if not any(target) else None)
        if y is None:
            continue
        if all(coefficient_in_cone(c, cone, sigma) for c in y):
            out = [0] * cols
            for j, c in zip(support, y):
                out[j] = c.constant_value() if isinstance(c, RatFunc) and c.is_constant() else c
            return out, None
    return None, Unknown("no sampled basis gave cone coefficients symbolically")


# -- Muirhead cone and semiring --------------------------------------------------------


def _check_target(F: SymPoly):
    if not F.is_homogeneous():
        raise ValueError("target must be homogeneous")
    if F and F.eval_ones() != 0:
        raise ValueError("target must vanish at (1, ..., 1)")


def _m_vector(f: SymPoly, index) -> list:
    M = to_basis(f, "M")
    return [M[lam] for lam in index]


def muirhead_generators(d: int, n: int, max_factors: int = 1) -> list:
    """Adjacent differences, then products of at most max_factors factors containing a difference."""
    gens = [monomial_diff(l, m) for l, m in sorted(adjacent_pairs(d, n))]
    if max_factors < 2:
        return gens
    atoms = {}
    for k in range(1, d):
        diffs = [monomial_diff(l, m) for l, m in sorted(adjacent_pairs(k, n))]
        monos = [normalized_monomial_gen(nu) for nu in sorted(enumerate_partitions(k, n))]
        atoms[k] = diffs + monos
    out = list(gens)
    seen = set()
    for nf in range(2, max_factors + 1):
        for degs in _compositions(d, nf):
            pools = [atoms[k] for k in degs]
            for combo in _choose(pools):
                if not any(g.is_difference() for g in combo):
                    continue
                key = tuple(sorted((g.kind, g.lam, g.mu) for g in combo))
                if key in seen:
                    continue
                seen.add(key)
                out.append(product(*combo))
    return out


def _compositions(d: int, parts: int):
    """Weakly decreasing degree splits of d into `parts` positive pieces."""
    def rec(rem, k, cap):
        if k == 1:
            if 1 <= rem <= cap:
                yield (rem,)
            return
        for first in range(min(rem - (k - 1), cap), 0, -1):
            for rest in rec(rem - first, k - 1, first):
                yield (first,) + rest
    yield from rec(d, parts, d - 1)


def _choose(pools):
    if not pools:
        yield ()
        return
    for g in pools[0]:
        for rest in _choose(pools[1:]):
            yield (g,) + rest


def _generator_vectors(gens: list, n: int, index) -> list:
    pos = {lam: i for i, lam in enumerate(index)}
    out = []
    for g in gens:
        if g.kind == "MonomialDiff":
            v = [Fraction(0)] * len(index)
            v[pos[g.lam]] += 1
            v[pos[g.mu]] -= 1
        else:
            v = _m_vector(g.expand(n), index)
        out.append(v)
    return out


def _coefficient_cone_of(F: SymPoly) -> str:
    names = _variables(F.coeffs.values())
    if not names:
        return "rational"
    if names <= {"tau"}:
        return "tau"
    if names <= {"q", "t"}:
        return "qt"
    raise ValueError(f"no default coefficient cone for parameters {sorted(names)}")


def _muirhead(F: SymPoly, cone, max_factors, samples):
    _check_target(F)
    cone = cone or _coefficient_cone_of(F)
    if not F:
        return ConeCertificate(F.n, [], cone, target_hash(F))
    d, n = F.degree(), F.n
    index = list(enumerate_partitions(d, n))
    gens = muirhead_generators(d, n, max_factors)
    vecs = _generator_vectors(gens, n, index)
    coeffs, fail = _cone_lp(vecs, _m_vector(F, index), index, cone, samples=samples)
    if fail is not None:
        return fail
    terms = [(g, c) for g, c in zip(gens, coeffs) if c]
    return ConeCertificate(n, terms, cone, target_hash(F), {"max_factors": max_factors})


def muirhead_cone_cert(F: SymPoly, cone: str | None = None, samples=DEFAULT_SAMPLES):
    """F as a cone-coefficient combination of adjacent differences M_lam - M_mu, or Infeasible."""
    return _muirhead(F, cone, 1, samples)


def muirhead_semiring_cert(F: SymPoly, cone: str | None = None, max_factors: int = 2, samples=DEFAULT_SAMPLES):
    """Adds products of at most max_factors factors; failure is Unknown (membership not refuted)."""
    out = _muirhead(F, cone, max_factors, samples)
    if isinstance(out, Infeasible):
        return Unknown(f"no certificate with at most {max_factors} factors ({out.reason})", max_factors)
    if isinstance(out, Unknown):
        out.max_factors = max_factors
    return out


# -- Jack cone with a second parameter --------------------------------------------------


def jack_cone_cert(F: SymPoly, sigma="sigma", samples=DEFAULT_SAMPLES):
    """F as a combination of normalized sigma-Jack differences over adjacent pairs.

    Coefficients must be nonnegative in the regime tau >= sigma >= 0.  Returns a
    ConeCertificate, Infeasible (refuted at a sample point, or for rational data) or Unknown.
    """
    from ..jack import normalized_jack
    from ..jack.two_rows import TWO, _lift
    from ..symfunc import expansion_in

    _check_target(F)
    n = F.n
    if not F:
        return ConeCertificate(n, [], "tau>=sigma", target_hash(F))
    d = F.degree()
    index = list(enumerate_partitions(d, n))
    symbolic = isinstance(sigma, str)
    if symbolic:
        G = F.map_coeffs(lambda c: _lift(c, TWO), TWO)
        elements = {nu: normalized_jack(nu, n, sigma).map_coeffs(lambda c: _lift(c, TWO), TWO) for nu in index}
    else:
        G = F
        elements = {nu: normalized_jack(nu, n, Fraction(sigma)) for nu in index}
    coords = expansion_in(G, elements)
    target = [coords.get(nu, 0) for nu in index]
    gens = [jack_diff(l, m, sigma) for l, m in sorted(adjacent_pairs(d, n))]
    pos = {lam: i for i, lam in enumerate(index)}
    vecs = []
    for g in gens:
        v = [Fraction(0)] * len(index)
        v[pos[g.lam]] += 1
        v[pos[g.mu]] -= 1
        vecs.append(v)
    names = _variables(target)
    cone = "rational" if not names else "tau>=sigma"
    coeffs, fail = _cone_lp(vecs, target, index, cone, sigma=None if symbolic else sigma, samples=samples)
    if fail is not None:
        if isinstance(fail, Infeasible):
            fail.extra_coordinates = coords
        return fail
    terms = [(g, c) for g, c in zip(gens, coeffs) if c]
    return ConeCertificate(n, terms, cone, target_hash(F), {"sigma": sigma, "coordinates": coords})


# -- verification -------------------------------------------------------------------------


def verify_certificate(cert: ConeCertificate, F: SymPoly) -> bool:
    """Re-expand every generator, compare the combination with F exactly and re-check every coefficient."""
    if not isinstance(cert, ConeCertificate):
        return False
    if cert.n != F.n:
        return False
    for g, _ in cert.terms:
        if g.degree() != F.degree():
            return False
        if g.kind == "Product" and "max_factors" in cert.extra and len(g.factors) > cert.extra["max_factors"]:
            return False
    if cert.combination() != F:
        return False
    sigma = cert.extra.get("sigma")
    return all(coefficient_in_cone(c, cert.cone, None if isinstance(sigma, str) else sigma) for _, c in cert.terms)
