"""Symmetric polynomials in n variables, stored in the monomial basis."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..exact import Field, Poly, RatFunc, common_field, format_scalar, parse_scalar
from ..partitions import Partition, parse_partition


def _field_of(c):
    return c.field if isinstance(c, RatFunc) else None


def _join_fields(a: Field | None, b: Field | None) -> Field | None:
    if a is None:
        return b
    if b is None:
        return a
    return common_field(a, b)


def _clean(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v}


@lru_cache(maxsize=None)
def orbit(lam: Partition, n: int) -> tuple[tuple[int, ...], ...]:
    """Distinct permutations of lam padded to length n."""
    base = sorted(lam.padded(n), reverse=True)
    out = []

    def rec(counts, prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in sorted(counts, reverse=True):
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                rec(counts, prefix)
                prefix.pop()
                counts[v] += 1

    counts: dict[int, int] = {}
    for v in base:
        counts[v] = counts.get(v, 0) + 1
    rec(counts, [])
    return tuple(out)


@lru_cache(maxsize=None)
def orbit_size(lam: Partition, n: int) -> int:
    """m_lam(1, ..., 1) = n! / prod (multiplicities, zeros included)!"""
    mult = Partition(lam).multiplicities()
    mult[0] = n - len(lam)
    out = factorial(n)
    for m in mult.values():
        out //= factorial(m)
    return out


class SymPoly:
    """sum_lam coeffs[lam] * m_lam(x_1, ..., x_n).

    Coefficients are Fractions, or RatFuncs of a single field ``field``.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "coeffs", "field")

    def __init__(self, n: int, coeffs=None, field: Field | None = None):
        self.n = n
        clean = {}
        fld = field
        for k, v in (coeffs or {}).items():
            k = Partition(k)
            if len(k) > n:
                raise ValueError(f"partition {k} is longer than n={n}")
            if not isinstance(v, RatFunc):
                v = Fraction(v)
            if v:
                clean[k] = v
                fld = _join_fields(fld, _field_of(v))
        self.field = fld
        self.coeffs = clean

    @classmethod
    def _raw(cls, n, coeffs, field):
        obj = object.__new__(cls)
        obj.n, obj.coeffs, obj.field = n, coeffs, field
        return obj

    # -- structure -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, lam):
        return self.coeffs.get(Partition(lam), Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def degrees(self) -> set[int]:
        return {k.size() for k in self.coeffs}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "SymPoly":
        return SymPoly._raw(self.n, {k: v for k, v in self.coeffs.items() if k.size() == d}, self.field)

    def map_coeffs(self, fn, field: Field | None = None) -> "SymPoly":
        return SymPoly(self.n, {k: fn(v) for k, v in self.coeffs.items()}, field)

    def subs(self, mapping: dict, field: Field | None = None) -> "SymPoly":
        """Substitute parameters in every coefficient; constants collapse to Fractions."""

        def sub(c):
            if not isinstance(c, RatFunc):
                return c
            r = c.subs({k: v for k, v in mapping.items() if k in c.field.names}, field=field)
            return r.constant_value() if r.is_constant() else r

        return self.map_coeffs(sub)

    def restrict(self, n: int) -> "SymPoly":
        """Set x_{n+1} = ... = 0."""
        return SymPoly._raw(n, {k: v for k, v in self.coeffs.items() if len(k) <= n}, self.field)

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "SymPoly"):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        return _join_fields(self.field, other.field)

    def __add__(self, other):
        if isinstance(other, SymPoly):
            f = self._check(other)
            out = dict(self.coeffs)
            for k, v in other.coeffs.items():
                out[k] = out[k] + v if k in out else v
            return SymPoly._raw(self.n, _clean(out), f)
        if other == 0:
            return self
        return self + SymPoly(self.n, {Partition(()): other})

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._raw(self.n, {k: -v for k, v in self.coeffs.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SymPoly":
        if not c:
            return SymPoly(self.n)
        return SymPoly._raw(self.n, _clean({k: v * c for k, v in self.coeffs.items()}),
                            _join_fields(self.field, _field_of(c)))

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return mul(self, other)
        return self.scale(other if isinstance(other, RatFunc) else Fraction(other))

    __rmul__ = __mul__

    def __truediv__(self, c):
        inv = 1 / c if isinstance(c, RatFunc) else 1 / Fraction(c)
        return self.scale(inv)

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            return self.n == other.n and (self - other).is_zero()
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs)))

    def __repr__(self):
        return f"SymPoly(n={self.n}, {self.pretty()})"

    def pretty(self, name: str = "m") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.items():
            lab = f"{name}[{k}]"
            if v == 1:
                parts.append(lab)
            else:
                txt = format_scalar(v)
                parts.append(f"{txt} {lab}" if txt.lstrip("-").isdigit() else f"({txt}) {lab}")
        return " + ".join(parts)

    # -- evaluation ----------------------------------------------------
    def eval(self, point):
        """Exact value at a point given as n scalars."""
        point = list(point)
        if len(point) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        total = Fraction(0)
        for lam, c in self.coeffs.items():
            s = 0
            for a in orbit(lam, self.n):
                term = 1
                for x, e in zip(point, a):
                    if e:
                        term = term * x ** e
                s = s + term
            total = total + c * s
        return total

    def eval_ones(self):
        total = Fraction(0)
        for lam, c in self.coeffs.items():
            total = total + c * orbit_size(lam, self.n)
        return total

    def to_poly(self, names=None) -> Poly:
        """Expand into an ordinary polynomial in x1..xn (rational coefficients only)."""
        if self.field is not None:
            raise ValueError("to_poly needs rational coefficients; substitute parameters first")
        names = names or tuple(f"x{i}" for i in range(1, self.n + 1))
        fld = Field(*names)
        terms = {}
        for lam, c in self.coeffs.items():
            for a in orbit(lam, self.n):
                terms[a] = terms.get(a, 0) + c
        return Poly(fld, terms)

    def shift_ones(self) -> "SymPoly":
        """The symmetric polynomial x -> f(x_1 + 1, ..., x_n + 1)."""
        out: dict = {}
        for lam, c in self.coeffs.items():
            for nu, k in _shift_table(lam, self.n).items():
                out[nu] = out[nu] + c * k if nu in out else c * k
        return SymPoly._raw(self.n, _clean(out), self.field)

    def to_json(self) -> dict:
        out = {"basis": "m", "n": self.n,
               "terms": [{"partition": str(k), "coeff": format_scalar(v)} for k, v in self.items()]}
        if self.field is not None:
            out["field"] = list(self.field.names)
        return out

    @classmethod
    def from_json(cls, data: dict, field: Field | None = None) -> "SymPoly":
        """Inverse of to_json (monomial basis only)."""
        if data.get("basis", "m") != "m":
            raise ValueError("from_json reads monomial-basis data; use BasisExpansion.from_json otherwise")
        if field is None and data.get("field"):
            field = Field(*data["field"])
        coeffs = {}
        for t in data["terms"]:
            c = parse_scalar(t["coeff"], field)
            coeffs[parse_partition(t["partition"])] = c
        return cls(data["n"], coeffs, field)


@lru_cache(maxsize=None)
def _shift_table(lam: Partition, n: int) -> dict:
    """Monomial coefficients of m_lam(x + 1): for each orbit point a, add prod C(a_i, b_i) at sorted b <= a."""
    out: dict = {}
    for a in orbit(lam, n):
        def rec(i, prev, acc, prod):
            if i == n:
                nu = Partition(acc)
                out[nu] = out.get(nu, 0) + prod
                return
            for b in range(min(a[i], prev), -1, -1):
                rec(i + 1, b, acc + (b,), prod * comb(a[i], b))

        rec(0, max(a) if a else 0, (), 1)
    return out


@lru_cache(maxsize=100000)
def monomial_product(lam: Partition, mu: Partition, n: int) -> tuple:
    """m_lam * m_mu = sum_nu c_nu m_nu, returned as ((nu, c_nu), ...)."""
    base = lam.padded(n)
    hits: dict = {}
    for b in orbit(mu, n):
        nu = Partition(sorted((x + y for x, y in zip(base, b)), reverse=True))
        hits[nu] = hits.get(nu, 0) + 1
    ol = orbit_size(lam, n)
    return tuple((nu, ol * h // orbit_size(nu, n)) for nu, h in hits.items())


def mul(a: SymPoly, b: SymPoly) -> SymPoly:
    f = a._check(b)
    out: dict = {}
    for lam, c in a.coeffs.items():
        for mu, d in b.coeffs.items():
            cd = c * d
            for nu, k in monomial_product(lam, mu, a.n):
                v = cd * k
                out[nu] = out[nu] + v if nu in out else v
    return SymPoly._raw(a.n, _clean(out), f)
