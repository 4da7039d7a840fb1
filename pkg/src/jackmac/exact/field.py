"""Polynomials and rational functions over Q in named indeterminates.

The arithmetic is delegated to FLINT's sparse multivariate polynomials
(``fmpq_mpoly``) with graded-lex term order; this module adds canonical
forms, field bookkeeping, substitution and evaluation on top.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint


class FieldMismatchError(ValueError):
    pass


class PoleError(ZeroDivisionError):
    pass


def to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Rational):
        return flint.fmpq(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    return Fraction(x)


_RATIONAL_TYPES = (int, Fraction, flint.fmpq)


class Field:
    """The field Q(v1, ..., vk) for a fixed ordered tuple of names."""

    _cache: dict[tuple[str, ...], "Field"] = {}

    def __new__(cls, *names: str):
        if len(names) == 1 and isinstance(names[0], (tuple, list)):
            names = tuple(names[0])
        names = tuple(names)
        if not names:
            raise ValueError("a field needs at least one indeterminate")
        if len(set(names)) != len(names):
            raise ValueError(f"repeated indeterminate in {names}")
        obj = cls._cache.get(names)
        if obj is None:
            obj = super().__new__(cls)
            obj.names = names
            obj.ctx = flint.fmpq_mpoly_ctx.get(names, "deglex")
            cls._cache[names] = obj
        return obj

    def __reduce__(self):
        return (Field, self.names)

    def __repr__(self):
        return f"Field{self.names}"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def gen(self, name: str) -> "RatFunc":
        return RatFunc._raw(self, self.ctx.gen(self.names.index(name)), self.ctx.constant(1))

    def gens(self) -> tuple["RatFunc", ...]:
        one = self.ctx.constant(1)
        return tuple(RatFunc._raw(self, g, one) for g in self.ctx.gens())

    def __call__(self, x) -> "RatFunc":
        """Coerce a rational, Poly or RatFunc into this field."""
        if isinstance(x, RatFunc):
            return x if x.field is self else x.lift(self)
        if isinstance(x, Poly):
            return RatFunc(x.lift(self), Poly.one(self))
        return RatFunc._raw(self, self.ctx.constant(to_fmpq(x)), self.ctx.constant(1))

    def zero(self) -> "RatFunc":
        return self(0)

    def one(self) -> "RatFunc":
        return self(1)

    def contains(self, other: "Field") -> bool:
        return set(other.names) <= set(self.names)

    def parse(self, text: str) -> "RatFunc":
        from .text import parse_ratfunc

        return parse_ratfunc(text, self)


@lru_cache(maxsize=None)
def common_field(a: Field, b: Field) -> Field:
    if a is b or a.contains(b):
        return a
    if b.contains(a):
        return b
    raise FieldMismatchError(f"incompatible coefficient fields {a.names} and {b.names}")


def _lift_raw(p, src: Field, dst: Field):
    if src is dst:
        return p
    if not dst.contains(src):
        raise FieldMismatchError(f"cannot embed {src.names} into {dst.names}")
    return p.project_to_context(dst.ctx)


class Poly:
    """Polynomial with rational coefficients; terms keyed by exponent vectors."""

    __slots__ = ("field", "_p")

    def __init__(self, field: Field, terms=None):
        self.field = field
        if terms is None:
            self._p = field.ctx.constant(0)
        elif isinstance(terms, dict):
            clean = {tuple(k): to_fmpq(v) for k, v in terms.items() if v != 0}
            for k in clean:
                if len(k) != field.nvars:
                    raise ValueError(f"exponent vector {k} does not match {field.names}")
            self._p = field.ctx.from_dict(clean) if clean else field.ctx.constant(0)
        else:
            self._p = terms

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, field.ctx.constant(1))

    @classmethod
    def gen(cls, field: Field, name: str) -> "Poly":
        return cls(field, field.ctx.gen(field.names.index(name)))

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {tuple(int(e) for e in k): to_fraction(v) for k, v in self._p.to_dict().items()}

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def degree(self, name: str | None = None) -> int:
        if self._p.is_zero():
            return -1
        if name is None:
            return int(self._p.total_degree())
        return int(self._p.degrees()[self.field.names.index(name)])

    def leading_coefficient(self) -> Fraction:
        return to_fraction(self._p.leading_coefficient())

    def lift(self, field: Field) -> "Poly":
        return Poly(field, _lift_raw(self._p, self.field, field))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is self.field:
                return self, other._p
            f = common_field(self.field, other.field)
            return self.lift(f), _lift_raw(other._p, other.field, f)
        if isinstance(other, _RATIONAL_TYPES):
            return self, to_fmpq(other)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Poly(a.field, a._p + b)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, -self._p)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Poly(a.field, a._p - b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Poly(a.field, a._p * b)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return Poly(self.field, self._p ** k)

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a._p == b

    def __hash__(self):
        return hash((self.field.names, str(self._p)))

    def __call__(self, *point):
        return to_fraction(self._p(*[to_fmpq(x) for x in point]))

    def __repr__(self):
        from .text import format_poly

        return f"Poly({format_poly(self)})"

    def __str__(self):
        from .text import format_poly

        return format_poly(self)

    def univariate_coeffs(self, name: str | None = None) -> list[Fraction]:
        """Dense coefficient list (constant term first) in one indeterminate."""
        if name is None:
            if self.field.nvars != 1:
                raise ValueError("polynomial is not univariate")
            idx = 0
        else:
            idx = self.field.names.index(name)
        out: list[Fraction] = []
        for k, v in self._p.to_dict().items():
            if any(e for i, e in enumerate(k) if i != idx):
                raise ValueError("polynomial involves other indeterminates")
            e = int(k[idx])
            if e >= len(out):
                out.extend([Fraction(0)] * (e + 1 - len(out)))
            out[e] = to_fraction(v)
        return out


def _normalize(field: Field, num, den):
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return field.ctx.constant(0), field.ctx.constant(1)
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


class RatFunc:
    """Element of Q(v1..vk) kept as num/den in lowest terms with monic den."""

    __slots__ = ("field", "_n", "_d")

    def __init__(self, num, den=None, field: Field | None = None):
        if isinstance(num, Poly):
            field = field or num.field
            n = _lift_raw(num._p, num.field, field)
        else:
            if field is None:
                raise ValueError("field required")
            n = field.ctx.constant(to_fmpq(num))
        if den is None:
            d = field.ctx.constant(1)
        elif isinstance(den, Poly):
            d = _lift_raw(den._p, den.field, field)
        else:
            d = field.ctx.constant(to_fmpq(den))
        self.field = field
        self._n, self._d = _normalize(field, n, d)

    @classmethod
    def _raw(cls, field, n, d):
        obj = object.__new__(cls)
        obj.field = field
        obj._n = n
        obj._d = d
        return obj

    @classmethod
    def _make(cls, field, n, d):
        n, d = _normalize(field, n, d)
        return cls._raw(field, n, d)

    # -- structure -----------------------------------------------------
    @property
    def num(self) -> Poly:
        return Poly(self.field, self._n)

    @property
    def den(self) -> Poly:
        return Poly(self.field, self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_constant(self) -> bool:
        return self._n.is_constant() and self._d.is_constant()

    def is_polynomial(self) -> bool:
        return self._d.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return to_fraction(self._n.leading_coefficient()) if not self._n.is_zero() else Fraction(0)

    def lift(self, field: Field) -> "RatFunc":
        if field is self.field:
            return self
        return RatFunc._raw(field, _lift_raw(self._n, self.field, field), _lift_raw(self._d, self.field, field))

    def variables(self) -> tuple[str, ...]:
        used = set()
        for p in (self._n, self._d):
            for i, d in enumerate(p.degrees()):
                if d:
                    used.add(i)
        return tuple(self.field.names[i] for i in sorted(used))

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is self.field:
                return self, other
            f = common_field(self.field, other.field)
            return self.lift(f), other.lift(f)
        if isinstance(other, _RATIONAL_TYPES):
            ctx = self.field.ctx
            return self, RatFunc._raw(self.field, ctx.constant(to_fmpq(other)), ctx.constant(1))
        if isinstance(other, Poly):
            f = common_field(self.field, other.field)
            return self.lift(f), RatFunc._raw(f, _lift_raw(other._p, other.field, f), f.ctx.constant(1))
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if b._n.is_zero():
            return a
        if a._n.is_zero():
            return b
        if a._d.is_one() and b._d.is_one():
            return RatFunc._raw(a.field, a._n + b._n, a._d)
        if a._d == b._d:
            return RatFunc._make(a.field, a._n + b._n, a._d)
        g = a._d.gcd(b._d)
        if g.is_one():
            return RatFunc._make(a.field, a._n * b._d + b._n * a._d, a._d * b._d)
        ad, bd = a._d / g, b._d / g
        n = a._n * bd + b._n * ad
        return RatFunc._make(a.field, n, a._d * bd)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(self.field, -self._n, self._d)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if a._n.is_zero() or b._n.is_zero():
            return RatFunc._raw(a.field, a.field.ctx.constant(0), a.field.ctx.constant(1))
        if a._d.is_one() and b._d.is_one():
            return RatFunc._raw(a.field, a._n * b._n, a._d)
        if b.is_constant():
            c = b._n.leading_coefficient() / b._d.leading_coefficient()
            return RatFunc._raw(a.field, a._n * c, a._d)
        if a.is_constant():
            c = a._n.leading_coefficient() / a._d.leading_coefficient()
            return RatFunc._raw(a.field, b._n * c, b._d)
        g1 = a._n.gcd(b._d)
        g2 = b._n.gcd(a._d)
        n = (a._n / g1) * (b._n / g2)
        d = (a._d / g2) * (b._d / g1)
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return RatFunc._raw(a.field, n, d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc._make(self.field, self._d, self._n)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.field, self._n ** k, self._d ** k)

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a._n == b._n and a._d == b._d

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((str(self._n), str(self._d)))

    def __bool__(self):
        return not self._n.is_zero()

    # -- evaluation / substitution -------------------------------------
    def __call__(self, *point, **named):
        """Evaluate at a full rational point (positional or by name)."""
        if named:
            point = tuple(named[nm] for nm in self.field.names)
        vals = [to_fmpq(x) for x in point]
        d = self._d(*vals)
        if d == 0:
            raise PoleError(f"pole of {self} at {point}")
        return to_fraction(self._n(*vals) / d)

    def subs(self, mapping: dict, field: Field | None = None) -> "RatFunc":
        """Substitute indeterminates by rationals, polynomials or rational functions.

        Indeterminates missing from ``mapping`` are kept. The result lives in
        ``field`` (default: this field, or the common field of the images).
        """
        images = {}
        targets = [self.field]
        for name, val in mapping.items():
            if name not in self.field.names:
                raise KeyError(f"{name} is not an indeterminate of {self.field.names}")
            if isinstance(val, (RatFunc, Poly)):
                targets.append(val.field)
            images[name] = val
        if field is None:
            field = targets[0]
            for f in targets[1:]:
                field = common_field(field, f) if not f.contains(field) else f
        full = []
        for name in self.field.names:
            v = images.get(name)
            if v is None:
                v = field.gen(name)
            elif not isinstance(v, RatFunc):
                v = field(v)
            else:
                v = v.lift(field)
            full.append(v)
        if all(v.is_polynomial() for v in full):
            polys = [v._n for v in full]
            n = self._n.compose(*polys, ctx=field.ctx)
            d = self._d.compose(*polys, ctx=field.ctx)
            if d.is_zero():
                raise PoleError(f"substitution {mapping} annihilates the denominator of {self}")
            return RatFunc._make(field, n, d)
        n = _eval_raw_poly(self._n, full, field)
        d = _eval_raw_poly(self._d, full, field)
        if d.is_zero():
            raise PoleError(f"substitution {mapping} annihilates the denominator of {self}")
        return n / d

    def __repr__(self):
        from .text import format_ratfunc

        return f"RatFunc({format_ratfunc(self)})"

    def __str__(self):
        from .text import format_ratfunc

        return format_ratfunc(self)


def _eval_raw_poly(p, images: list[RatFunc], field: Field) -> RatFunc:
    powers: dict[tuple[int, int], RatFunc] = {}

    def pw(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    total = field(0)
    for k, c in p.to_dict().items():
        term = field(c)
        for i, e in enumerate(k):
            if e:
                term = term * pw(i, int(e))
        total = total + term
    return total


def is_scalar(x) -> bool:
    return isinstance(x, (_RATIONAL_TYPES, RatFunc))


def scalar_field(x) -> Field | None:
    return x.field if isinstance(x, RatFunc) else None
