"""Generators of Muirhead and Jack cones/semirings and the certificates built from them."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import Field, RatFunc, format_scalar, parse_scalar
from ..partitions import Partition, majorizes
from ..symfunc import SymPoly, normalized_monomial


def _label(lam: Partition, n: int) -> str:
    return ",".join(map(str, lam.padded(n)))


@dataclass(frozen=True)
class Generator:
    """kind is one of MonomialDiff, NormalizedMonomial, JackDiff, NormalizedJack, Product."""

    kind: str
    lam: Partition = Partition(())
    mu: Partition = Partition(())
    sigma: object = None
    factors: tuple = ()

    def __post_init__(self):
        if self.kind in ("MonomialDiff", "JackDiff") and not majorizes(self.lam, self.mu):
            raise ValueError(f"{self.lam} does not majorize {self.mu}")

    def degree(self) -> int:
        if self.kind == "Product":
            return sum(f.degree() for f in self.factors)
        return self.lam.size()

    def is_difference(self) -> bool:
        if self.kind == "Product":
            return any(f.is_difference() for f in self.factors)
        return self.kind in ("MonomialDiff", "JackDiff")

    def expand(self, n: int) -> SymPoly:
        if self.kind == "MonomialDiff":
            return normalized_monomial(self.lam, n) - normalized_monomial(self.mu, n)
        if self.kind == "NormalizedMonomial":
            return normalized_monomial(self.lam, n)
        if self.kind in ("JackDiff", "NormalizedJack"):
            from ..jack import normalized_jack

            param = self.sigma if self.sigma is not None else "sigma"
            top = normalized_jack(self.lam, n, param)
            return top - normalized_jack(self.mu, n, param) if self.kind == "JackDiff" else top
        if self.kind == "Product":
            out = self.factors[0].expand(n)
            for f in self.factors[1:]:
                out = out * f.expand(n)
            return out
        raise ValueError(f"unknown generator kind {self.kind!r}")

    def label(self, n: int) -> str:
        if self.kind == "MonomialDiff":
            return f"M({_label(self.lam, n)})-M({_label(self.mu, n)})"
        if self.kind == "NormalizedMonomial":
            return f"M({_label(self.lam, n)})"
        if self.kind == "JackDiff":
            return f"J[{self.sigma}]({_label(self.lam, n)})-J[{self.sigma}]({_label(self.mu, n)})"
        if self.kind == "NormalizedJack":
            return f"J[{self.sigma}]({_label(self.lam, n)})"
        return "prod[" + "; ".join(f.label(n) for f in self.factors) + "]"


def monomial_diff(lam, mu) -> Generator:
    return Generator("MonomialDiff", Partition(lam), Partition(mu))


def normalized_monomial_gen(nu) -> Generator:
    return Generator("NormalizedMonomial", Partition(nu))


def jack_diff(lam, mu, sigma) -> Generator:
    return Generator("JackDiff", Partition(lam), Partition(mu), sigma)


def normalized_jack_gen(nu, sigma) -> Generator:
    return Generator("NormalizedJack", Partition(nu), sigma=sigma)


def product(*factors: Generator) -> Generator:
    return Generator("Product", factors=tuple(factors))


_ATOM = re.compile(r"(M|J\[([^\]]*)\])\(([\d,\s]*)\)")


def _parse_sigma(text: str):
    try:
        return Fraction(text)
    except ValueError:
        return text


def parse_generator(text: str) -> Generator:
    """Inverse of Generator.label."""
    s = text.strip()
    if s.startswith("prod[") and s.endswith("]"):
        return product(*(parse_generator(p) for p in _split_top(s[5:-1])))
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        return parse_generator(s[1:-1])
    atoms = list(_ATOM.finditer(s))
    if len(atoms) == 1 and atoms[0].span() == (0, len(s)):
        a = atoms[0]
        if a.group(1) == "M":
            return normalized_monomial_gen(Partition(a.group(3)))
        return normalized_jack_gen(Partition(a.group(3)), _parse_sigma(a.group(2)))
    if len(atoms) == 2 and s[atoms[0].end():atoms[1].start()].strip() == "-":
        a, b = atoms
        lam, mu = Partition(a.group(3)), Partition(b.group(3))
        if a.group(1) == "M" and b.group(1) == "M":
            return monomial_diff(lam, mu)
        if a.group(2) == b.group(2) and a.group(2) is not None:
            return jack_diff(lam, mu, _parse_sigma(a.group(2)))
    raise ValueError(f"cannot parse generator {text!r}")


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch in "(["
        depth -= ch in ")]"
        if depth < 0:
            return False
    return depth == 0


def _split_top(s: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == ";" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [p.strip() for p in out if p.strip()]


def target_hash(F: SymPoly) -> str:
    payload = json.dumps(F.to_json(), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


@dataclass
class ConeCertificate:
    """F = sum coeff * expand(generator), each coefficient in the named coefficient cone."""

    n: int
    terms: list
    cone: str = "rational"
    target: str = ""
    extra: dict = field(default_factory=dict)

    def combination(self) -> SymPoly:
        out = SymPoly(self.n)
        for g, c in self.terms:
            out = out + g.expand(self.n).scale(c)
        return out

    def to_json(self) -> dict:
        return {"target": self.target, "n": self.n, "cone": self.cone,
                "terms": [{"gen": g.label(self.n), "coeff": format_scalar(c)} for g, c in self.terms]}

    @classmethod
    def from_json(cls, data: dict, field: Field | None = None) -> "ConeCertificate":
        terms = []
        for t in data["terms"]:
            c = parse_scalar(t["coeff"], field)
            if isinstance(c, RatFunc) and c.is_constant():
                c = c.constant_value()
            terms.append((parse_generator(t["gen"]), c))
        return cls(data["n"], terms, data.get("cone", "rational"), data.get("target", ""))


@dataclass
class Infeasible:
    """No nonnegative combination exists; witness is a functional on coordinates separating F from the cone."""

    witness: dict
    reason: str = ""
    point: dict | None = None

    def to_json(self) -> dict:
        return {"verdict": "Infeasible", "reason": self.reason,
                "witness": {str(k): format_scalar(v) for k, v in self.witness.items()},
                "point": {k: str(v) for k, v in (self.point or {}).items()}}


@dataclass
class Unknown:
    reason: str
    max_factors: int | None = None

    def to_json(self) -> dict:
        out = {"verdict": "Unknown", "reason": self.reason}
        if self.max_factors is not None:
            out["max_factors"] = self.max_factors
        return out
