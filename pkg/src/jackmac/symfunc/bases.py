"""Classical bases (m, M, e, h, p, s) and conversions between them."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import flint

from ..exact import RatFunc, format_scalar, parse_scalar, to_fraction
from ..partitions import Partition, enumerate_partitions
from .sympoly import SymPoly, orbit_size


def monomial(lam, n: int) -> SymPoly:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} is longer than n={n}")
    return SymPoly._raw(n, {lam: Fraction(1)}, None)


def normalized_monomial(lam, n: int) -> SymPoly:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} is longer than n={n}")
    return SymPoly._raw(n, {lam: Fraction(1, orbit_size(lam, n))}, None)


def _count_fillings(parts, target, box_cap=None) -> int:
    """Ways to distribute each part into the coordinates of target with exact column sums.

    With box_cap=None a part lands in a single coordinate (power sums); with
    box_cap=1 a part k is spread as k distinct unit entries (elementary); with
    box_cap=0 a part is spread freely as a weak composition (complete).
    """
    L = len(target)
    states = {tuple([0] * L): 1}
    for k in parts:
        nxt: dict = {}
        for st, c in states.items():
            for new in _spread(st, k, target, box_cap):
                nxt[new] = nxt.get(new, 0) + c
        states = nxt
    return states.get(tuple(target), 0)


def _spread(st, k, target, box_cap):
    L = len(st)
    if box_cap is None:
        for i in range(L):
            if st[i] + k <= target[i]:
                s = list(st)
                s[i] += k
                yield tuple(s)
        return

    def rec(i, rem, s):
        if rem == 0:
            yield tuple(s)
            return
        if i == L:
            return
        room = target[i] - s[i]
        top = min(rem, room, 1 if box_cap == 1 else rem)
        for a in range(top, -1, -1):
            s[i] += a
            yield from rec(i + 1, rem - a, s)
            s[i] -= a

    yield from rec(0, k, list(st))


@lru_cache(maxsize=None)
def _to_m(kind: str, lam: Partition, n: int) -> tuple:
    d = lam.size()
    cap = {"p": None, "e": 1, "h": 0}[kind]
    out = []
    for mu in enumerate_partitions(d, n):
        c = _count_fillings(tuple(lam), tuple(mu), cap)
        if c:
            out.append((mu, c))
    return tuple(out)


def _from_table(kind, lam, n) -> SymPoly:
    lam = Partition(lam)
    return SymPoly._raw(n, {mu: Fraction(c) for mu, c in _to_m(kind, lam, n)}, None)


def elementary(k: int, n: int) -> SymPoly:
    """e_k in n variables; zero when k > n."""
    if k > n:
        return SymPoly(n)
    return monomial((1,) * k, n)


def powersum(k: int, n: int) -> SymPoly:
    return monomial((k,), n) if k else SymPoly(n, {(): n})


def complete(k: int, n: int) -> SymPoly:
    return _from_table("h", (k,), n) if k else SymPoly(n, {(): 1})


def e_lambda(lam, n: int) -> SymPoly:
    lam = Partition(lam)
    if lam and lam[0] > n:
        return SymPoly(n)
    return _from_table("e", lam, n)


def p_lambda(lam, n: int) -> SymPoly:
    return _from_table("p", lam, n)


def h_lambda(lam, n: int) -> SymPoly:
    return _from_table("h", lam, n)


# -- Schur polynomials -------------------------------------------------------


@lru_cache(maxsize=None)
def _jacobi_trudi_e(lam: Partition) -> dict:
    """s_lam = det(e_{lam'_i - i + j}) expanded as {e-partition: integer}."""
    conj = lam.conjugate()
    k = len(conj)
    if k == 0:
        return {Partition(()): 1}

    @lru_cache(maxsize=None)
    def expand(row: int, used: int) -> tuple:
        # Laplace expansion along rows, memoized on the set of used columns
        if row == k:
            return ((Partition(()), 1),)
        acc: dict = {}
        for col in range(k):
            if used >> col & 1:
                continue
            idx = conj[row] - row + col
            if idx < 0:
                continue
            # sign: number of used columns to the right of col
            sgn = -1 if bin(used >> (col + 1)).count("1") % 2 else 1
            for part, c in expand(row + 1, used | (1 << col)):
                key = Partition(sorted(tuple(part) + ((idx,) if idx else ()), reverse=True))
                acc[key] = acc.get(key, 0) + sgn * c
        return tuple((p, c) for p, c in acc.items() if c)

    return dict(expand(0, 0))


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition, n: int) -> SymPoly:
    out = SymPoly(n)
    for part, c in _jacobi_trudi_e(lam).items():
        out = out + e_lambda(part, n).scale(Fraction(c))
    return out


def schur(lam, n: int) -> SymPoly:
    """s_lam in n variables (zero when the length exceeds n)."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} is longer than n={n}")
    return _schur_cached(lam, n)


def kostka_ssyt(lam, mu) -> int:
    """K_{lam, mu}: semistandard tableaux counted by adding horizontal strips."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size():
        return 0

    def strips(shape, k):
        # shapes obtained from `shape` by adding a horizontal strip of size k inside lam
        rows = list(shape) + [0] * (len(lam) - len(shape))

        def rec(i, rem, cur):
            if i == len(rows):
                if rem == 0:
                    yield tuple(cur)
                return
            upper = lam[i]
            if i > 0:
                upper = min(upper, rows[i - 1])  # strip condition uses the old row above
            for add in range(min(rem, upper - rows[i]), -1, -1):
                yield from rec(i + 1, rem - add, cur + [rows[i] + add])

        yield from rec(0, k, [])

    @lru_cache(maxsize=None)
    def count(shape, i):
        if i == len(mu):
            return 1 if Partition(shape) == lam else 0
        return sum(count(Partition(s), i + 1) for s in strips(shape, mu[i]))

    return count(Partition(()), 0)


def schur_from_kostka(lam, n: int) -> SymPoly:
    lam = Partition(lam)
    return SymPoly(n, {mu: kostka_ssyt(lam, mu) for mu in enumerate_partitions(lam.size(), n)})


def schur_bialternant(lam, n: int) -> SymPoly:
    """s_lam = a_{lam+delta} / a_delta by exact polynomial division in x1..xn."""
    from ..exact import Field, Poly

    lam = Partition(lam)
    names = tuple(f"x{i}" for i in range(1, n + 1))
    fld = Field(*names)
    lamp = lam.padded(n)

    def alt(expo):
        terms = {}
        for perm in permutations(range(n)):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            key = [0] * n
            for i, p in enumerate(perm):
                key[p] = expo[i]
            terms[tuple(key)] = terms.get(tuple(key), 0) + (-1) ** inv
        return Poly(fld, terms)._p

    delta = [n - 1 - i for i in range(n)]
    num = alt([a + b for a, b in zip(lamp, delta)])
    den = alt(delta)
    q, r = divmod(num, den)
    if not r.is_zero():
        raise ArithmeticError("bialternant division left a remainder")
    coeffs = {}
    for k, v in q.to_dict().items():
        k = tuple(int(e) for e in k)
        if list(k) == sorted(k, reverse=True):
            coeffs[Partition(k)] = to_fraction(v)
    return SymPoly(n, coeffs)


# -- change of basis ---------------------------------------------------------

BASES = ("m", "M", "e", "h", "p", "s")


def basis_index(basis: str, d: int, n: int) -> tuple[Partition, ...]:
    """Index set of a basis of the degree-d part of the n-variable ring."""
    if basis in ("m", "M", "s"):
        return enumerate_partitions(d, n)
    if basis in ("e", "h", "p"):
        # generators of degree <= n only
        return tuple(lam for lam in enumerate_partitions(d) if not lam or lam[0] <= n)
    raise ValueError(f"unknown basis {basis!r}")


def basis_element(basis: str, lam, n: int) -> SymPoly:
    lam = Partition(lam)
    if basis == "m":
        return monomial(lam, n)
    if basis == "M":
        return normalized_monomial(lam, n)
    if basis == "e":
        return e_lambda(lam, n)
    if basis == "h":
        return h_lambda(lam, n)
    if basis == "p":
        return p_lambda(lam, n)
    if basis == "s":
        return schur(lam, n)
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def change_matrix(basis: str, d: int, n: int):
    """(index, inverse matrix) with m_mu = sum_lam inv[mu, lam] * b_lam."""
    idx = basis_index(basis, d, n)
    ms = enumerate_partitions(d, n)
    pos = {mu: j for j, mu in enumerate(ms)}
    mat = flint.fmpq_mat(len(idx), len(ms))
    for i, lam in enumerate(idx):
        for mu, c in basis_element(basis, lam, n).coeffs.items():
            mat[i, pos[mu]] = flint.fmpq(c.numerator, c.denominator)
    return idx, mat.inv()


class BasisExpansion:
    """Coefficients of a symmetric polynomial in a named basis."""

    def __init__(self, basis: str, n: int, terms: dict, param=None):
        self.basis = basis
        self.n = n
        self.terms = {Partition(k): v for k, v in terms.items() if v}
        self.param = param

    def __eq__(self, other):
        return (isinstance(other, BasisExpansion) and self.basis == other.basis and self.n == other.n
                and self.terms == other.terms)

    def __getitem__(self, lam):
        return self.terms.get(Partition(lam), Fraction(0))

    def __repr__(self):
        inner = ", ".join(f"{k}: {format_scalar(v)}" for k, v in sorted(self.terms.items(), reverse=True))
        return f"BasisExpansion({self.basis}, n={self.n}, {{{inner}}})"

    def basis_label(self) -> str:
        return self.basis if self.param is None else f"{self.basis}({self.param})"

    def to_json(self) -> dict:
        return {"basis": self.basis_label(), "n": self.n,
                "terms": [{"partition": str(k), "coeff": format_scalar(v)}
                          for k, v in sorted(self.terms.items(), reverse=True)]}

    @classmethod
    def from_json(cls, data: dict, field=None) -> "BasisExpansion":
        label = data["basis"]
        basis, param = label, None
        if "(" in label:
            basis, param = label[:-1].split("(", 1)
        terms = {Partition(t["partition"]): parse_scalar(t["coeff"], field) for t in data["terms"]}
        terms = {k: (v.constant_value() if isinstance(v, RatFunc) and v.is_constant() else v) for k, v in terms.items()}
        return cls(basis, data["n"], terms, param)

    def to_sympoly(self) -> SymPoly:
        out = SymPoly(self.n)
        for lam, c in self.terms.items():
            out = out + self._element(lam).scale(c)
        return out

    def _element(self, lam):
        if self.basis in BASES:
            return basis_element(self.basis, lam, self.n)
        if self.basis == "JackP":
            from ..jack import jack_P

            return jack_P(lam, self.n, param=self.param or "tau").expansion
        if self.basis == "MacP":
            from ..macdonald import mac_P

            return mac_P(lam, self.n).expansion
        raise ValueError(f"cannot expand basis {self.basis!r}")


def to_basis(f: SymPoly, basis: str) -> BasisExpansion:
    """Coordinates of f in basis m, M, e, h, p or s (homogeneous pieces handled separately)."""
    if basis == "m":
        return BasisExpansion("m", f.n, dict(f.coeffs))
    if basis == "M":
        return BasisExpansion("M", f.n, {k: v * orbit_size(k, f.n) for k, v in f.coeffs.items()})
    out: dict = {}
    for d in sorted(f.degrees()):
        idx, inv = change_matrix(basis, d, f.n)
        ms = enumerate_partitions(d, f.n)
        for j, lam in enumerate(idx):
            acc = 0
            for i, mu in enumerate(ms):
                c = f.coeffs.get(mu)
                if c:
                    w = inv[i, j]
                    if w != 0:
                        acc = acc + c * Fraction(int(w.p), int(w.q))
            if acc:
                out[lam] = acc
    return BasisExpansion(basis, f.n, out)


def expansion_in(f: SymPoly, elements: dict) -> dict:
    """Coordinates of f in an arbitrary dominance-triangular family {lam: SymPoly with leading m_lam}.

    Peels off the lexicographically largest monomial repeatedly.
    """
    rest = f
    out = {}
    while rest:
        lam = max(rest.coeffs)
        if lam not in elements:
            raise ValueError(f"no basis element with leading term m[{lam}]")
        b = elements[lam]
        c = rest.coeffs[lam] / b.coeffs[lam]
        out[lam] = c
        rest = rest - b.scale(c)
    return out
