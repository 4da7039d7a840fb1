"""Integer partitions, Young diagram statistics and the three partial orders.

Partitions are stored without trailing zeros.  Every order predicate takes
the ambient number of variables ``n`` explicitly, because prefix sums are
compared for ``k = 1..n`` after padding with zeros.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import accumulate


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        if isinstance(parts, str):
            return parse_partition(parts)
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({str(self)})"

    def __str__(self):
        return ",".join(map(str, self))

    def length(self) -> int:
        return len(self)

    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-indexed part with implicit zeros beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def cells(self):
        for i, p in enumerate(self, 1):
            for j in range(1, p + 1):
                yield (i, j)

    def _check_cell(self, cell):
        i, j = cell
        if not (1 <= i <= len(self) and 1 <= j <= self[i - 1]):
            raise ValueError(f"cell {cell} outside the diagram of {self}")
        return i, j

    def arm(self, cell) -> int:
        i, j = self._check_cell(cell)
        return self[i - 1] - j

    def leg(self, cell) -> int:
        i, j = self._check_cell(cell)
        return self.conjugate()[j - 1] - i

    def coarm(self, cell) -> int:
        _, j = self._check_cell(cell)
        return j - 1

    def coleg(self, cell) -> int:
        i, _ = self._check_cell(cell)
        return i - 1

    def remove_column(self) -> "Partition":
        return Partition(p - 1 for p in self)


def parse_partition(text: str) -> Partition:
    """Parse the comma form "3,1" (brackets optional) or the exponent form "2^2 1^3"."""
    s = text.strip().strip("()[]")
    if not s:
        return Partition(())
    if "^" in s or (" " in s and "," not in s):
        parts = []
        for tok in s.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad partition token {tok!r}")
            parts += [int(m.group(1))] * int(m.group(2) or 1)
        return Partition(sorted(parts, reverse=True))
    return Partition(int(x) for x in s.replace(" ", "").split(",") if x != "")


def _prefix(lam: Partition, n: int) -> list[int]:
    return list(accumulate(lam.padded(n)))


def _ambient(lam, mu, n):
    if n is None:
        n = max(len(lam), len(mu), 1)
    return n


def contains(lam, mu, n: int | None = None) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    n = _ambient(lam, mu, n)
    return all(a >= b for a, b in zip(lam.padded(n), mu.padded(n)))


def weakly_majorizes(lam, mu, n: int | None = None) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    n = _ambient(lam, mu, n)
    return all(a >= b for a, b in zip(_prefix(lam, n), _prefix(mu, n)))


def majorizes(lam, mu, n: int | None = None) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    return lam.size() == mu.size() and weakly_majorizes(lam, mu, n)


def reverse_weakly_majorizes(lam, mu, n: int | None = None) -> bool:
    """Weak majorization of the negated reversed tuples: suffix sums of lam are <= those of mu."""
    lam, mu = Partition(lam), Partition(mu)
    n = _ambient(lam, mu, n)
    a = list(accumulate(reversed(lam.padded(n))))
    b = list(accumulate(reversed(mu.padded(n))))
    return all(x <= y for x, y in zip(a, b))


def raising(mu, i: int, j: int) -> Partition:
    """R_ij: add one to part i and remove one from part j (1-indexed, i < j)."""
    mu = Partition(mu)
    if not 1 <= i < j:
        raise ValueError("raising operator needs 1 <= i < j")
    parts = list(mu.padded(max(j, len(mu))))
    parts[i - 1] += 1
    parts[j - 1] -= 1
    if parts[j - 1] < 0 or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"R_{i}{j} applied to {mu} is not a partition")
    return Partition(parts)


@lru_cache(maxsize=None)
def enumerate_partitions(d: int, n: int | None = None) -> tuple[Partition, ...]:
    """Partitions of d with at most n parts, in decreasing lexicographic order."""
    if n is None:
        n = d
    out = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == n:
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, prefix + (p,))

    rec(d, d, ())
    return tuple(out)


def _lowerings(lam: Partition, n: int):
    """Partitions obtained from lam by moving one box from a row i down to a row j > i."""
    parts = list(lam.padded(n))
    seen = set()
    for i in range(n):
        for j in range(i + 1, n):
            q = parts[:]
            q[i] -= 1
            q[j] += 1
            if q[i] < 0 or any(a < b for a, b in zip(q, q[1:])):
                continue
            mu = Partition(q)
            if mu not in seen:
                seen.add(mu)
                yield mu


@lru_cache(maxsize=None)
def adjacent_pairs(d: int, n: int) -> tuple[tuple[Partition, Partition], ...]:
    """Cover relations (lam, mu) of majorization on partitions of d with at most n parts.

    mu is covered by lam iff mu is a one-box lowering of lam and no other
    one-box lowering of lam still majorizes mu.
    """
    out = []
    for lam in enumerate_partitions(d, n):
        lows = list(_lowerings(lam, n))
        for mu in lows:
            if not any(nu != mu and majorizes(nu, mu, n) for nu in lows):
                out.append((lam, mu))
    out.sort(reverse=True)
    return tuple(out)


def intermediate(lam, mu, n: int | None = None) -> Partition:
    """The lexicographically largest nu with lam containing nu and nu majorizing mu."""
    lam, mu = Partition(lam), Partition(mu)
    n = _ambient(lam, mu, n)
    if not weakly_majorizes(lam, mu, n):
        raise ValueError(f"{lam} does not weakly majorize {mu}")
    rem = mu.size()
    parts = []
    for p in lam.padded(n):
        take = min(p, rem)
        parts.append(take)
        rem -= take
    nu = Partition(parts)
    assert contains(lam, nu, n) and majorizes(nu, mu, n)
    return nu


def z_lambda(lam) -> int:
    """prod_i i^{m_i} m_i!, the centralizer order of cycle type lam."""
    from math import factorial

    out = 1
    for part, m in Partition(lam).multiplicities().items():
        out *= part ** m * factorial(m)
    return out


def dominance_sorted(parts) -> list[Partition]:
    """A linear extension of majorization: decreasing lexicographic order."""
    return sorted((Partition(p) for p in parts), reverse=True)
