from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from jackmac.partitions import (Partition, adjacent_pairs, contains, enumerate_partitions, intermediate,
                                majorizes, parse_partition, raising, reverse_weakly_majorizes,
                                weakly_majorizes, z_lambda)


def all_up_to(d):
    return [lam for k in range(d + 1) for lam in enumerate_partitions(k)]


def test_conjugate_examples():
    assert Partition((2, 2, 1, 1, 1)).conjugate() == Partition((5, 2))
    assert Partition(()).conjugate() == Partition(())
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    lam = Partition((2, 2, 1, 1, 1))
    assert lam.length() == 5 and lam.size() == 7


def test_conjugate_involution():
    for lam in all_up_to(12):
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().size() == lam.size()


def test_partition_normalizes_and_rejects():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_parse_and_print():
    assert parse_partition("3,1") == Partition((3, 1))
    assert parse_partition("2^2 1^3") == Partition((2, 2, 1, 1, 1))
    assert str(Partition((3, 1))) == "3,1"
    assert parse_partition(str(Partition((4, 2, 2)))) == Partition((4, 2, 2))


def test_order_examples():
    assert majorizes((4, 2), (3, 3))
    lam = (2, 1)
    assert majorizes(lam, lam) and weakly_majorizes(lam, lam) and contains(lam, lam)
    assert not majorizes((2, 2), (3, 1))
    assert not contains((2, 2), (3, 1))
    assert not weakly_majorizes((2, 2), (3, 1))
    assert contains((3, 2), (2, 1)) and weakly_majorizes((3, 2), (2, 1)) and not majorizes((3, 2), (2, 1))


def test_majorization_is_partial_order():
    for d in range(1, 9):
        parts = enumerate_partitions(d)
        for a in parts:
            assert majorizes(a, a)
            for b in parts:
                if a != b and majorizes(a, b):
                    assert not majorizes(b, a)
                for c in parts:
                    if majorizes(a, b) and majorizes(b, c):
                        assert majorizes(a, c)


def test_raising_examples():
    assert raising((2, 2), 1, 2) == Partition((3, 1))
    assert raising((1, 1), 1, 2) == Partition((2,))
    assert raising((3, 2, 2), 2, 3) == Partition((3, 3, 1))
    with pytest.raises(ValueError):
        raising((2, 2, 1), 2, 3)
    with pytest.raises(ValueError):
        raising((2, 1), 2, 1)


def _brute_reduction(d, n):
    parts = enumerate_partitions(d, n)
    strict = {(a, b) for a in parts for b in parts if a != b and majorizes(a, b, n)}
    return {(a, b) for (a, b) in strict if not any((a, c) in strict and (c, b) in strict for c in parts)}


def test_adjacent_pairs_examples():
    assert adjacent_pairs(4, 2) == ((Partition((4,)), Partition((3, 1))),
                                    (Partition((3, 1)), Partition((2, 2))))
    assert adjacent_pairs(2, 2) == ((Partition((2,)), Partition((1, 1))),)
    pairs = set(adjacent_pairs(6, 3))
    assert (Partition((3, 3)), Partition((3, 2, 1))) in pairs
    # (4,1,1) and (3,3) are incomparable
    assert (Partition((4, 1, 1)), Partition((3, 3))) not in pairs
    assert not majorizes((4, 1, 1), (3, 3)) and not majorizes((3, 3), (4, 1, 1))


def test_adjacent_pairs_is_transitive_reduction():
    for d in range(2, 9):
        for n in range(1, 7):
            assert set(adjacent_pairs(d, n)) == _brute_reduction(d, n), (d, n)


def _normal_form(lam, mu):
    """Either (k+l, l) -> (k+l-1, l+1) in adjacent rows, or (k+1, k^m, k-1) -> (k^{m+2})."""
    n = max(len(lam), len(mu))
    a, b = lam.padded(n), mu.padded(n)
    diff = [i for i in range(n) if a[i] != b[i]]
    i, j = diff[0], diff[-1]
    if a[i] != b[i] + 1 or a[j] != b[j] - 1:
        return False
    if j == i + 1:
        return True
    k = b[i]
    return all(a[r] == k for r in range(i + 1, j)) and a[j] == k - 1


def test_adjacent_pairs_have_normal_form():
    for d in range(2, 9):
        for lam, mu in adjacent_pairs(d, d):
            assert _normal_form(lam, mu), (lam, mu)


def test_intermediate_examples():
    nu = intermediate((3, 2), (2, 1))
    assert contains((3, 2), nu) and majorizes(nu, (2, 1))
    assert nu == Partition((3,))
    assert intermediate((2, 1), (2, 1)) == Partition((2, 1))
    nu = intermediate((2, 1, 1), (1, 1, 1))
    assert contains((2, 1, 1), nu) and majorizes(nu, (1, 1, 1))
    assert nu == Partition((2, 1))
    with pytest.raises(ValueError):
        intermediate((2, 2), (3, 1))


def test_intermediate_all_pairs():
    parts = all_up_to(8)
    for lam in parts:
        for mu in parts:
            if mu.size() <= lam.size() and weakly_majorizes(lam, mu):
                n = max(len(lam), len(mu), 1)
                nu = intermediate(lam, mu, n)
                assert contains(lam, nu, n) and majorizes(nu, mu, n)


def test_reverse_weak_characterizes_majorization():
    for d in range(0, 9):
        for n in range(1, 6):
            parts = [p for k in range(d + 1) for p in enumerate_partitions(k, n)]
            for lam, mu in product(parts, repeat=2):
                both = weakly_majorizes(lam, mu, n) and reverse_weakly_majorizes(lam, mu, n)
                assert both == majorizes(lam, mu, n)


def test_cells_arm_leg():
    lam = Partition((3, 1))
    assert lam.arm((1, 1)) == 2 and lam.leg((1, 1)) == 1
    assert lam.coarm((1, 3)) == 2 and lam.coleg((2, 1)) == 1
    assert Partition((1,)).arm((1, 1)) == 0 and Partition((1,)).leg((1, 1)) == 0
    with pytest.raises(ValueError):
        lam.arm((2, 2))
    assert len(list(lam.cells())) == 4


def test_enumerate_examples():
    assert enumerate_partitions(4, 2) == (Partition((4,)), Partition((3, 1)), Partition((2, 2)))
    assert [len(enumerate_partitions(d)) for d in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_z_lambda():
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((2, 1)) == 2
    assert z_lambda((2, 2)) == 8


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 6), max_size=6))
def test_arm_leg_hook_counts(parts):
    lam = Partition(sorted(parts, reverse=True))
    conj = lam.conjugate()
    for (i, j) in lam.cells():
        assert lam.arm((i, j)) == conj.leg((j, i))
        assert lam.arm((i, j)) + lam.coarm((i, j)) == lam.part(i) - 1
