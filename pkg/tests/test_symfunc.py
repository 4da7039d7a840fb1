import random
from fractions import Fraction
from itertools import product as iproduct

import flint
import pytest
from hypothesis import given, settings, strategies as st

from jackmac.exact import Field, fp_membership_tau
from jackmac.partitions import Partition, enumerate_partitions, majorizes, z_lambda
from jackmac.symfunc import (BasisExpansion, NotDivisible, SymPoly, divide_by_vandermonde_sq,
                             elementary, kostka_ssyt, monomial, normalized_monomial, p_lambda, powersum,
                             schur, schur_bialternant, schur_from_kostka, tau_inner, to_basis)

T = Field("tau")
tau = T.gen("tau")
M = normalized_monomial


def P(*parts):
    return Partition(parts)


def test_monomial_examples():
    m11 = monomial((1, 1), 2)
    assert m11.to_poly() == Field("x1", "x2").gen("x1").num * Field("x1", "x2").gen("x2").num
    assert m11.eval_ones() == 1
    assert len(monomial((2, 1), 3).to_poly().terms) == 6
    assert M((2, 1), 3).eval_ones() == 1
    assert M((2,), 2).eval([4, 1]) == Fraction(17, 2)


def test_monomial_too_long():
    with pytest.raises(ValueError):
        monomial((1, 1, 1), 2)


def test_normalized_monomials_evaluate_to_one():
    for d in range(0, 7):
        for n in range(1, 5):
            for lam in enumerate_partitions(d, n):
                assert M(lam, n).eval_ones() == 1


def test_elementary_and_power_sums():
    assert elementary(2, 2) == monomial((1, 1), 2)
    assert elementary(3, 2) == SymPoly(2)
    for k in range(1, 6):
        assert powersum(k, 4).eval_ones() == 4


def test_power_sum_difference_in_semiring_form():
    n = 3
    f = p_lambda((3, 3), n) / p_lambda((3, 3), n).eval_ones() - p_lambda((3, 2, 1), n) / p_lambda((3, 2, 1), n).eval_ones()
    g = (M((6,), n) - M((5, 1), n) - M((4, 2), n) + M((3, 3), n).scale(2) - M((3, 2, 1), n)).scale(Fraction(2, 9))
    assert f == g


def test_schur_examples():
    assert schur((3,), 3) == monomial((3,), 3) + monomial((2, 1), 3) + monomial((1, 1, 1), 3)
    for k in range(1, 5):
        assert schur((1,) * k, 5) == elementary(k, 5)
    lhs = schur((3,), 3) - monomial((1, 1, 1), 3).scale(10)
    rhs = monomial((3,), 3) + monomial((2, 1), 3) - monomial((1, 1, 1), 3).scale(9)
    assert lhs == rhs
    assert schur((3,), 3).eval_ones() == 10


def _ssyt_count(shape, content):
    """Brute force: fill the diagram row by row with values 1..len(content)."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    k = len(content)
    count = 0
    for vals in iproduct(range(1, k + 1), repeat=len(cells)):
        T = dict(zip(cells, vals))
        if any(T[(i, j)] > T[(i, j + 1)] for (i, j) in cells if (i, j + 1) in T):
            continue
        if any(T[(i, j)] >= T[(i + 1, j)] for (i, j) in cells if (i + 1, j) in T):
            continue
        if all(vals.count(v + 1) == content[v] for v in range(k)):
            count += 1
    return count


def test_kostka_matches_brute_force():
    for d in range(1, 6):
        for lam in enumerate_partitions(d):
            for mu in enumerate_partitions(d):
                assert kostka_ssyt(lam, mu) == _ssyt_count(lam, mu), (lam, mu)


def test_schur_constructions_agree():
    for d in range(1, 6):
        for n in range(1, 4):
            for lam in enumerate_partitions(d, n):
                assert schur(lam, n) == schur_from_kostka(lam, n) == schur_bialternant(lam, n)


def test_mul_eval_examples():
    m1 = monomial((1,), 2)
    assert m1 * m1 == monomial((2,), 2) + monomial((1, 1), 2).scale(2)
    assert monomial((2, 1), 3).eval_ones() == 6
    assert elementary(2, 2).eval([1, 1]) == 1


def test_shift_examples():
    assert monomial((1,), 2).shift_ones() == monomial((1,), 2) + SymPoly(2, {P(): 2})
    e2, e1 = elementary(2, 2), elementary(1, 2)
    assert e2.shift_ones() == e2 + e1 + SymPoly(2, {P(): 1})
    p2, p1 = powersum(2, 2), powersum(1, 2)
    assert p2.shift_ones() == p2 + p1.scale(2) + SymPoly(2, {P(): 2})


small_sym = st.lists(st.tuples(st.sampled_from(enumerate_partitions(2, 3) + enumerate_partitions(3, 3)
                                                + enumerate_partitions(1, 3)),
                               st.integers(-3, 3)), min_size=1, max_size=3)


def _build(terms, n=3):
    out = SymPoly(n)
    for lam, c in terms:
        out = out + monomial(lam, n).scale(c)
    return out


@settings(max_examples=30, deadline=None)
@given(small_sym, small_sym)
def test_shift_is_ring_homomorphism(a, b):
    f, g = _build(a), _build(b)
    assert (f * g).shift_ones() == f.shift_ones() * g.shift_ones()
    assert (f + g).shift_ones() == f.shift_ones() + g.shift_ones()


@settings(max_examples=30, deadline=None)
@given(small_sym, st.lists(st.fractions(min_value=0, max_value=5, max_denominator=7), min_size=3, max_size=3))
def test_shift_matches_evaluation(a, x):
    f = _build(a)
    assert f.shift_ones().eval(x) == f.eval([v + 1 for v in x])


def test_to_basis_examples():
    assert to_basis(powersum(2, 2), "m").terms == {P(2): 1}
    expected = {P(1, 1): Fraction(1, 2), P(2): Fraction(-1, 2)}
    assert to_basis(monomial((1, 1), 2), "p").terms == expected
    assert to_basis(elementary(2, 2), "p").terms == expected


def test_to_basis_round_trip():
    for d in range(0, 7):
        for n in (2, 3, 4):
            for lam in enumerate_partitions(d, n):
                f = monomial(lam, n) + schur(lam, n).scale(2)
                for basis in ("m", "M", "e", "p", "s", "h"):
                    exp = to_basis(f, basis)
                    assert exp.to_sympoly() == f, (lam, n, basis)


def test_basis_expansion_json_round_trip():
    f = p_lambda((2, 1), 3) + schur((3,), 3)
    exp = to_basis(f, "s")
    data = exp.to_json()
    assert data["basis"] == "s" and data["n"] == 3
    assert BasisExpansion.from_json(data) == exp
    g = monomial((2,), 2).scale(tau / (1 + tau))
    assert SymPoly.from_json(g.to_json(), T) == g


def test_tau_hall_inner_product_on_power_sums():
    for d in range(1, 7):
        parts = enumerate_partitions(d)
        for lam in parts:
            for mu in parts:
                ip = tau_inner(p_lambda(lam, d), p_lambda(mu, d), tau)
                want = z_lambda(lam) * tau ** (-len(lam)) if lam == mu else T(0)
                assert ip == want, (lam, mu)


def test_muirhead_inequality_sampled():
    rng = random.Random(7)
    points = {n: [tuple(flint.fmpq(rng.randint(0, 100), 10) for _ in range(n)) for _ in range(1000)]
              for n in range(2, 5)}
    for d in range(1, 7):
        for n in range(2, 5):
            parts = enumerate_partitions(d, n)
            pairs = [(a, b) for a in parts for b in parts if a != b and majorizes(a, b, n)]
            for a, b in pairs:
                poly = (M(a, n) - M(b, n)).to_poly()._p
                for x in points[n]:
                    assert poly(*x) >= 0, (a, b, x)


def test_divide_by_vandermonde_examples():
    a, b = 1, 2
    f = (M((a + b + 1, a), 2) - M((a + b, a + 1), 2)).scale(2)
    assert divide_by_vandermonde_sq(f).terms == {P(a + b - 1, a): 1}
    assert divide_by_vandermonde_sq(M((3, 1), 2) - M((3, 1), 2)).terms == {}
    r = divide_by_vandermonde_sq(monomial((2,), 2))
    assert isinstance(r, NotDivisible) and r.remainder == monomial((1, 1), 2).scale(2)
    with pytest.raises(ValueError):
        divide_by_vandermonde_sq(schur((3,), 3) - schur((1, 1, 1), 3).scale(10), n=3)


def test_three_variable_difference_not_divisible():
    f = schur((3,), 3) - schur((1, 1, 1), 3).scale(schur((3,), 3).eval_ones())
    # nonzero on the hyperplane x1 = x2 rules out a factor x1 - x2
    assert f.eval([1, 1, 2]) != 0


def test_adjacent_muirhead_quotients_are_half_schur():
    for a in range(0, 4):
        for b in range(1, 4):
            f = (M((a + b + 1, a), 2) - M((a + b, a + 1), 2)).scale(2)
            assert divide_by_vandermonde_sq(f).terms == {P(a + b - 1, a): 1}


def test_two_variable_jack_difference_quotient_is_schur_positive():
    from jackmac.jack import normalized_diff

    for d in range(2, 7):
        parts = enumerate_partitions(d, 2)
        for lam in parts:
            for mu in parts:
                if lam != mu and majorizes(lam, mu, 2):
                    q = divide_by_vandermonde_sq(normalized_diff(lam, mu, 2))
                    assert not isinstance(q, NotDivisible)
                    assert all(fp_membership_tau(c, "tau").kind.value == "InCone" for c in q.terms.values())
