"""Two-variable transition matrices between Jack bases with parameters tau and sigma.

Rows and columns are indexed by i = 0..floor(d/2), standing for (d-i, i).
"""

from __future__ import annotations

from math import comb, factorial

from ..exact import Field, pochhammer
from ..partitions import Partition
from .construct import jack_P

TWO = Field("tau", "sigma")


def _gen(name):
    return TWO.gen(name)


def _size(d):
    return d // 2 + 1


def monomial_matrix(d: int, param: str = "tau") -> list:
    """Closed form of M_d(P(param), m): entry (i, j) is the m_(d-j,j) coefficient of P_(d-i,i)."""
    x = _gen(param)
    k = _size(d)
    M = [[TWO(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            M[i][j] = comb(d - 2 * i, j - i) * pochhammer(x, j - i) * pochhammer(x, d - j - i) / pochhammer(x, d - 2 * i)
    return M


def computed_monomial_matrix(d: int, param: str = "tau") -> list:
    """M_d(P(param), m) read off the orthogonalized Jack polynomials in two variables."""
    k = _size(d)
    M = [[TWO(0)] * k for _ in range(k)]
    for i in range(k):
        p = jack_P((d - i, i), 2, param).expansion
        for j in range(k):
            c = p[Partition((d - j, j))]
            M[i][j] = c.lift(TWO) if hasattr(c, "lift") else TWO(c)
    return M


def inverse_monomial_matrix(d: int, param: str = "sigma") -> list:
    """Closed form of M_d(P(param), m)^{-1}."""
    s = _gen(param)
    k = _size(d)
    M = [[TWO(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            sign = (-1) ** (j - i)
            ratio = 1 if d - i - j == 0 else TWO(d - 2 * i) / (d - i - j)
            M[i][j] = (sign * comb(d - i - j, j - i) * ratio * pochhammer(s + i - j + 1, d - i - j)
                       * pochhammer(s + d - i - j + 1, j - i) / pochhammer(s + 1, d - 2 * i))
    return M


def transition_closed_form(d: int) -> list:
    """M_d(P(tau), P(sigma)) from the hypergeometric product."""
    t, s = _gen("tau"), _gen("sigma")
    k = _size(d)
    M = [[TWO(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            M[i][j] = (TWO(factorial(d - 2 * i)) / (factorial(d - 2 * j) * factorial(j - i)) * pochhammer(t - s, j - i)
                       / (pochhammer(t + d - i - j, j - i) * pochhammer(s + d - 2 * j + 1, j - i)))
    return M


def matmul(A, B) -> list:
    k = len(A)
    out = [[TWO(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            acc = TWO(0)
            for r in range(k):
                if A[i][r] and B[r][j]:
                    acc = acc + A[i][r] * B[r][j]
            out[i][j] = acc
    return out


def identity(k: int) -> list:
    return [[TWO(1) if i == j else TWO(0) for j in range(k)] for i in range(k)]


def transition_matrix(d: int, n: int = 2) -> list:
    """M_d(P(tau), P(sigma)) as the product of the computed tau matrix and the explicit sigma inverse."""
    if n != 2:
        raise ValueError("transition matrices are implemented for two variables")
    if d < 1:
        raise ValueError("degree must be positive")
    return matmul(computed_monomial_matrix(d, "tau"), inverse_monomial_matrix(d, "sigma"))


def verify_transition(d: int) -> dict:
    """Check every link between the orthogonalized, closed-form and product matrices."""
    tau_c = computed_monomial_matrix(d, "tau")
    sig_c = computed_monomial_matrix(d, "sigma")
    inv = inverse_monomial_matrix(d, "sigma")
    prod = matmul(tau_c, inv)
    closed = transition_closed_form(d)
    k = _size(d)
    at_equal = [[c.subs({"sigma": _gen("tau")}) for c in row] for row in closed]
    return {
        "monomial_closed_form": tau_c == monomial_matrix(d, "tau"),
        "inverse": matmul(sig_c, inv) == identity(k),
        "product_equals_closed_form": prod == closed,
        "identity_at_equal_parameters": at_equal == identity(k),
    }


def normalized_transition(d: int) -> list:
    """Transition from P(tau)/P(1; tau) to P(sigma)/P(1; sigma)."""
    t, s = _gen("tau"), _gen("sigma")
    closed = transition_closed_form(d)
    k = _size(d)
    return [[pochhammer(t, d - 2 * i) / pochhammer(2 * t, d - 2 * i) * closed[i][j]
             * pochhammer(2 * s, d - 2 * j) / pochhammer(s, d - 2 * j) for j in range(k)] for i in range(k)]


def top_difference_coefficients(d: int) -> list:
    """Coefficients of P_(d-j,j)(sigma)/P(1;sigma) in the normalized tau-difference of (d) and (d-1,1)."""
    N = normalized_transition(d)
    return [N[0][j] - N[1][j] for j in range(_size(d))]


def sign_quadratic(j: int, d: int):
    """a_j = 2(2tau-1) j^2 - 2(2tau-1)(d+sigma) j + d(d-1)(tau-sigma-1)."""
    t, s = _gen("tau"), _gen("sigma")
    return 2 * (2 * t - 1) * j * j - 2 * (2 * t - 1) * (d + s) * j + d * (d - 1) * (t - s - 1)


def last_sign_quadratic_closed_form(d: int):
    """a_{floor(d/2)} in factored form; negative for tau, sigma >= 0."""
    t, s = _gen("tau"), _gen("sigma")
    k = d // 2
    if d % 2 == 0:
        return -2 * k * (t + k - 1) * (2 * s + 1)
    return -2 * k * (t + k) * (2 * s + 1)
