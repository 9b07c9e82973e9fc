"""Exact special sequences: shifted factorials, Stirling numbers, Lah-type
identities, Bernoulli numbers and the even-odd inversion transform.

The Bernoulli convention here is the one the quotient-algebra reduction
needs: with x/(e^x - 1) = sum b_j x^j / j!, set B_j = (-1)^(j-1) b_{2j},
so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, all positive.  The signed modern
values are exposed alongside for the CLI.

All series manipulation is exact rational arithmetic on truncated power
series; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .scalars import falling_factorial


# -- plain rational truncated series helpers ---------------------------------------


def series_mul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def series_inverse(a: list[Fraction], n: int) -> list[Fraction]:
    """Multiplicative inverse of a series with a[0] != 0, mod x^n."""
    if not a or a[0] == 0:
        raise ValueError("series has no inverse (zero constant term)")
    inv = [Fraction(0)] * n
    inv[0] = Fraction(1) / a[0]
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if j < len(a) and a[j]:
                acc += a[j] * inv[k - j]
        inv[k] = -acc / a[0]
    return inv


# -- shifted factorials -------------------------------------------------------------


def shifted_factorial(x, n: int):
    """x^(n) = x(x-1)...(x-n+1) for numeric x (int, Fraction, Scalar)."""
    return falling_factorial(x, n)


def shifted_factorial_poly(n: int) -> list[Fraction]:
    """Coefficients of x^(n) in the powers of x (index = power)."""
    coeffs = [Fraction(1)]
    for k in range(n):
        # multiply by (x - k)
        new = [Fraction(0)] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            new[j + 1] += c
            new[j] -= k * c
        coeffs = new
    return coeffs


# -- Stirling numbers ----------------------------------------------------------------


class StirlingTable:
    """Signed first-kind and second-kind Stirling triangles up to max_n.

    first_kind[n][k] is s^n_k from x^(n) = sum_k s^n_k x^k;
    second_kind[n][k] is S^n_k from x^n = sum_k S^n_k x^(k).
    """

    __slots__ = ("max_n", "first_kind", "second_kind")

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError("max_n must be nonnegative")
        first = []
        for n in range(max_n + 1):
            poly = shifted_factorial_poly(n)
            row = [int(c) for c in poly] + [0] * (max_n + 1 - len(poly))
            first.append(row)
        second = [[0] * (max_n + 1) for _ in range(max_n + 1)]
        second[0][0] = 1
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                second[n][k] = k * second[n - 1][k] + second[n - 1][k - 1]
        object.__setattr__(self, "max_n", max_n)
        object.__setattr__(self, "first_kind", first)
        object.__setattr__(self, "second_kind", second)

    def __setattr__(self, name, value):
        raise AttributeError("StirlingTable is immutable")

    def s(self, n: int, k: int) -> int:
        self._check(n, k)
        return self.first_kind[n][k]

    def S(self, n: int, k: int) -> int:
        self._check(n, k)
        return self.second_kind[n][k]

    def _check(self, n: int, k: int):
        if not (0 <= n <= self.max_n and 0 <= k <= self.max_n):
            raise IndexError(f"index ({n},{k}) outside table of size {self.max_n}")

    def inverse_identity_holds(self, a: int, b: int) -> bool:
        """sum_k s^a_k S^k_b == delta_ab."""
        total = sum(self.s(a, k) * self.S(k, b) for k in range(self.max_n + 1))
        return total == (1 if a == b else 0)


def stirling_build(max_n: int) -> StirlingTable:
    return StirlingTable(max_n)


def lah_identity_check(table: StirlingTable, a: int, b: int) -> bool:
    """sum_k (-1)^k s^a_k S^k_b == (-1)^a (a!/b!) C(a-1, b-1)."""
    if not (0 <= b <= a <= table.max_n):
        raise IndexError("need 0 <= b <= a <= max_n")
    lhs = sum((-1) ** k * table.s(a, k) * table.S(k, b) for k in range(table.max_n + 1))
    if a == 0 and b == 0:
        rhs = Fraction(1)
    elif b == 0:
        rhs = Fraction(0)
    else:
        rhs = Fraction((-1) ** a * factorial(a), factorial(b)) * comb(a - 1, b - 1)
    return Fraction(lhs) == rhs


def second_identity_check(table: StirlingTable, j: int, k: int, a: int) -> bool:
    """C(j+k, k) S^j_a == sum_l C(a+l, l) s^l_k S^{j+k}_{a+l}."""
    if j + k > table.max_n:
        raise IndexError("j + k exceeds the table")
    lhs = comb(j + k, k) * table.S(j, a) if a <= table.max_n else 0
    rhs = 0
    for l in range(table.max_n + 1):
        if a + l > table.max_n:
            break
        rhs += comb(a + l, l) * table.s(l, k) * table.S(j + k, a + l)
    return lhs == rhs


# -- Bernoulli numbers and relatives ---------------------------------------------------


class BernoulliCache:
    """b_j from x/(e^x - 1), positive B_j = (-1)^(j-1) b_{2j}, the d-numbers
    from 2x/(e^x - e^-x), and v_j = 2(4^j - 1) B_j."""

    __slots__ = ("max_j", "b", "B", "d", "v")

    def __init__(self, max_j: int):
        if max_j < 1:
            raise ValueError("max_j must be >= 1")
        n = 2 * max_j + 2
        # (e^x - 1)/x = sum_{j>=0} x^j/(j+1)!
        den = [Fraction(1, factorial(j + 1)) for j in range(n)]
        binv = series_inverse(den, n)
        b = [binv[j] * factorial(j) for j in range(n)]
        B = [Fraction(0)] * (max_j + 1)
        B[0] = Fraction(-1)  # consistent with B_j = (-1)^(j-1) b_{2j} at j = 0
        for j in range(1, max_j + 1):
            B[j] = (-1) ** (j - 1) * b[2 * j]
        # (e^x - e^-x)/(2x) = sum_k x^{2k}/(2k+1)!
        den2 = [Fraction(0)] * n
        for k in range(0, n, 2):
            den2[k] = Fraction(1, factorial(k + 1))
        dinv = series_inverse(den2, n)
        d = [dinv[j] * factorial(j) for j in range(n)]
        v = [Fraction(0)] * (max_j + 1)
        for j in range(1, max_j + 1):
            v[j] = 2 * (4**j - 1) * B[j]
        object.__setattr__(self, "max_j", max_j)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("BernoulliCache is immutable")

    def signed_bernoulli(self, j: int) -> Fraction:
        """The modern signed Bernoulli number B_j (B_1 = -1/2 convention)."""
        return self.b[j] if j != 1 else Fraction(-1, 2)

    def v_recurrence_holds(self, k: int) -> bool:
        """v_k - C(2k,2)v_{k-1}/2 + C(2k,4)v_{k-2}/2 - ... + (-1)^k k == 0."""
        if not (1 <= k <= self.max_j):
            raise IndexError("k outside cache")
        acc = self.v[k]
        for j in range(1, k):
            acc += Fraction((-1) ** j, 2) * comb(2 * k, 2 * j) * self.v[k - j]
        acc += (-1) ** k * k
        return acc == 0

    def d_identity_holds(self, j: int) -> bool:
        """d_{2j} == (-1)^j (4^j - 2) B_j, the generating-function cross-check."""
        if not (1 <= j <= self.max_j):
            raise IndexError("j outside cache")
        return self.d[2 * j] == (-1) ** j * (2 ** (2 * j) - 2) * self.B[j]


def bernoulli_build(max_j: int) -> BernoulliCache:
    return BernoulliCache(max_j)


# -- the inversion lemma ------------------------------------------------------------------


def inversion_forward(b_odd: list[Fraction]) -> list[Fraction]:
    """a_{2n+1} = sum_{k=0}^n C(2n+2, 2k+1) b_{2n+1-2k}; input/output indexed
    so that position n holds the subscript 2n+1."""
    out = []
    for n in range(len(b_odd)):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += comb(2 * n + 2, 2 * k + 1) * b_odd[n - k]
        out.append(acc)
    return out


def inversion_transform(a_odd: list[Fraction], cache: BernoulliCache | None = None) -> list[Fraction]:
    """(2n+2) b_{2n+1} = sum_{k=0}^n C(2n+2, 2k) d_{2k} a_{2n+1-2k}."""
    n_terms = len(a_odd)
    if cache is None or cache.max_j < n_terms:
        cache = bernoulli_build(max(1, n_terms))
    out = []
    for n in range(n_terms):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += comb(2 * n + 2, 2 * k) * cache.d[2 * k] * a_odd[n - k]
        out.append(acc / (2 * n + 2))
    return out


def solve_alpha(count: int) -> list[Fraction]:
    """alpha_j solved from sum_{j<=k} (-1)^j C(2k+2, 2j+1) alpha_j / (2j+2) = 1.

    The system is lower triangular in k; the closed form is
    alpha_j = 2 (4^(j+1) - 1) B_{j+1}.
    """
    alphas: list[Fraction] = []
    for k in range(count):
        acc = Fraction(1)
        for j in range(k):
            acc -= Fraction((-1) ** j, 2 * j + 2) * comb(2 * k + 2, 2 * j + 1) * alphas[j]
        coeff = Fraction((-1) ** k, 2 * k + 2) * comb(2 * k + 2, 2 * k + 1)
        alphas.append(acc / coeff)
    return alphas


def alpha_closed_form(count: int) -> list[Fraction]:
    cache = bernoulli_build(count + 1)
    return [2 * (4 ** (j + 1) - 1) * cache.B[j + 1] for j in range(count)]
