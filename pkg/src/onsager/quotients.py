"""Finite-dimensional quotients of the Onsager algebra by powers of an
elementary reciprocal polynomial.

For a != +-1 the quotient of level L is (C[u]/u^L) (x) sl2 with basis
e_j, f_j, h_j representing u^j/j! e etc., and projection by exact Taylor
expansion at t = a.

For a = +-1 the quotient is solvable of dimension L + [L/2]; the basis is
X_k = 2u^k e + 2v^k f (u = t-1, v = 1/t - 1) for 0 <= k < L together with
Y_k = (-1)^k (u^k - v^k) h for odd k < L.  Even-indexed Y's reduce to the
odd ones through a Bernoulli-number formula, ad X_0 acts with exact
eigenvalues {0, +-4}, the E/F/H basis exhibits the truncated-sl2 shape,
and the lambda = (t - 1/t)/2 coordinate gives the graded model
C[[l^2]]s1 + l C[[l^2]]s2 + l C[[l^2]]s3 truncated at l^L.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import NamedTuple

from . import linalg
from .combinat import bernoulli_build, series_mul
from .core import OAElement, involution_sigma
from .polyring import LaurentPoly, taylor_expand
from .scalars import Scalar, as_scalar, binomial


class BasisLabel(NamedTuple):
    kind: str  # "e","f","h" | "X","Y" | "E","F","H" | "s1","s2","s3"
    j: int

    def __str__(self):
        return f"{self.kind}_{self.j}"


class QuotientAlgebra:
    """A finite Lie algebra with labelled basis and sparse structure constants.

    table maps (i, j) with i < j to a tuple of (k, coefficient); antisymmetry
    fills in the rest and diagonal brackets vanish.
    """

    __slots__ = ("a", "L", "basis", "table", "_index")

    def __init__(self, a, L: int, basis, table):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "table", dict(table))
        object.__setattr__(self, "_index", {lbl: i for i, lbl in enumerate(self.basis)})

    def __setattr__(self, name, value):
        raise AttributeError("QuotientAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: BasisLabel) -> int:
        return self._index[label]

    def pair_bracket(self, i: int, j: int):
        """[b_i, b_j] as a sparse list of (k, coefficient)."""
        if i == j:
            return ()
        if i < j:
            return self.table.get((i, j), ())
        return tuple((k, -c) for k, c in self.table.get((j, i), ()))

    def bracket_coords(self, x, y):
        """Bracket of two coefficient vectors."""
        out = [Scalar(0)] * self.dim
        nonzero_x = [(i, c) for i, c in enumerate(x) if not as_scalar(c).is_zero()]
        nonzero_y = [(j, c) for j, c in enumerate(y) if not as_scalar(c).is_zero()]
        for i, xi in nonzero_x:
            xi = as_scalar(xi)
            for j, yj in nonzero_y:
                yj = as_scalar(yj)
                for k, c in self.pair_bracket(i, j):
                    out[k] = out[k] + xi * yj * c
        return out

    def ad_matrix(self, v) -> linalg.Matrix:
        """Matrix of ad(v) acting on coefficient vectors, columns = basis images."""
        cols = []
        for j in range(self.dim):
            unit = [Scalar(0)] * self.dim
            unit[j] = Scalar(1)
            cols.append(self.bracket_coords(v, unit))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def jacobi_holds(self) -> bool:
        """Exact Jacobi identity over all basis triples."""
        n = self.dim
        units = linalg.identity(n)
        brackets = {}
        for i in range(n):
            for j in range(i + 1, n):
                brackets[(i, j)] = self.bracket_coords(units[i], units[j])
        def bk(i, j):
            if i == j:
                return [Scalar(0)] * n
            if i < j:
                return brackets[(i, j)]
            return [-c for c in brackets[(j, i)]]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc = self.bracket_coords(units[i], bk(j, k))
                    term = self.bracket_coords(units[j], bk(k, i))
                    acc = [x + y for x, y in zip(acc, term)]
                    term = self.bracket_coords(units[k], bk(i, j))
                    acc = [x + y for x, y in zip(acc, term)]
                    if any(not c.is_zero() for c in acc):
                        return False
        return True

    def antisymmetry_holds(self) -> bool:
        for (i, j), entries in self.table.items():
            if i >= j:
                return False
            if any(c.is_zero() for _, c in entries):
                return False
        return True

    def to_jsonable(self) -> dict:
        brackets = []
        for (i, j), entries in sorted(self.table.items()):
            brackets.append([i, j, [[k, str(c)] for k, c in entries]])
        return {
            "a": str(as_scalar(self.a)),
            "L": self.L,
            "dimension": self.dim,
            "basis": [str(lbl) for lbl in self.basis],
            "brackets": brackets,
        }


def _sparse(vec) -> tuple:
    return tuple((k, c) for k, c in enumerate(vec) if not c.is_zero())


# -- loop realizations at a = 1 -------------------------------------------------------

_U = LaurentPoly({1: 1, 0: -1})  # u = t - 1


def u_power(k: int) -> LaurentPoly:
    return _U**k


def x_element(k: int) -> OAElement:
    """X_k = 2 u^k e + 2 v^k f as an exact Onsager element."""
    return OAElement(u_power(k).scale(2), LaurentPoly.zero())


def y_element(k: int) -> OAElement:
    """Y_k = (-1)^k (u^k - v^k) h."""
    uk = u_power(k)
    q = (uk - uk.invert_variable()).scale((-1) ** k)
    return OAElement(LaurentPoly.zero(), q)


def basis_at_one(L: int) -> list[BasisLabel]:
    return [BasisLabel("X", k) for k in range(L)] + [
        BasisLabel("Y", k) for k in range(1, L, 2)
    ]


def _loop_elements_at_one(L: int) -> list[OAElement]:
    return [x_element(k) for k in range(L)] + [y_element(k) for k in range(1, L, 2)]


@lru_cache(maxsize=None)
def _q_columns_at_one(L: int) -> dict[int, tuple]:
    """Taylor coefficient columns of the Y_k h-polynomials at t = 1."""
    cols = {}
    for k in range(1, L, 2):
        cols[k] = taylor_expand(y_element(k).q, 1, L).coeffs
    return cols


# -- projection -----------------------------------------------------------------------


def project(x: OAElement, a, L: int):
    """Coordinates of x in OA_{a,L} over the basis of build_quotient(a, L).

    The kernel is exactly the ideal generated by U_a(t)^L.
    """
    a = as_scalar(a)
    if a.is_zero():
        raise ValueError("a = 0 is rejected")
    if L < 1:
        raise ValueError("L must be positive")
    if a == Scalar(-1):
        return project(involution_sigma(x), Scalar(1), L)
    if a == Scalar(1):
        p_jet = taylor_expand(x.p, 1, L).coeffs
        coords = [c / Scalar(2) for c in p_jet]
        q_jet = list(taylor_expand(x.q, 1, L).coeffs)
        cols = _q_columns_at_one(L)
        y_coords = []
        for k in range(1, L, 2):
            col = cols[k]
            d = q_jet[k] / col[k]
            y_coords.append(d)
            if not d.is_zero():
                q_jet = [qc - d * cc for qc, cc in zip(q_jet, col)]
        if any(not c.is_zero() for c in q_jet):
            raise AssertionError("antisymmetric jet left residue outside the Y span")
        return coords + y_coords
    out = []
    for part in (x.p, x.p.invert_variable(), x.q):
        jet = taylor_expand(part, a, L).coeffs
        out.extend(Scalar(factorial(j)) * c for j, c in enumerate(jet))
    return out


# -- quotient construction ---------------------------------------------------------------


def build_quotient(a, L: int) -> QuotientAlgebra:
    """Structure constants of OA_{a,L}.

    a != +-1: dimension 3L, the truncated-current-algebra table.
    a  = +-1: dimension L + [L/2]; brackets computed exactly in the loop
    realization and projected back onto the X/odd-Y basis.
    """
    a = as_scalar(a)
    if a.is_zero():
        raise ValueError("a = 0 is rejected")
    if L < 1:
        raise ValueError("L must be positive")
    if a == Scalar(1) or a == Scalar(-1):
        labels = basis_at_one(L)
        elements = _loop_elements_at_one(L)
        table = {}
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                vec = project(elements[i].bracket(elements[j]), Scalar(1), L)
                entries = _sparse(vec)
                if entries:
                    table[(i, j)] = entries
        return QuotientAlgebra(a, L, labels, table)

    labels = (
        [BasisLabel("e", j) for j in range(L)]
        + [BasisLabel("f", j) for j in range(L)]
        + [BasisLabel("h", j) for j in range(L)]
    )
    table = {}
    E, F, H = 0, L, 2 * L
    for i in range(L):
        for j in range(L):
            if i + j >= L:
                continue
            c = comb(i + j, i)
            # [e_i, f_j] = C(i+j,i) h_{i+j}
            table[(E + i, F + j)] = ((H + i + j, Scalar(c)),)
            # [h_i, e_j] = 2 C(i+j,i) e_{i+j}, stored as [e_j, h_i] = -...
            table[(E + j, H + i)] = ((E + i + j, Scalar(-2 * c)),)
            # [f_j, h_i] = 2 C(i+j,i) f_{i+j}
            table[(F + j, H + i)] = ((F + i + j, Scalar(2 * c)),)
    return QuotientAlgebra(a, L, labels, table)


# -- reduction of even Y's -------------------------------------------------------------------


def y_reduction(L: int) -> dict[int, dict[int, Fraction]]:
    """Expansion of every even Y_n (n < L) over the odd basis Y_{2k+1} (< L).

    Computed two independent ways: back-substitution in the truncated
    constraint system (1 + (-1)^n) Y_n + sum_a C(a+n-1, a) Y_{a+n} = 0, and
    the closed Bernoulli form; both must agree exactly.
    """
    odd = [k for k in range(1, L, 2)]
    reduced: dict[int, dict[int, Fraction]] = {}
    for n in range(L - 1 if (L - 1) % 2 == 0 else L - 2, -1, -2):
        row: dict[int, Fraction] = {}
        for step in range(1, L - n):
            m = n + step
            c = Fraction(comb(m - 1, step))
            if m % 2 == 1:
                row[m] = row.get(m, Fraction(0)) - c / 2
            else:
                for k, v in reduced[m].items():
                    row[k] = row.get(k, Fraction(0)) - c * v / 2
        reduced[n] = {k: v for k, v in row.items() if v}

    # consistency: the odd-n constraints must already be satisfied
    for n in range(1, L, 2):
        acc: dict[int, Fraction] = {}
        for step in range(1, L - n):
            m = n + step
            c = Fraction(comb(m - 1, step))
            if m % 2 == 1:
                acc[m] = acc.get(m, Fraction(0)) + c
            else:
                for k, v in reduced[m].items():
                    acc[k] = acc.get(k, Fraction(0)) + c * v
        if any(acc.values()):
            raise AssertionError(f"odd constraint n={n} inconsistent with reduction")

    cache = bernoulli_build(max(1, L))
    for n2 in reduced:
        n = n2 // 2
        closed: dict[int, Fraction] = {}
        if n >= 1:
            for k in range(n, (L - 2) // 2 + 1):  # keep 2k+1 < L only
                idx = k - n + 1
                coeff = (
                    Fraction((-1) ** idx)
                    * (4**idx - 1)
                    * cache.B[idx]
                    / idx
                    * comb(2 * k, 2 * n - 1)
                )
                if coeff:
                    closed[2 * k + 1] = coeff
        if closed != reduced[n2]:
            raise AssertionError(f"Bernoulli closed form disagrees at Y_{n2}")
    return reduced


# -- E/F/H basis of the even-level quotient ------------------------------------------------


class EFHBasis(NamedTuple):
    quotient: QuotientAlgebra          # OA_{1,2l} in the X/Y basis
    E: list                            # E_j coordinate vectors, 0 <= j < l
    F: list
    H: list
    algebra: QuotientAlgebra           # same algebra over the E/F/H labels
    change: linalg.Matrix              # columns are E_0..,F_0..,H_0.. in X/Y coords


def efh_basis(l: int) -> EFHBasis:
    """The recursive E/F/H basis of OA_{1,2l}."""
    if l < 1:
        raise ValueError("l must be positive")
    Q = build_quotient(1, 2 * l)
    n = Q.dim

    def unit(label):
        v = [Scalar(0)] * n
        v[Q.index(label)] = Scalar(1)
        return v

    def add(x, y, cx=1, cy=1):
        cx, cy = as_scalar(cx), as_scalar(cy)
        return [cx * a + cy * b for a, b in zip(x, y)]

    alt = [Scalar(0)] * n  # X_1 - sum_{k=1}^{2l-1} (-1)^k X_k
    for k in range(1, 2 * l):
        alt[Q.index(BasisLabel("X", k))] = Scalar(-((-1) ** k))
    alt[Q.index(BasisLabel("X", 1))] = alt[Q.index(BasisLabel("X", 1))] + Scalar(1)

    y1 = unit(BasisLabel("Y", 1))
    E = [add(y1, alt, Fraction(1, 4), Fraction(1, 8))]
    F = [add(y1, alt, Fraction(1, 4), Fraction(-1, 8))]
    H = [[c / Scalar(2) for c in unit(BasisLabel("X", 0))]]

    h1 = Q.bracket_coords(E[0], F[0])
    for j in range(l - 1):
        E.append([c / Scalar(2) for c in Q.bracket_coords(h1, E[j])])
        F.append([-c / Scalar(2) for c in Q.bracket_coords(h1, F[j])])
    for m in range(1, l):
        H.append(Q.bracket_coords(E[0], F[m - 1]))

    change = [[None] * n for _ in range(n)]
    cols = E + F + H
    for cidx, vec in enumerate(cols):
        for r in range(n):
            change[r][cidx] = vec[r]
    inv = linalg.inverse(change)

    labels = (
        [BasisLabel("E", j) for j in range(l)]
        + [BasisLabel("F", j) for j in range(l)]
        + [BasisLabel("H", j) for j in range(l)]
    )
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = Q.bracket_coords(cols[i], cols[j])
            z = linalg.mat_vec(inv, w)
            entries = _sparse(z)
            if entries:
                table[(i, j)] = entries
    algebra = QuotientAlgebra(Scalar(1), 2 * l, labels, table)
    return EFHBasis(Q, E, F, H, algebra, change)


def efh_expected_bracket(l: int, lab1: BasisLabel, lab2: BasisLabel) -> dict[BasisLabel, Scalar]:
    """The bracket table [E_j,F_k] = H_{j+k+1}, [H_j,E_k] = 2E_{j+k},
    [H_j,F_k] = -2F_{j+k}, all other pairs commuting; indices past l-1 vanish."""
    def hit(kind, idx, coeff):
        return {BasisLabel(kind, idx): as_scalar(coeff)} if idx < l else {}

    k1, j1 = lab1.kind, lab1.j
    k2, j2 = lab2.kind, lab2.j
    if k1 == k2:
        return {}
    if (k1, k2) == ("E", "F"):
        return hit("H", j1 + j2 + 1, 1)
    if (k1, k2) == ("F", "E"):
        return hit("H", j1 + j2 + 1, -1)
    if (k1, k2) == ("H", "E"):
        return hit("E", j1 + j2, 2)
    if (k1, k2) == ("E", "H"):
        return hit("E", j1 + j2, -2)
    if (k1, k2) == ("H", "F"):
        return hit("F", j1 + j2, -2)
    if (k1, k2) == ("F", "H"):
        return hit("F", j1 + j2, 2)
    return {}


# -- spectrum of ad X_0 ------------------------------------------------------------------------


class AdSpectrum(NamedTuple):
    quotient: QuotientAlgebra
    eigenspaces: dict[int, list]  # eigenvalue -> list of coordinate vectors


def ad_spectrum_x0(l: int) -> AdSpectrum:
    """Exact eigenspaces of ad X_0 on OA_{1,2l}; eigenvalues are 0 and +-4,
    each of multiplicity l, and the 0-eigenvectors commute pairwise."""
    Q = build_quotient(1, 2 * l)
    n = Q.dim
    x0 = [Scalar(0)] * n
    x0[Q.index(BasisLabel("X", 0))] = Scalar(1)
    ad = Q.ad_matrix(x0)
    spaces = {}
    for lam in (0, 4, -4):
        shifted = [
            [ad[i][j] - (as_scalar(lam) if i == j else Scalar(0)) for j in range(n)]
            for i in range(n)
        ]
        spaces[lam] = linalg.nullspace(shifted)
    return AdSpectrum(Q, spaces)


def displayed_zero_eigenvectors(l: int):
    """X_0 and the alternating binomial sums (one per 2 <= j <= l)."""
    Q = build_quotient(1, 2 * l)
    n = Q.dim
    out = []
    v = [Scalar(0)] * n
    v[Q.index(BasisLabel("X", 0))] = Scalar(1)
    out.append(v)
    for j in range(2, l + 1):
        v = [Scalar(0)] * n
        for k in range(2 * j - 2, 2 * l):
            v[Q.index(BasisLabel("X", k))] = Scalar((-1) ** k * comb(k - 1, 2 * j - 4))
        out.append(v)
    return out


def displayed_pm_eigenvectors(l: int, sign: int):
    """2Y_{2j-1} +- (X_{2j-1} - sum_k (-1)^k C(k-1, 2j-2) X_k), 1 <= j <= l."""
    Q = build_quotient(1, 2 * l)
    n = Q.dim
    out = []
    for j in range(1, l + 1):
        v = [Scalar(0)] * n
        v[Q.index(BasisLabel("Y", 2 * j - 1))] = Scalar(2)
        inner = [Scalar(0)] * n
        inner[Q.index(BasisLabel("X", 2 * j - 1))] = Scalar(1)
        for k in range(2 * j - 1, 2 * l):
            idx = Q.index(BasisLabel("X", k))
            inner[idx] = inner[idx] - Scalar((-1) ** k * comb(k - 1, 2 * j - 2))
        out.append([a + (Scalar(sign) * b) for a, b in zip(v, inner)])
    return out


# -- the lambda-coordinate model -----------------------------------------------------------------


class LambdaModel(NamedTuple):
    source: QuotientAlgebra     # OA_{1,L} in the X/Y basis
    target: QuotientAlgebra     # graded model over s1, s2, s3 monomials
    matrix: linalg.Matrix       # target coords of each source basis vector
    source_graded: list[int]    # permutation of source indices by leading degree
    target_graded: list[int]


def sqrt_one_plus_sq(L: int) -> list[Fraction]:
    """Exact binomial series of sqrt(1 + x^2) mod x^L."""
    out = [Fraction(0)] * L
    for k in range(0, (L + 1) // 2):
        if 2 * k >= L:
            break
        out[2 * k] = binomial(Fraction(1, 2), k)
    return out


def lambda_model_algebra(L: int) -> QuotientAlgebra:
    """sl2<<lambda>> truncated at lambda^L over the labels s1_j (j even),
    s2_j, s3_j (j odd); [s^a l^p, s^b l^q] = 2i e_{abc} l^{p+q} s^c."""
    labels = (
        [BasisLabel("s1", j) for j in range(0, L, 2)]
        + [BasisLabel("s2", j) for j in range(1, L, 2)]
        + [BasisLabel("s3", j) for j in range(1, L, 2)]
    )
    index = {lbl: i for i, lbl in enumerate(labels)}
    cyclic = {("s1", "s2"): ("s3", 1), ("s2", "s3"): ("s1", 1), ("s3", "s1"): ("s2", 1),
              ("s2", "s1"): ("s3", -1), ("s3", "s2"): ("s1", -1), ("s1", "s3"): ("s2", -1)}
    table = {}
    two_i = Scalar(0, 2)
    for i, la in enumerate(labels):
        for j in range(i + 1, len(labels)):
            lb = labels[j]
            if la.kind == lb.kind:
                continue
            kind, sgn = cyclic[(la.kind, lb.kind)]
            power = la.j + lb.j
            if power >= L:
                continue
            target = BasisLabel(kind, power)
            table[(i, j)] = ((index[target], two_i * Scalar(sgn)),)
    return QuotientAlgebra(Scalar(1), L, labels, table)


def lambda_realization(L: int) -> LambdaModel:
    """The isomorphism OA_{1,L} -> truncated sl2<<lambda>> via
    X_k -> (u^k + v^k) s1 + i (u^k - v^k) s2, Y_k -> (-1)^k (u^k - v^k) s3,
    with u = l - 1 + sqrt(1+l^2), v = -l - 1 + sqrt(1+l^2)."""
    if L < 1:
        raise ValueError("L must be positive")
    source = build_quotient(1, L)
    target = lambda_model_algebra(L)

    s = sqrt_one_plus_sq(L)
    u = s[:]
    v = s[:]
    u[0] -= 1
    v[0] -= 1
    if L > 1:
        u[1] += 1
        v[1] -= 1

    upows = [[Fraction(1)] + [Fraction(0)] * (L - 1)]
    vpows = [[Fraction(1)] + [Fraction(0)] * (L - 1)]
    for _ in range(L - 1):
        upows.append(series_mul(upows[-1], u, L))
        vpows.append(series_mul(vpows[-1], v, L))

    tindex = {lbl: i for i, lbl in enumerate(target.basis)}
    matrix = linalg.zeros(target.dim, source.dim)
    for col, lbl in enumerate(source.basis):
        k = lbl.j
        plus = [a + b for a, b in zip(upows[k], vpows[k])]
        minus = [a - b for a, b in zip(upows[k], vpows[k])]
        if lbl.kind == "X":
            for j in range(0, L, 2):
                if plus[j]:
                    matrix[tindex[BasisLabel("s1", j)]][col] = Scalar(plus[j])
            for j in range(1, L, 2):
                if minus[j]:
                    matrix[tindex[BasisLabel("s2", j)]][col] = Scalar(0, minus[j])
            if any(plus[j] for j in range(1, L, 2)) or any(minus[j] for j in range(0, L, 2)):
                raise AssertionError("u,v parity failure in the lambda expansion")
        else:
            sgn = (-1) ** k
            for j in range(1, L, 2):
                if minus[j]:
                    matrix[tindex[BasisLabel("s3", j)]][col] = Scalar(sgn * minus[j])
            if any(minus[j] for j in range(0, L, 2)):
                raise AssertionError("u,v parity failure in the lambda expansion")

    def source_degree(lbl):
        return (lbl.j, 0 if lbl.kind == "X" else 1)

    def target_degree(lbl):
        return (lbl.j, {"s1": 0, "s2": 0, "s3": 1}[lbl.kind])

    source_graded = sorted(range(source.dim), key=lambda i: source_degree(source.basis[i]))
    target_graded = sorted(range(target.dim), key=lambda i: target_degree(target.basis[i]))
    return LambdaModel(source, target, matrix, source_graded, target_graded)
