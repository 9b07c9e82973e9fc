"""Finite-dimensional representations of the Onsager algebra.

A representation is an evaluation datum: nonzero points a_1..a_n and spins
s_1..s_n.  Each point evaluates the loop variable, each spin picks the
(2s+1)-dimensional irreducible of sl2, and the algebra acts on the tensor
product by Kronecker sums.  The kernel is the closed ideal generated by
prod_j U_{a_j}(t); the representation is irreducible exactly when no point
is +-1 and the classes a_j ~ 1/a_j are pairwise distinct, and Hermitian
when moreover every (a_j + 1/a_j)/2 lies in the real interval (-1, 1).

Matrices stay over Q(i) whenever the points are Gaussian rational; points
on the unit circle (e^{i theta}) fall back to complex floating arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import linalg
from .core import OAElement
from .ideals import ReciprocalPoly, canonical_root, elementary_factor
from .polyring import LaurentPoly
from .scalars import Scalar, as_scalar


class SpinRep:
    """The spin-s irreducible of sl2 with integer matrices.

    Basis v_0..v_{2s} with h v_k = (2s-2k) v_k, f v_k = v_{k+1} and
    e v_k = k(2s+1-k) v_{k-1}; then [e,f] = h, [h,e] = 2e, [h,f] = -2f hold
    exactly and the Casimir ef + fe + h^2/2 is the scalar 2s(s+1).
    """

    __slots__ = ("s", "dim", "mat_e", "mat_f", "mat_h")

    def __init__(self, s):
        s = Fraction(s)
        if s <= 0 or (2 * s).denominator != 1:
            raise ValueError("spin must be a positive half-integer")
        dim = int(2 * s) + 1
        e = linalg.zeros(dim, dim)
        f = linalg.zeros(dim, dim)
        h = linalg.zeros(dim, dim)
        for k in range(dim):
            h[k][k] = Scalar(2 * s - 2 * k)
            if k + 1 < dim:
                f[k + 1][k] = Scalar(1)
            if k >= 1:
                e[k - 1][k] = Scalar(k * (dim - k))
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "mat_e", e)
        object.__setattr__(self, "mat_f", f)
        object.__setattr__(self, "mat_h", h)

    def __setattr__(self, name, value):
        raise AttributeError("SpinRep is immutable")

    def casimir(self) -> linalg.Matrix:
        ef = linalg.mat_mul(self.mat_e, self.mat_f)
        fe = linalg.mat_mul(self.mat_f, self.mat_e)
        hh = linalg.mat_scale(linalg.mat_mul(self.mat_h, self.mat_h), Fraction(1, 2))
        return linalg.mat_add(linalg.mat_add(ef, fe), hh)

    def unitarized(self):
        """Float matrices in the orthonormal basis where e^dagger = f."""
        dim = self.dim
        e = np.zeros((dim, dim), dtype=complex)
        for k in range(1, dim):
            e[k - 1, k] = np.sqrt(k * (dim - k))
        f = e.conj().T
        h = np.diag([float(2 * self.s - 2 * k) for k in range(dim)]).astype(complex)
        return e, f, h


def spin_matrices(s) -> SpinRep:
    return SpinRep(s)


def evaluate(x: OAElement, a):
    """ev_a: the sl2 element with coefficients (p(a), p(1/a), q(a))."""
    from .core import SL2Coord

    a = as_scalar(a)
    if a.is_zero():
        raise ValueError("evaluation point a = 0 is rejected")
    return SL2Coord(
        LaurentPoly.constant(x.p.evaluate(a)),
        LaurentPoly.constant(x.p.evaluate(a.inverse())),
        LaurentPoly.constant(x.q.evaluate(a)),
    )


def _points_exact(points) -> bool:
    return all(isinstance(a, (int, Fraction, Scalar)) for a in points)


class EvalRep:
    """Evaluation representation on the tensor product of spin spaces."""

    __slots__ = ("points", "spins", "reps", "dim", "M0", "M1", "exact")

    def __init__(self, points, spins):
        points = tuple(points)
        spins = tuple(Fraction(s) for s in spins)
        if len(points) != len(spins):
            raise ValueError("points and spins must have equal length")
        if not points:
            raise ValueError("need at least one evaluation point")
        exact = _points_exact(points)
        if exact:
            points = tuple(as_scalar(a) for a in points)
            if any(a.is_zero() for a in points):
                raise ValueError("evaluation point a = 0 is rejected")
        else:
            points = tuple(complex(a) for a in points)
            if any(a == 0 for a in points):
                raise ValueError("evaluation point a = 0 is rejected")
        reps = tuple(SpinRep(s) for s in spins)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "spins", spins)
        object.__setattr__(self, "reps", reps)
        object.__setattr__(self, "dim", int(np.prod([r.dim for r in reps])))
        object.__setattr__(self, "exact", exact)
        from .core import generator_A

        object.__setattr__(self, "M0", None)
        object.__setattr__(self, "M1", None)
        if exact:
            object.__setattr__(self, "M0", self.apply(generator_A(0)))
            object.__setattr__(self, "M1", self.apply(generator_A(1)))

    def __setattr__(self, name, value):
        raise AttributeError("EvalRep is immutable")

    def _slot(self, j: int, local: linalg.Matrix) -> linalg.Matrix:
        out = local
        for i in range(j - 1, -1, -1):
            out = linalg.kron(linalg.identity(self.reps[i].dim), out)
        for i in range(j + 1, len(self.reps)):
            out = linalg.kron(out, linalg.identity(self.reps[i].dim))
        return out

    def apply(self, x: OAElement) -> linalg.Matrix:
        """The matrix of x: sum over slots of the evaluated sl2 element."""
        if not self.exact:
            raise ValueError("exact apply needs Gaussian-rational points")
        total = linalg.zeros(self.dim, self.dim)
        for j, (a, rep) in enumerate(zip(self.points, self.reps)):
            pe, pf, ph = evaluate(x, a).constant_values()
            local = linalg.mat_add(
                linalg.mat_add(
                    linalg.mat_scale(rep.mat_e, pe), linalg.mat_scale(rep.mat_f, pf)
                ),
                linalg.mat_scale(rep.mat_h, ph),
            )
            total = linalg.mat_add(total, self._slot(j, local))
        return total

    def numeric(self, unitarized: bool = False):
        """Float (M0, M1); the unitarized basis makes Hermitian points visible."""
        dims = [r.dim for r in self.reps]
        M0 = np.zeros((self.dim, self.dim), dtype=complex)
        M1 = np.zeros((self.dim, self.dim), dtype=complex)
        for j, rep in enumerate(self.reps):
            a = self.points[j].to_complex() if self.exact else self.points[j]
            if unitarized:
                e, f, _ = rep.unitarized()
            else:
                e = linalg.to_complex(rep.mat_e)
                f = linalg.to_complex(rep.mat_f)
            for mat, coeff_e, coeff_f in ((M0, 2, 2), (M1, 2 * a, 2 / a)):
                local = coeff_e * e + coeff_f * f
                full = np.eye(1, dtype=complex)
                for i, d in enumerate(dims):
                    full = np.kron(full, local if i == j else np.eye(d, dtype=complex))
                mat += full
        return M0, M1

    def kernel_polynomial(self) -> ReciprocalPoly:
        """Generating polynomial prod U_a over the distinct classes a ~ 1/a."""
        if not self.exact:
            raise ValueError("kernel polynomial needs Gaussian-rational points")
        seen = []
        for a in self.points:
            c = canonical_root(a)
            if c not in seen:
                seen.append(c)
        poly = LaurentPoly.one()
        for c in seen:
            poly = poly * elementary_factor(c)
        return ReciprocalPoly.from_poly(poly)


def build_rep(points, spins) -> EvalRep:
    return EvalRep(points, spins)


def matrix_dg_check(M0: linalg.Matrix, M1: linalg.Matrix) -> bool:
    """Exact Dolan-Grady check for a matrix pair."""
    c10 = linalg.commutator(M1, M0)
    lhs = linalg.commutator(M1, linalg.commutator(M1, c10))
    if not linalg.is_zero_matrix(linalg.mat_sub(lhs, linalg.mat_scale(c10, 16))):
        return False
    c01 = linalg.commutator(M0, M1)
    lhs = linalg.commutator(M0, linalg.commutator(M0, c01))
    return linalg.is_zero_matrix(linalg.mat_sub(lhs, linalg.mat_scale(c01, 16)))


def a_hat(a):
    """The class coordinate (a + 1/a)/2 identifying a with 1/a."""
    if isinstance(a, (int, Fraction, Scalar)):
        a = as_scalar(a)
        return (a + a.inverse()) / Scalar(2)
    a = complex(a)
    return (a + 1 / a) / 2


def is_irreducible(points, spins=None, tol: float = 1e-9) -> bool:
    """The classification criterion: no point at +-1 and the a-hat values
    pairwise distinct.  Spins never matter."""
    del spins
    if _points_exact(points):
        pts = [as_scalar(a) for a in points]
        if any(a == Scalar(1) or a == Scalar(-1) for a in pts):
            return False
        hats = [a_hat(a) for a in pts]
        return len(set(hats)) == len(hats)
    pts = [complex(a) for a in points]
    if any(abs(a - 1) < tol or abs(a + 1) < tol for a in pts):
        return False
    hats = [a_hat(a) for a in pts]
    for i in range(len(hats)):
        for j in range(i + 1, len(hats)):
            if abs(hats[i] - hats[j]) < tol:
                return False
    return True


def commutant_dimension(M0: np.ndarray, M1: np.ndarray, rtol: float = 1e-9) -> int:
    """dim {C : [C, M0] = [C, M1] = 0} via an SVD nullspace count."""
    d = M0.shape[0]
    eye = np.eye(d)
    rows = []
    for M in (M0, M1):
        rows.append(np.kron(eye, M) - np.kron(M.T, eye))
    stacked = np.vstack(rows)
    svals = np.linalg.svd(stacked, compute_uv=False)
    cutoff = rtol * max(svals[0], 1.0)
    return int(np.sum(svals < cutoff))


def is_hermitian(points, tol: float = 1e-12) -> bool:
    """Whether the representation datum is irreducible Hermitian: every
    a-hat real in (-1, 1), values pairwise distinct."""
    hats = []
    if _points_exact(points):
        for a in points:
            h = a_hat(a)
            if not h.is_real():
                return False
            if not (-1 < h.re < 1):
                return False
            hats.append(h)
        return len(set(hats)) == len(hats)
    for a in points:
        h = a_hat(complex(a))
        if abs(h.imag) > tol:
            return False
        if not (-1 + tol < h.real < 1 - tol):
            return False
        hats.append(h.real)
    for i in range(len(hats)):
        for j in range(i + 1, len(hats)):
            if abs(hats[i] - hats[j]) < tol:
                return False
    return True


def equivalence_key(points, spins):
    """Canonical invariant: the sorted multiset of (a-hat, spin) pairs,
    prefixed by an irreducibility flag (keys classify only irreducibles)."""
    spins = [Fraction(s) for s in spins]
    irr = is_irreducible(points)
    entries = []
    if _points_exact(points):
        for a, s in zip(points, spins):
            h = a_hat(a)
            entries.append((h.re, h.im, s))
    else:
        for a, s in zip(points, spins):
            h = a_hat(complex(a))
            entries.append((round(h.real, 9), round(h.imag, 9), s))
    entries.sort()
    return (irr, tuple(entries))
