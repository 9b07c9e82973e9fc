"""Closed ideals of the Onsager algebra and reciprocal polynomials.

Every closed ideal is I_P for a monic reciprocal polynomial P whose zero
multiplicities at t = 1 and t = -1 are both even.  P factors into the
elementary reciprocal polynomials

    U_a(t) = t^2 - (a + 1/a) t + 1   (a^2 != 1),      t - a   (a = +-1),

with U_a = U_{1/a}.  This module decides membership in I_P, computes the
central closure Z(I_P), decides closedness, performs the Chinese-remainder
lift across coprime moduli, and extracts the generating polynomial of the
smallest closed ideal containing given elements.

No root finding happens here: factorizations are either supplied by the
caller (make_reciprocal) or only needed at t = +-1, where exact division
decides multiplicities.
"""

from __future__ import annotations

from fractions import Fraction

from .core import OAElement
from .polyring import (
    LaurentPoly,
    divides,
    poly_divmod,
    poly_gcd,
    poly_xgcd,
)
from .scalars import Scalar, as_scalar


def canonical_root(a) -> Scalar:
    """The representative of the pair {a, 1/a}: |a| >= 1, ties broken by
    nonnegative imaginary part, then nonnegative real part."""
    a = as_scalar(a)
    if a.is_zero():
        raise ValueError("root a = 0 is rejected")
    inv = a.inverse()
    n = a.abs2()
    if n > 1:
        return a
    if n < 1:
        return inv
    # |a| = 1: a and 1/a = conj(a) differ only in the sign of the imaginary part;
    # im = 0 forces a = +-1, which is self-reciprocal.
    if a.im < 0:
        return inv
    return a


def elementary_factor(a) -> LaurentPoly:
    """U_a(t); the quadratic t^2 - (a + 1/a) t + 1, or t -+ 1 at a = +-1."""
    a = as_scalar(a)
    if a.is_zero():
        raise ValueError("root a = 0 is rejected")
    if a == Scalar(1) or a == Scalar(-1):
        return LaurentPoly({1: 1, 0: -a})
    s = a + a.inverse()
    return LaurentPoly({2: 1, 1: -s, 0: 1})


def is_reciprocal(f: LaurentPoly) -> bool:
    """Whether the monic polynomial f satisfies f(t) = +- t^deg f * f(1/t)."""
    if f.is_zero() or not f.is_polynomial():
        raise ValueError("is_reciprocal needs a nonzero polynomial in t")
    if not f.is_monic():
        raise ValueError("is_reciprocal needs a monic polynomial")
    flipped = f.invert_variable().shift(f.degree())
    return flipped == f or flipped == -f


class ReciprocalPoly:
    """A monic reciprocal polynomial with its t = +-1 multiplicities split off.

    poly = (t-1)^L (t+1)^K * star_part with star_part(+-1) != 0.  When the
    polynomial was assembled from roots, elementary_factors keeps the
    canonicalized (root, multiplicity) list.
    """

    __slots__ = ("poly", "mult_at_one", "mult_at_minus_one", "star_part", "elementary_factors")

    def __init__(self, poly, mult_at_one, mult_at_minus_one, star_part, elementary_factors=None):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "mult_at_one", mult_at_one)
        object.__setattr__(self, "mult_at_minus_one", mult_at_minus_one)
        object.__setattr__(self, "star_part", star_part)
        object.__setattr__(self, "elementary_factors", elementary_factors)

    def __setattr__(self, name, value):
        raise AttributeError("ReciprocalPoly is immutable")

    def __eq__(self, other):
        if not isinstance(other, ReciprocalPoly):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"ReciprocalPoly('{self.poly}')"

    def degree(self) -> int:
        return self.poly.degree() if not self.poly.is_zero() else 0

    @classmethod
    def from_poly(cls, f: LaurentPoly) -> "ReciprocalPoly":
        """Validate f and extract the (t-1), (t+1) multiplicities by exact division."""
        if not is_reciprocal(f):
            raise ValueError(f"not a reciprocal polynomial: {f}")
        t_minus = LaurentPoly({1: 1, 0: -1})
        t_plus = LaurentPoly({1: 1, 0: 1})
        star = f
        L = 0
        while True:
            q, r = poly_divmod(star, t_minus)
            if not r.is_zero():
                break
            star, L = q, L + 1
        K = 0
        while True:
            q, r = poly_divmod(star, t_plus)
            if not r.is_zero():
                break
            star, K = q, K + 1
        return cls(f, L, K, star)

    @classmethod
    def make(cls, roots_with_multiplicity) -> "ReciprocalPoly":
        """Product of U_a(t)^m over canonicalized roots; merges a with 1/a."""
        merged: dict[Scalar, int] = {}
        order: list[Scalar] = []
        for a, m in roots_with_multiplicity:
            if m <= 0:
                raise ValueError("multiplicities must be positive")
            c = canonical_root(a)
            if c not in merged:
                merged[c] = 0
                order.append(c)
            merged[c] += m
        poly = LaurentPoly.one()
        star = LaurentPoly.one()
        L = K = 0
        for c in order:
            m = merged[c]
            factor = elementary_factor(c) ** m
            poly = poly * factor
            if c == Scalar(1):
                L += m
            elif c == Scalar(-1):
                K += m
            else:
                star = star * factor
        return cls(poly, L, K, star, tuple((c, merged[c]) for c in order))


def make_reciprocal(roots_with_multiplicity) -> ReciprocalPoly:
    return ReciprocalPoly.make(roots_with_multiplicity)


def ideal_member(x: OAElement, P: ReciprocalPoly | LaurentPoly) -> bool:
    """Whether x lies in I_P, i.e. P | p and P | q."""
    poly = P.poly if isinstance(P, ReciprocalPoly) else P
    return divides(poly, x.p) and divides(poly, x.q)


class IdealHandle:
    """Moduli of the central closure: p_modulus | p and q_modulus | q cut out Z(I_P)."""

    __slots__ = ("gen", "p_modulus", "q_modulus")

    def __init__(self, gen: ReciprocalPoly, p_modulus: LaurentPoly, q_modulus: LaurentPoly):
        object.__setattr__(self, "gen", gen)
        object.__setattr__(self, "p_modulus", p_modulus)
        object.__setattr__(self, "q_modulus", q_modulus)

    def __setattr__(self, name, value):
        raise AttributeError("IdealHandle is immutable")

    def contains(self, x: OAElement) -> bool:
        return divides(self.p_modulus, x.p) and divides(self.q_modulus, x.q)


def central_closure(P: ReciprocalPoly) -> IdealHandle:
    """Z(I_P): p must be divisible by (t-1)^(2[L/2]) (t+1)^(2[K/2]) P*, q by P."""
    t_minus = LaurentPoly({1: 1, 0: -1})
    t_plus = LaurentPoly({1: 1, 0: 1})
    p_mod = (
        t_minus ** (2 * (P.mult_at_one // 2))
        * t_plus ** (2 * (P.mult_at_minus_one // 2))
        * P.star_part
    )
    return IdealHandle(P, p_mod, P.poly)


def is_closed(P: ReciprocalPoly) -> bool:
    """Closed ideals are exactly those with even multiplicities at t = +-1."""
    return P.mult_at_one % 2 == 0 and P.mult_at_minus_one % 2 == 0


def ideal_lcm(P: ReciprocalPoly, Q: ReciprocalPoly) -> ReciprocalPoly:
    """Generator of I_P intersect I_Q."""
    g = poly_gcd(P.poly, Q.poly)
    quotient, r = poly_divmod(P.poly * Q.poly, g)
    assert r.is_zero()
    return ReciprocalPoly.from_poly(quotient.monic())


def crt_lift(targets) -> OAElement:
    """An element X with X = X_j mod I_{P_j} for each (X_j, P_j) in targets.

    Follows the surjectivity construction: clear denominators with t^N,
    CRT-solve p and q separately in C[t], then antisymmetrize q as
    q(t) = (q~(t)/t^N - t^N q~(1/t)) / 2.  Moduli must be pairwise coprime.
    """
    targets = list(targets)
    if not targets:
        raise ValueError("crt_lift needs at least one target")
    polys = []
    for _, P in targets:
        poly = P.poly if isinstance(P, ReciprocalPoly) else P.unit_normalize().monic()
        if not is_reciprocal(poly):
            raise ValueError(f"modulus {poly} is not reciprocal")
        polys.append(poly)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            g = poly_gcd(polys[i], polys[j])
            if g.is_zero() or g.degree() > 0:
                raise ValueError(
                    f"moduli {i} and {j} are not coprime: gcd = {g}"
                )

    N = 0
    for x, _ in targets:
        for f in (x.p, x.q):
            if not f.is_zero():
                N = max(N, -f.low_degree())

    modulus = LaurentPoly.one()
    for P in polys:
        modulus = modulus * P

    def crt_solve(residues: list[LaurentPoly]) -> LaurentPoly:
        out = LaurentPoly.zero()
        for rj, Pj in zip(residues, polys):
            others, r = poly_divmod(modulus, Pj)
            assert r.is_zero()
            g, s, _ = poly_xgcd(others, Pj)
            assert not g.is_zero() and g.degree() == 0
            # others * s = 1 mod Pj and = 0 mod the rest
            _, term = poly_divmod(rj * others * s, modulus)
            out = out + term
        _, out = poly_divmod(out, modulus)
        return out

    p_residues = []
    q_residues = []
    for (x, _), Pj in zip(targets, polys):
        _, rp = poly_divmod(x.p.shift(N), Pj)
        _, rq = poly_divmod(x.q.shift(N), Pj)
        p_residues.append(rp)
        q_residues.append(rq)

    p_tilde = crt_solve(p_residues)
    q_tilde = crt_solve(q_residues)
    p = p_tilde.shift(-N)
    q = (q_tilde.shift(-N) - q_tilde.invert_variable().shift(N)).scale(Fraction(1, 2))
    lifted = OAElement(p, q)
    for (xj, _), Pj in zip(targets, polys):
        residue = lifted - xj
        assert divides(Pj, residue.p) and divides(Pj, residue.q)
    return lifted


def reciprocal_gcd(elements) -> LaurentPoly:
    """Monic generator of the Laurent ideal spanned by all p_i, q_i and their
    iota-images, normalized into C[t] with nonzero constant term."""
    g = LaurentPoly.zero()
    for x in elements:
        for f in (x.p, x.q):
            if f.is_zero():
                continue
            for h in (f, f.invert_variable()):
                g = h.unit_normalize() if g.is_zero() else poly_gcd(g, h)
    if g.is_zero():
        raise ValueError("all-zero input has no generating polynomial")
    return g.monic()


def generating_polynomial(elements, closed: bool = True) -> ReciprocalPoly:
    """Generating polynomial of the smallest (closed) ideal containing the inputs.

    The raw gcd of {p_i, q_i, iota-images} is the maximal reciprocal divisor
    of the coefficient ideal; with closed=True its multiplicities at t = +-1
    are rounded down to even, which yields the generating polynomial of the
    minimal closed ideal containing the elements.
    """
    g = ReciprocalPoly.from_poly(reciprocal_gcd(elements))
    if not closed:
        return g
    t_minus = LaurentPoly({1: 1, 0: -1})
    t_plus = LaurentPoly({1: 1, 0: 1})
    L = 2 * (g.mult_at_one // 2)
    K = 2 * (g.mult_at_minus_one // 2)
    poly = t_minus**L * t_plus**K * g.star_part
    return ReciprocalPoly(poly, L, K, g.star_part)
