"""The Onsager algebra inside the sl2 loop algebra.

Elements are written p(t)e + p(1/t)f + q(t)h with q(1/t) = -q(t); the
bracket convention on sl2 is [e,f] = h, [h,e] = 2e, [h,f] = -2f, extended
to loops by [p(t)x, q(t)y] = p(t)q(t)[x,y].

A_m = 2 t^m e + 2 t^-m f and G_m = (t^m - t^-m) h generate everything,
and the pair (A_0, A_1) satisfies the Dolan-Grady condition
[A_1,[A_1,[A_1,A_0]]] = 16 [A_1,A_0] (and the swap).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .polyring import LaurentPoly, parse_poly
from .scalars import Scalar, as_scalar


class SL2Coord:
    """A general loop-algebra element pe(t) e + pf(t) f + ph(t) h."""

    __slots__ = ("pe", "pf", "ph")

    def __init__(self, pe: LaurentPoly, pf: LaurentPoly, ph: LaurentPoly):
        object.__setattr__(self, "pe", pe)
        object.__setattr__(self, "pf", pf)
        object.__setattr__(self, "ph", ph)

    def __setattr__(self, name, value):
        raise AttributeError("SL2Coord is immutable")

    def __eq__(self, other):
        if not isinstance(other, SL2Coord):
            return NotImplemented
        return self.pe == other.pe and self.pf == other.pf and self.ph == other.ph

    def __hash__(self):
        return hash((self.pe, self.pf, self.ph))

    def is_zero(self) -> bool:
        return self.pe.is_zero() and self.pf.is_zero() and self.ph.is_zero()

    def __add__(self, other: "SL2Coord") -> "SL2Coord":
        return SL2Coord(self.pe + other.pe, self.pf + other.pf, self.ph + other.ph)

    def __sub__(self, other: "SL2Coord") -> "SL2Coord":
        return SL2Coord(self.pe - other.pe, self.pf - other.pf, self.ph - other.ph)

    def __neg__(self):
        return SL2Coord(-self.pe, -self.pf, -self.ph)

    def scale(self, c) -> "SL2Coord":
        return SL2Coord(self.pe.scale(c), self.pf.scale(c), self.ph.scale(c))

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, Scalar)):
            return self.scale(c)
        return NotImplemented

    def bracket(self, other: "SL2Coord") -> "SL2Coord":
        xe, xf, xh = self.pe, self.pf, self.ph
        ye, yf, yh = other.pe, other.pf, other.ph
        return SL2Coord(
            (xh * ye - xe * yh).scale(2),
            (xf * yh - xh * yf).scale(2),
            xe * yf - xf * ye,
        )

    def constant_values(self) -> tuple[Scalar, Scalar, Scalar]:
        """The (e, f, h) coefficients when all three are constants."""
        vals = []
        for part in (self.pe, self.pf, self.ph):
            if part.is_zero():
                vals.append(Scalar(0))
            elif part.terms.keys() == {0}:
                vals.append(part.coeff(0))
            else:
                raise ValueError("element is not constant")
        return tuple(vals)

    def __repr__(self):
        return f"SL2Coord(e: {self.pe}, f: {self.pf}, h: {self.ph})"


class OAElement:
    """An Onsager-algebra element, the pair (p, q) with q(1/t) = -q(t)."""

    __slots__ = ("p", "q")

    def __init__(self, p: LaurentPoly, q: LaurentPoly):
        if not (q.invert_variable() + q).is_zero():
            raise ValueError("q(1/t) != -q(t): not an Onsager element")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("OAElement is immutable")

    def __eq__(self, other):
        if not isinstance(other, OAElement):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __add__(self, other: "OAElement") -> "OAElement":
        return OAElement(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "OAElement") -> "OAElement":
        return OAElement(self.p - other.p, self.q - other.q)

    def __neg__(self):
        return OAElement(-self.p, -self.q)

    def scale(self, c) -> "OAElement":
        return OAElement(self.p.scale(c), self.q.scale(c))

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, Scalar)):
            return self.scale(c)
        return NotImplemented

    def to_sl2(self) -> SL2Coord:
        return SL2Coord(self.p, self.p.invert_variable(), self.q)

    def bracket(self, other: "OAElement") -> "OAElement":
        # [pe + p~f + qh, re + r~f + sh] stays inside the algebra:
        # e-part 2(qr - ps), h-part p r~ - p~ r (exactly antisymmetric).
        p, q = self.p, self.q
        r, s = other.p, other.q
        new_p = (q * r - p * s).scale(2)
        new_q = p * r.invert_variable() - p.invert_variable() * r
        return OAElement(new_p, new_q)

    def __repr__(self):
        return f"OAElement(p: {self.p}, q: {self.q})"

    # -- JSON wire format ------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"p": str(self.p), "q": str(self.q)})

    @classmethod
    def from_json(cls, text: str) -> "OAElement":
        data = json.loads(text)
        return cls(parse_poly(data["p"]), parse_poly(data["q"]))


def generator_A(m: int) -> OAElement:
    """A_m = 2 t^m e + 2 t^-m f."""
    return OAElement(LaurentPoly.monomial(m, 2), LaurentPoly.zero())


def generator_G(m: int) -> OAElement:
    """G_m = (t^m - t^-m) h."""
    if m == 0:
        return OAElement(LaurentPoly.zero(), LaurentPoly.zero())
    return OAElement(
        LaurentPoly.zero(), LaurentPoly.monomial(m, 1) - LaurentPoly.monomial(-m, 1)
    )


def involution_iota(x: OAElement) -> OAElement:
    """iota: p(t) -> p(1/t); sends A_m -> A_-m and G_m -> G_-m."""
    return OAElement(x.p.invert_variable(), x.q.invert_variable())


def involution_sigma(x: OAElement) -> OAElement:
    """sigma: t -> -t; sends A_m -> (-1)^m A_m."""
    return OAElement(x.p.negate_variable(), x.q.negate_variable())


def dg_check(b0, b1) -> bool:
    """The Dolan-Grady condition for a pair in any bracket-closed algebra here.

    Checks [b1,[b1,[b1,b0]]] == 16 [b1,b0] and the swapped identity, exactly.
    """
    c10 = b1.bracket(b0)
    lhs1 = b1.bracket(b1.bracket(c10))
    if not (lhs1 - c10.scale(16)).is_zero():
        return False
    c01 = b0.bracket(b1)
    lhs0 = b0.bracket(b0.bracket(c01))
    return (lhs0 - c01.scale(16)).is_zero()


def random_element(rng, max_exp: int = 3, max_num: int = 4) -> OAElement:
    """A random Onsager element with small Gaussian-rational coefficients."""
    def rand_scalar():
        return Scalar(
            Fraction(rng.randint(-max_num, max_num), rng.randint(1, 3)),
            Fraction(rng.randint(-max_num, max_num), rng.randint(1, 3)),
        )

    p = LaurentPoly(
        {k: rand_scalar() for k in range(-max_exp, max_exp + 1) if rng.random() < 0.5}
    )
    q_plus = LaurentPoly(
        {k: rand_scalar() for k in range(1, max_exp + 1) if rng.random() < 0.5}
    )
    q = q_plus - q_plus.invert_variable()
    return OAElement(p, q)


def random_poly(rng, lo: int = -3, hi: int = 3, max_num: int = 4) -> LaurentPoly:
    return LaurentPoly(
        {
            k: Scalar(Fraction(rng.randint(-max_num, max_num), rng.randint(1, 3)))
            for k in range(lo, hi + 1)
            if rng.random() < 0.6
        }
    )
