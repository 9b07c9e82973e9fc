"""Exact Laurent polynomials over the Gaussian rationals.

A Laurent polynomial is stored as a sparse map {exponent: coefficient} with
no zero coefficients; the empty map is the zero polynomial.  Exponents are
arbitrary signed integers, so unit monomials t^k act freely.

The module also provides divisibility in C[t, t^-1] (units t^k never change
the answer), ordinary polynomial division / gcd / xgcd for the C[t] slice,
exact truncated Taylor expansion around any nonzero point, and a text format
that round-trips bit-exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar, as_scalar, binomial


class LaurentPoly:
    """Sparse exact Laurent polynomial in one variable t."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    clean[int(k)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def t(cls, k: int = 1) -> "LaurentPoly":
        return cls({k: 1})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs, low: int = 0) -> "LaurentPoly":
        """Dense coefficient list starting at exponent `low`."""
        return cls({low + j: c for j, c in enumerate(coeffs)})

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def low_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no low degree")
        return min(self.terms)

    def coeff(self, k: int) -> Scalar:
        return self.terms.get(k, Scalar(0))

    def is_polynomial(self) -> bool:
        """True if no negative exponents occur (an element of C[t])."""
        return all(k >= 0 for k in self.terms)

    def is_monic(self) -> bool:
        return bool(self.terms) and self.coeff(self.degree()) == Scalar(1)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(res, "terms", out)
        return res

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(res, "terms", {k: -c for k, c in self.terms.items()})
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        out: dict[int, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                c = c1 * c2
                s = out.get(k)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(res, "terms", out)
        return res

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "LaurentPoly":
        c = as_scalar(c)
        if c.is_zero():
            return LaurentPoly()
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(res, "terms", {k: v * c for k, v in self.terms.items()})
        return res

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) == 1:
                ((k, c),) = self.terms.items()
                return LaurentPoly({k * n: c**n})
            raise ValueError("negative powers only for monomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- Onsager-specific maps ----------------------------------------------------

    def invert_variable(self) -> "LaurentPoly":
        """f(t) -> f(1/t); exponent k maps to -k."""
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(res, "terms", {-k: c for k, c in self.terms.items()})
        return res

    def negate_variable(self) -> "LaurentPoly":
        """f(t) -> f(-t)."""
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(
            res, "terms", {k: (c if k % 2 == 0 else -c) for k, c in self.terms.items()}
        )
        return res

    def evaluate(self, a) -> Scalar:
        a = as_scalar(a)
        if a.is_zero() and any(k < 0 for k in self.terms):
            raise ValueError("cannot evaluate negative exponents at 0")
        out = Scalar(0)
        for k, c in self.terms.items():
            out = out + c * a**k
        return out

    # -- normal forms ----------------------------------------------------------

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit t^k."""
        res = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(res, "terms", {e + k: c for e, c in self.terms.items()})
        return res

    def unit_normalize(self) -> "LaurentPoly":
        """Shift to lowest exponent 0, giving a polynomial with nonzero constant term."""
        if not self.terms:
            return self
        return self.shift(-self.low_degree())

    def monic(self) -> "LaurentPoly":
        if not self.terms:
            raise ValueError("zero polynomial cannot be made monic")
        return self.scale(self.coeff(self.degree()).inverse())

    def dense_coeffs(self) -> list[Scalar]:
        """Coefficients of the C[t] slice from exponent 0 up to degree."""
        if not self.is_polynomial():
            raise ValueError("dense_coeffs needs a polynomial in t")
        if not self.terms:
            return []
        d = self.degree()
        return [self.coeff(k) for k in range(d + 1)]

    # -- text format -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                base = None
            elif k == 1:
                base = "t"
            else:
                base = f"t^{k}"
            if c.is_real():
                mag = abs(c.re)
                neg = c.re < 0
                if base is None:
                    body = str(mag)
                elif mag == 1:
                    body = base
                else:
                    body = f"{mag}*{base}"
            elif not c.re:
                mag = abs(c.im)
                neg = c.im < 0
                itxt = "i" if mag == 1 else f"{mag}*i"
                body = itxt if base is None else f"{itxt}*{base}"
            else:
                neg = False
                body = f"({c})" if base is None else f"({c})*{base}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_poly(text)


# -- parser -----------------------------------------------------------------------
#
# Grammar (also accepts factored input like "(t-1)^2*(t^2-5/2*t+1)"):
#   expr   := term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ('^' sint)?
#   atom   := rational | 'i' | 't' | '(' expr ')' | '-' factor


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, why):
        raise ValueError(f"bad polynomial at position {self.pos}: {why} in {self.text!r}")

    def parse_expr(self) -> LaurentPoly:
        out = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            nxt = self.parse_term()
            out = out + nxt if op == "+" else out - nxt
        return out

    def parse_term(self) -> LaurentPoly:
        out = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            out = out * self.parse_factor()
        return out

    def parse_factor(self) -> LaurentPoly:
        base = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            expo = self.parse_sint()
            if expo < 0:
                if len(base.terms) != 1:
                    self.error("negative exponent on a non-monomial")
                ((k, c),) = base.terms.items()
                if c != Scalar(1):
                    self.error("negative exponent with a coefficient")
                return LaurentPoly({k * expo: 1})
            return base**expo
        return base

    def parse_atom(self) -> LaurentPoly:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.parse_factor()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                self.error("missing ')'")
            self.pos += 1
            return inner
        if ch == "t":
            self.pos += 1
            return LaurentPoly.t()
        if ch == "i":
            self.pos += 1
            return LaurentPoly.constant(Scalar(0, 1))
        if ch.isdigit():
            num = self.parse_rational()
            if self.peek() == "i":
                self.pos += 1
                return LaurentPoly.constant(Scalar(0, num))
            return LaurentPoly.constant(num)
        self.error(f"unexpected {ch!r}")

    def parse_rational(self) -> Fraction:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        num = int(self.text[start : self.pos])
        if self.peek() == "/":
            save = self.pos
            self.pos += 1
            if not self.peek().isdigit():
                self.pos = save
                return Fraction(num)
            dstart = self.pos
            while self.peek().isdigit():
                self.pos += 1
            return Fraction(num, int(self.text[dstart : self.pos]))
        return Fraction(num)

    def parse_sint(self) -> int:
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        if not self.peek().isdigit():
            self.error("expected integer exponent")
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        return sign * int(self.text[start : self.pos])


def parse_poly(text: str) -> LaurentPoly:
    p = _Parser(text)
    out = p.parse_expr()
    if p.pos != len(p.text):
        p.error("trailing input")
    return out


# -- divisibility and euclidean tools ------------------------------------------------


def poly_divmod(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Exact division with remainder in C[t]; both arguments must be polynomials."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("poly_divmod needs polynomials in t")
    if f.is_zero():
        return LaurentPoly.zero(), LaurentPoly.zero()
    rem = {k: c for k, c in f.terms.items()}
    quo: dict[int, Scalar] = {}
    dg = g.degree()
    lead = g.coeff(dg)
    while rem:
        dr = max(rem)
        if dr < dg:
            break
        c = rem[dr] / lead
        quo[dr - dg] = c
        for k, gc in g.terms.items():
            kk = k + dr - dg
            s = rem.get(kk, Scalar(0)) - c * gc
            if s.is_zero():
                rem.pop(kk, None)
            else:
                rem[kk] = s
    return LaurentPoly(quo), LaurentPoly(rem)


def divides(P: LaurentPoly, f: LaurentPoly) -> bool:
    """Whether f lies in P * C[t, t^-1]; unit monomials never affect the answer."""
    if P.is_zero():
        raise ValueError("divisibility by the zero polynomial is undefined")
    if f.is_zero():
        return True
    _, r = poly_divmod(f.unit_normalize(), P.unit_normalize())
    return r.is_zero()


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Monic gcd, computed after unit-normalizing both arguments."""
    a = f.unit_normalize()
    b = g.unit_normalize()
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r.unit_normalize() if not r.is_zero() else r
    if a.is_zero():
        return a
    return a.monic()


def poly_xgcd(f: LaurentPoly, g: LaurentPoly):
    """Extended Euclid in C[t]: returns (d, s, u) with s*f + u*g = d, d monic."""
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("poly_xgcd needs polynomials in t")
    r0, r1 = f, g
    s0, s1 = LaurentPoly.one(), LaurentPoly.zero()
    u0, u1 = LaurentPoly.zero(), LaurentPoly.one()
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if r0.is_zero():
        return r0, s0, u0
    lead = r0.coeff(r0.degree()).inverse()
    return r0.scale(lead), s0.scale(lead), u0.scale(lead)


def poly_lcm(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    d = poly_gcd(f, g)
    if d.is_zero():
        return LaurentPoly.zero()
    q, r = poly_divmod((f.unit_normalize() * g.unit_normalize()), d)
    assert r.is_zero()
    return q.monic()


# -- truncated Taylor expansion -----------------------------------------------------


class TruncatedSeries:
    """Exact Taylor jet of order L around t = a, coefficients of u^j (u = t - a)."""

    __slots__ = ("center", "order", "coeffs")

    def __init__(self, center, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        coeffs = tuple(as_scalar(c) for c in coeffs)
        if len(coeffs) != order:
            raise ValueError("coefficient count must equal order")
        object.__setattr__(self, "center", as_scalar(center))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other):
        if self.center != other.center or self.order != other.order:
            raise ValueError("series live at different centers or orders")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.center == other.center
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.center, self.order, self.coeffs))

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(
            self.center, self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(
            self.center, self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other):
        self._check(other)
        L = self.order
        out = [Scalar(0)] * L
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for k, b in enumerate(other.coeffs):
                if j + k >= L:
                    break
                out[j + k] = out[j + k] + a * b
        return TruncatedSeries(self.center, L, out)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries(a={self.center}, [{body}])"


def taylor_expand(f: LaurentPoly, a, L: int) -> TruncatedSeries:
    """First L exact Taylor coefficients of f at t = a (a != 0).

    Negative powers of t expand through the identity
    t^m = sum_j C(m, j) a^(m-j) u^j, valid for every integer m.
    """
    a = as_scalar(a)
    if a.is_zero():
        raise ValueError("expansion point a = 0 is rejected (t^-1 must expand)")
    if L < 1:
        raise ValueError("order must be positive")
    coeffs = [Scalar(0)] * L
    for k, c in f.terms.items():
        for j in range(L):
            b = binomial(k, j)
            if b == 0:
                continue
            coeffs[j] = coeffs[j] + c * (a ** (k - j)) * Scalar(b)
    return TruncatedSeries(a, L, coeffs)
