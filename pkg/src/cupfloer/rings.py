"""Exact coefficient rings and univariate Laurent polynomials.

All arithmetic is exact: integers are arbitrary precision, rationals are
``fractions.Fraction``, and Z/m coefficients are canonical residues in
``[0, m)``.  A Laurent polynomial is stored as a map from integer
exponents to *nonzero* ring elements, so two polynomials are equal
exactly when their maps are equal.

The variable is written ``T``.  The degree-shifting operator U of the
homology layer acts as multiplication by ``T^-1``, so U-polynomials are
turned into T-polynomials by the exponent substitution ``T -> T^-1``
(:meth:`LaurentPoly.substitute` with scale ``-1``).

Division theory (gcd with Bezout cofactors, denominator clearing) is
done in Q[T] after shifting units away, which is where the cyclicity
arguments live; Z/m coefficients are deliberately excluded from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoeffRing:
    """One of Z, Q, or Z/m.  Immutable and hashable."""

    kind: str                 # "Z" | "Q" | "Zmod"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zmod"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise ValueError("Z/m needs a modulus m >= 2")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} does not take a modulus")

    @property
    def is_field(self) -> bool:
        if self.kind == "Q":
            return True
        if self.kind == "Zmod":
            return _is_prime(self.modulus)
        return False

    def coerce(self, x):
        """Bring x into canonical element form for this ring."""
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an element of {self}")
            x = x.numerator
        x = int(x)
        if self.kind == "Zmod":
            return x % self.modulus
        return x

    def is_zero(self, x) -> bool:
        return self.coerce(x) == 0

    def add(self, a, b):
        return self.coerce(a + b)

    def sub(self, a, b):
        return self.coerce(a - b)

    def mul(self, a, b):
        return self.coerce(a * b)

    def neg(self, a):
        return self.coerce(-a)

    def __str__(self):
        if self.kind == "Zmod":
            return f"Z/{self.modulus}"
        return self.kind

    @staticmethod
    def from_token(token: str) -> "CoeffRing":
        """Parse "Z", "Q" or "Zmod:<m>" (the spec-file encoding)."""
        if token == "Z":
            return ZZ
        if token == "Q":
            return QQ
        if token.startswith("Zmod:"):
            return CoeffRing("Zmod", int(token.split(":", 1)[1]))
        raise ValueError(f"unknown ring token {token!r}")

    def token(self) -> str:
        if self.kind == "Zmod":
            return f"Zmod:{self.modulus}"
        return self.kind


ZZ = CoeffRing("Z")
QQ = CoeffRing("Q")


def Zmod(m: int) -> CoeffRing:
    return CoeffRing("Zmod", m)


class LaurentPoly:
    """A Laurent polynomial over a :class:`CoeffRing`, in canonical form.

    >>> t = LaurentPoly.t(ZZ)
    >>> (t - 1) * (t + 1) == t**2 - 1
    True
    >>> (t ** -3 * (t - 1)).min_exp()
    -3
    """

    __slots__ = ("ring", "_c")

    def __init__(self, ring: CoeffRing, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = ring.coerce(v)
                if v != 0:
                    c[int(e)] = v
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_c", c)

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(ring: CoeffRing) -> "LaurentPoly":
        return LaurentPoly(ring)

    @staticmethod
    def one(ring: CoeffRing) -> "LaurentPoly":
        return LaurentPoly(ring, {0: 1})

    @staticmethod
    def const(ring: CoeffRing, c) -> "LaurentPoly":
        return LaurentPoly(ring, {0: c})

    @staticmethod
    def t(ring: CoeffRing, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly(ring, {exp: 1})

    @staticmethod
    def t_pow_minus_one(ring: CoeffRing, n: int) -> "LaurentPoly":
        """T^n - 1 (zero when n = 0)."""
        return LaurentPoly(ring, {n: 1}) - LaurentPoly.one(ring)

    # -- inspection ---------------------------------------------------

    def coeffs(self) -> dict:
        return dict(self._c)

    def coeff(self, e: int):
        return self._c.get(e, self.ring.coerce(0))

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def support(self):
        return sorted(self._c)

    # -- ring operations ----------------------------------------------

    def _check(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(self.ring, c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(self.ring, c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only via substitute/shift")
        result = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._c == other._c

    def __hash__(self):
        return hash((self.ring, frozenset(self._c.items())))

    # -- structural operations -----------------------------------------

    def substitute(self, scale: int) -> "LaurentPoly":
        """Exponent substitution T -> T^scale; scale = -1 turns the
        U-polynomial p(U) into p(T^-1)."""
        if scale == 0:
            raise ValueError("substitution scale must be nonzero")
        return LaurentPoly(self.ring, {e * scale: v for e, v in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit T^k."""
        return LaurentPoly(self.ring, {e + k: v for e, v in self._c.items()})

    def map_ring(self, ring: CoeffRing) -> "LaurentPoly":
        """Re-coerce coefficients into another ring (e.g. Z into Q)."""
        return LaurentPoly(ring, self._c)

    def unit_normalize(self) -> tuple["LaurentPoly", int]:
        """Shift the smallest exponent to 0; returns (poly, shift applied).

        The result is an ordinary polynomial with nonzero constant term
        (deterministic unit normalization for divisibility questions).
        """
        if not self._c:
            return self, 0
        k = -self.min_exp()
        return self.shift(k), k

    # -- printing -------------------------------------------------------

    def to_string(self, var: str = "T") -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            if e == 0:
                term = str(v)
            else:
                ve = var if e == 1 else f"{var}^{e}"
                if v == 1:
                    term = ve
                elif v == -1:
                    term = f"-{ve}"
                else:
                    term = f"{v}*{ve}"
            parts.append(term)
        s = parts[0]
        for term in parts[1:]:
            s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self.ring}, {self.to_string()})"

    def __str__(self):
        return self.to_string()


# ---------------------------------------------------------------------
# Dense Q[T] helpers (ascending coefficient lists of Fractions).  These
# back the gcd machinery here and the field-polynomial matrices in
# polylinalg.

def _dense_from_laurent(p: LaurentPoly) -> list[Fraction]:
    if p.is_zero():
        return []
    if p.min_exp() < 0:
        raise ValueError("negative exponent; unit-normalize first")
    out = [Fraction(0)] * (p.max_exp() + 1)
    for e, v in p.coeffs().items():
        out[e] = Fraction(v)
    return out


def _dense_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _dense_trim(out)


def _dense_add(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] += y
    return _dense_trim(out)


def _dense_scale(a, s):
    return _dense_trim([x * s for x in a])


def _dense_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _dense_trim(a)


def _laurent_from_dense(ring, coeffs, shift=0):
    return LaurentPoly(ring, {i + shift: v for i, v in enumerate(coeffs)})


def laurent_gcd(a: LaurentPoly, b: LaurentPoly):
    """gcd of two Laurent polynomials in Q[T], with Bezout cofactors.

    Returns (g, u, v) with g = u*a + v*b, g monic with nonzero constant
    term, and g dividing both inputs after unit normalization.  Inputs
    over Z are embedded into Q; Z/m inputs are rejected.
    """
    if a.ring.kind == "Zmod" or b.ring.kind == "Zmod":
        raise ValueError("gcd is defined over Z or Q coefficients only")
    if a.is_zero() or b.is_zero():
        raise ValueError("gcd of zero polynomial is not defined")
    a = a.map_ring(QQ)
    b = b.map_ring(QQ)
    a0, sa = a.unit_normalize()
    b0, sb = b.unit_normalize()

    # Euclid on dense lists, carrying Bezout rows along.
    r0, r1 = _dense_from_laurent(a0), _dense_from_laurent(b0)
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = _dense_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _dense_add(u0, _dense_scale(_dense_mul(q, u1), -1))
        v0, v1 = v1, _dense_add(v0, _dense_scale(_dense_mul(q, v1), -1))
    lead = r0[-1]
    r0 = _dense_scale(r0, 1 / lead)
    u0 = _dense_scale(u0, 1 / lead)
    v0 = _dense_scale(v0, 1 / lead)

    g = _laurent_from_dense(QQ, r0)
    # g = u0*a0 + v0*b0 = (u0*T^sa)*a + (v0*T^sb)*b
    u = _laurent_from_dense(QQ, u0, shift=sa)
    v = _laurent_from_dense(QQ, v0, shift=sb)
    return g, u, v


def integer_clearing(u: LaurentPoly, v: LaurentPoly):
    """Scale a rational pair to an integral pair.

    Returns (u', v', n) where n is the least positive common denominator
    and u' = n*u, v' = n*v have integer coefficients.
    """
    n = 1
    for p in (u, v):
        for c in p.coeffs().values():
            n = lcm(n, Fraction(c).denominator)
    u2 = LaurentPoly(ZZ, {e: c * n for e, c in u.coeffs().items()})
    v2 = LaurentPoly(ZZ, {e: c * n for e, c in v.coeffs().items()})
    return u2, v2, n


def divides_in_qt(d: LaurentPoly, p: LaurentPoly) -> bool:
    """Does d divide p in Q[T], after unit normalization of both?"""
    if d.is_zero():
        return p.is_zero()
    if p.is_zero():
        return True
    d0, _ = d.map_ring(QQ).unit_normalize()
    p0, _ = p.map_ring(QQ).unit_normalize()
    _, r = _dense_divmod(_dense_from_laurent(p0), _dense_from_laurent(d0))
    return not r
