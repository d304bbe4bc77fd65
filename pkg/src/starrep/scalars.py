"""Exact arithmetic in the field Q(i) of Gaussian rationals.

A value is stored as a normalized integer triple (a, b, d) meaning
(a + b*i)/d with d > 0 and gcd(a, b, d) = 1.  Equality is therefore
structural, zero has the unique form (0, 0, 1), and the hot loops of the
linear algebra avoid per-component Fraction overhead.  The ``re`` and
``im`` properties expose the components as reduced :class:`Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _norm(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = lcm(re.denominator, im.denominator)
        # lcm of reduced denominators makes the triple already normalized
        object.__setattr__(self, "a", re.numerator * (d // re.denominator))
        object.__setattr__(self, "b", im.numerator * (d // im.denominator))
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- components ----------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    @property
    def is_real(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._raw(
            *_norm(
                self.a * other.d + other.a * self.d,
                self.b * other.d + other.b * self.d,
                self.d * other.d,
            )
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._raw(
            *_norm(
                self.a * other.d - other.a * self.d,
                self.b * other.d - other.b * self.d,
                self.d * other.d,
            )
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return GaussianRational._raw(*_norm(self.a * other.a, 0, self.d * other.d))
        return GaussianRational._raw(
            *_norm(
                self.a * other.a - self.b * other.b,
                self.a * other.b + self.b * other.a,
                self.d * other.d,
            )
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational._raw(*_norm(self.d * self.a, -self.d * self.b, n))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.a, -self.b, self.d)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    # -- text form -------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(Fraction(self.a, self.d))
        im = Fraction(self.b, self.d)
        if im == 1:
            istr = "i"
        elif im == -1:
            istr = "-i"
        else:
            istr = f"{im}*i"
        if self.a == 0:
            return istr
        re = Fraction(self.a, self.d)
        if im > 0:
            return f"{re}+{istr}"
        return f"{re}{istr}"

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse the canonical form ``a/b``, ``c/d*i`` or ``a/b+c/d*i``."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational literal")
        terms = []
        start = 0
        for k in range(1, len(s)):
            if s[k] in "+-" and s[k - 1] not in "+-*/^":
                terms.append(s[start:k])
                start = k
        terms.append(s[start:])
        re_part = Fraction(0)
        im_part = Fraction(0)
        for term in terms:
            if term.endswith("i"):
                body = term[:-1]
                if body in ("", "+"):
                    im_part += 1
                elif body == "-":
                    im_part -= 1
                else:
                    if body.endswith("*"):
                        body = body[:-1]
                    im_part += Fraction(body)
            else:
                re_part += Fraction(term)
        return cls(re_part, im_part)


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, int):
        return GaussianRational._raw(value, 0, 1)
    if isinstance(value, Fraction):
        return GaussianRational._raw(value.numerator, 0, value.denominator)
    return None


def as_gaussian(value) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational; reject anything else."""
    g = _coerce(value)
    if g is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return g


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
MINUS_ONE = GaussianRational._raw(-1, 0, 1)
I = GaussianRational._raw(0, 1, 1)
HALF = GaussianRational._raw(1, 0, 2)
