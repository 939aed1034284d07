"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.  Prime-field scalars are
:class:`Fp` values tied to their modulus.  A field object converts, parses and
formats its own scalars::

    >>> QQ.parse("3/4") + QQ(1)
    Fraction(7, 4)
    >>> F = GF(5)
    >>> F.format(F(3) * F(4))
    '2 mod 5'
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering
from numbers import Integral, Rational

from sympy import isprime

__all__ = ["Field", "RationalField", "PrimeField", "Fp", "QQ", "GF", "field_from_tag"]


@total_ordering
class Fp:
    """An element of the prime field GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise TypeError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, Integral):
            return int(other)
        if isinstance(other, Rational):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Fp:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.value, k, self.p), self.p)

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return False
        if o is None:
            return NotImplemented
        return self.value == o % self.p

    def __lt__(self, other):
        # only for deterministic sorting; GF(p) is not an ordered field
        if not isinstance(other, Fp):
            return NotImplemented
        return (self.p, self.value) < (other.p, other.value)

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"


class Field:
    """Common interface of the exact coefficient fields."""

    tag: str
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def is_integral(self, x) -> bool | None:
        """Whether ``x`` lies in the integral model of the ring (``None`` if meaningless)."""
        return None

    def __repr__(self):
        return f"<{type(self).__name__} {self.tag}>"


class RationalField(Field):
    tag = "Q"
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fp):
            raise TypeError("cannot coerce a prime-field element into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if "mod" in text or not text:
            raise ValueError(f"not a rational number: {text!r}")
        return Fraction(text)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def is_integral(self, x) -> bool:
        return Fraction(x).denominator == 1

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    characteristic: int

    def __init__(self, p: int):
        if not isinstance(p, Integral) or p < 2 or not isprime(p):
            raise ValueError(f"modulus {p!r} is not prime")
        self.p = int(p)
        self.characteristic = self.p
        self.tag = f"Fp:{self.p}"

    def __call__(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise TypeError(f"cannot coerce GF({x.p}) element into GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Integral):
            return Fp(int(x), self.p)
        if isinstance(x, Rational):
            den = int(x.denominator) % self.p
            if den == 0:
                raise ZeroDivisionError(f"{x} has denominator divisible by {self.p}")
            return Fp(int(x.numerator) * pow(den, -1, self.p), self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse(self, text: str) -> Fp:
        text = text.strip()
        if "mod" in text:
            value, _, modulus = text.partition("mod")
            if int(modulus) != self.p:
                raise ValueError(f"scalar {text!r} does not live in GF({self.p})")
            return Fp(int(value), self.p)
        # plain integers and fractions are accepted and reduced
        return self(Fraction(text))

    def format(self, x) -> str:
        return str(self(x))

    def contains(self, x) -> bool:
        return isinstance(x, Fp) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    tag = tag.strip()
    if tag in ("Q", "QQ"):
        return QQ
    if tag.startswith("Fp:"):
        try:
            p = int(tag[3:])
        except ValueError:
            raise ValueError(f"bad field tag {tag!r}") from None
        return GF(p)
    raise ValueError(f"bad field tag {tag!r}")
