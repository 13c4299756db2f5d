"""Exact scalar fields: the rationals and prime fields.

Rationals are ``gmpy2.mpq`` values. Elements of a prime field are plain
Python ints kept in ``range(p)``; intermediate sums may leave that range
and are brought back by :meth:`FieldSpec.reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

import gmpy2
from gmpy2 import mpq

_MPQ = type(mpq(0))

RATIONALS = "rationals"
PRIME = "prime"


@dataclass(frozen=True)
class FieldSpec:
    kind: str = RATIONALS
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME:
            if self.p is None or self.p < 2 or not gmpy2.is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(PRIME, int(p))

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    @property
    def zero(self):
        return 0 if self.is_prime else mpq(0)

    @property
    def one(self):
        return 1 if self.is_prime else mpq(1)

    def __str__(self):
        return f"GF({self.p})" if self.is_prime else "QQ"

    def coerce(self, value):
        """Convert an int, rational, or string such as ``"3/2"`` into the field."""
        if isinstance(value, str):
            text = value.strip()
            try:
                value = mpq(text)
            except ValueError:
                raise ValueError(f"not an exact scalar: {value!r}") from None
        elif isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        elif isinstance(value, float):
            raise TypeError(f"floats are not exact scalars: {value!r}")
        if type(value) is _MPQ:
            q = value
        elif isinstance(value, Integral):
            q = mpq(int(value))
        elif isinstance(value, Rational):
            q = mpq(int(value.numerator), int(value.denominator))
        else:
            raise TypeError(f"cannot coerce {value!r} to an exact scalar")
        if not self.is_prime:
            return q
        num, den = int(q.numerator), int(q.denominator)
        if den % self.p == 0:
            raise ValueError(f"{value} has no image in GF({self.p})")
        return num * pow(den, -1, self.p) % self.p

    # hot paths: p is set exactly for prime fields
    def reduce(self, x):
        return x if self.p is None else x % self.p

    def is_zero(self, x) -> bool:
        return x == 0 if self.p is None else x % self.p == 0

    def eq(self, x, y) -> bool:
        return self.is_zero(x - y)

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(int(x), -1, self.p)
        return 1 / mpq(x)

    def div(self, x, y):
        return self.reduce(x * self.inv(y))

    def fmt(self, x) -> str:
        return str(self.reduce(x))

    def to_fraction(self, x) -> Fraction:
        if self.is_prime:
            return Fraction(int(x) % self.p)
        return Fraction(int(x.numerator), int(x.denominator))


QQ = FieldSpec.rationals()
