"""Exact scalar fields: the rationals and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from ..errors import FieldMismatch, InvalidCharacteristic

MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """``Field(0)`` is Q; ``Field(p)`` is F_p for a prime ``p < 2**31``.

    Raw values are ``Fraction`` (characteristic 0) or ``int`` residues in
    ``[0, p)``.  Hot code works on raw values through this object; the
    ``FieldElement`` wrapper is for callers who want operator syntax.
    """

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not (_is_prime(self.char) and self.char < MAX_PRIME):
            raise InvalidCharacteristic(f"characteristic must be 0 or a prime < 2^31, got {self.char}")

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    def __call__(self, x) -> "FieldElement":
        return FieldElement(self.convert(x), self.char)

    def convert(self, x):
        if isinstance(x, FieldElement):
            if x.char != self.char:
                raise FieldMismatch(f"element of characteristic {x.char} used in F_{self.char}")
            return x.value
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.char)) % self.char
        return int(x) % self.char

    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.char == 0 else pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __str__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@total_ordering
@dataclass(frozen=True)
class FieldElement:
    """An exact scalar tagged with its characteristic."""

    value: object
    char: int = 0

    def __post_init__(self):
        if self.char == 0:
            if not isinstance(self.value, Fraction):
                object.__setattr__(self, "value", Fraction(self.value))
        else:
            object.__setattr__(self, "value", int(self.value) % self.char)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.char != self.char:
                raise FieldMismatch(f"cannot combine characteristics {self.char} and {other.char}")
            return other.value
        return Field(self.char).convert(other)

    def _wrap(self, v):
        return FieldElement(v, self.char)

    def __add__(self, other):
        return self._wrap(Field(self.char).add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(Field(self.char).sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(Field(self.char).sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(Field(self.char).mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(Field(self.char).div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(Field(self.char).div(self._other(other), self.value))

    def __neg__(self):
        return self._wrap(Field(self.char).neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.char == other.char and self.value == other.value
        try:
            return self.value == Field(self.char).convert(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.value < self._other(other)

    def __hash__(self):
        return hash((self.value, self.char))

    def __repr__(self):
        return f"FieldElement({self.value}, char={self.char})"
