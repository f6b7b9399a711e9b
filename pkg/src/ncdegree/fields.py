"""Exact coefficient fields: the rationals and prime fields GF(p).

A :class:`Field` does arithmetic on *raw* values (``Fraction`` for QQ, a
reduced ``int`` for GF(p)); polynomial and series containers store raw values
for speed.  :class:`FieldScalar` is the public, tagged scalar type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(ValueError):
    """Two operands live in different fields."""


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class Field:
    """QQ when ``characteristic == 0``, otherwise GF(characteristic)."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")
        if p >= 2**63:
            raise ValueError("GF(p) is limited to machine-word primes")

    # -- raw arithmetic -------------------------------------------------
    def normalize(self, value):
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def add(self, a, b):
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a, b):
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a, b):
        if self.characteristic:
            return a * b % self.characteristic
        return a * b

    def neg(self, a):
        if self.characteristic:
            return -a % self.characteristic
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inversion of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return 1 / a

    @property
    def zero_raw(self):
        return self.normalize(0)

    @property
    def one_raw(self):
        return self.normalize(1)

    # -- scalars ----------------------------------------------------------
    def __call__(self, value) -> FieldScalar:
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not in {self}")
            return value
        return FieldScalar(self, self.normalize(value))

    @property
    def zero(self) -> FieldScalar:
        return FieldScalar(self, self.zero_raw)

    @property
    def one(self) -> FieldScalar:
        return FieldScalar(self, self.one_raw)

    # -- text -------------------------------------------------------------
    def format(self, raw) -> str:
        if self.characteristic:
            return str(raw)
        if raw.denominator == 1:
            return str(raw.numerator)
        return f"{raw.numerator}/{raw.denominator}"

    def parse(self, text: str):
        """Parse ``a`` or ``a/b``; a denominator divisible by p is an error."""
        text = text.strip()
        num, _, den = text.partition("/")
        value = Fraction(int(num), int(den) if den else 1)
        return self.normalize(value)

    @property
    def tag(self) -> str:
        return "q" if self.characteristic == 0 else f"gf:{self.characteristic}"

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def field_from_tag(tag: str) -> Field:
    """``q`` (or ``Q``/``QQ``) for the rationals, ``gf:<p>`` for GF(p)."""
    t = tag.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("gf:"):
        return Field(int(t[3:]))
    raise ValueError(f"unknown field tag {tag!r}; expected 'q' or 'gf:<p>'")


@dataclass(frozen=True)
class FieldScalar:
    field: Field
    value: object

    def _other(self, other) -> FieldScalar:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.field, self.field.sub(self.value, o.value))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def inverse(self) -> FieldScalar:
        return FieldScalar(self.field, self.field.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.normalize(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldScalar({self.field}, {self})"


def add(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a + b


def mul(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a * b


def neg(a: FieldScalar) -> FieldScalar:
    return -a


def inv(a: FieldScalar) -> FieldScalar:
    return a.inverse()


def characteristic(field: Field) -> int:
    return field.characteristic
