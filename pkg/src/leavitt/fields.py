"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational scalars are fractions.Fraction values.  Prime-field scalars are
FpElement instances carrying their modulus; arithmetic between different
moduli is rejected.  Zero scalars are falsy in both representations, and
the engine relies on that to drop them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FpElement:
    """A residue mod a prime.  Supports +, -, *, unary -, and truthiness."""

    value: int
    p: int

    def _lift(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other % self.p, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement((self.value + other.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement((self.value * other.value) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value % self.p, self.p)

    def inverse(self) -> "FpElement":
        if not self.value:
            raise ZeroDivisionError("inverse of zero")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


class Rationals:
    """The field of rational numbers with exact Fraction arithmetic."""

    name = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, value) -> Fraction:
        return Fraction(value)

    def invert(self, k: Fraction) -> Fraction:
        return Fraction(1) / k

    def format(self, k: Fraction) -> str:
        return str(k)

    def __repr__(self) -> str:
        return "Rationals()"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Rationals")


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def of(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {value.p}")
            return value
        if isinstance(value, Fraction):
            num = FpElement(value.numerator % self.p, self.p)
            den = FpElement(value.denominator % self.p, self.p)
            return num * den.inverse()
        return FpElement(int(value) % self.p, self.p)

    def invert(self, k: FpElement) -> FpElement:
        return self.of(k).inverse()

    def format(self, k: FpElement) -> str:
        return str(k.value)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))


QQ = Rationals()


def parse_field_spec(text: str):
    """Parse the command-line field spec: "Q" or "Fp:<prime>"."""
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field spec {text!r}") from None
        return PrimeField(p)
    raise ValueError(f"bad field spec {text!r}; expected Q or Fp:<prime>")
