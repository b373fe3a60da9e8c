"""Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

Elements are plain Python values (``fractions.Fraction`` for the rationals,
``int`` residues in ``[0, p)`` for a prime field), so they hash, compare and
pickle for free; the :class:`Field` object supplies the operations.  Both
representations are canonical: ``Fraction`` stores lowest terms with positive
denominator, residues are reduced mod ``p``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError

_MAX_CHAR = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A field descriptor: the rationals or GF(p), with exact operations."""

    __slots__ = ("kind", "characteristic")

    def __init__(self, kind: str, characteristic: int):
        if kind not in ("Rationals", "PrimeField"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "Rationals":
            if characteristic != 0:
                raise ValueError("rationals have characteristic 0")
        else:
            if not (characteristic < _MAX_CHAR and _is_prime(characteristic)):
                raise ValueError(f"characteristic must be a prime < 2^31, got {characteristic}")
        self.kind = kind
        self.characteristic = characteristic

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    def __repr__(self):
        return "QQ" if self.kind == "Rationals" else f"GF({self.characteristic})"

    # -- element constructors ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def of(self, n):
        """Coerce an int, Fraction or ratio string into a field element."""
        if self.characteristic == 0:
            return Fraction(n)
        if isinstance(n, Fraction):
            if n.denominator % self.characteristic == 0:
                raise DivisionByZero(f"denominator divisible by {self.characteristic}")
            return (n.numerator * pow(n.denominator, -1, self.characteristic)) % self.characteristic
        return int(n) % self.characteristic

    def parse(self, text: str):
        """Parse 'a' or 'a/b' into an element."""
        try:
            return self.of(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {text!r}: {exc}") from exc

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        s = a + b
        return s % self.characteristic if self.characteristic else s

    def sub(self, a, b):
        s = a - b
        return s % self.characteristic if self.characteristic else s

    def mul(self, a, b):
        s = a * b
        return s % self.characteristic if self.characteristic else s

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        if self.characteristic:
            return (a * pow(b, -1, self.characteristic)) % self.characteristic
        return a / b

    def eq(self, a, b):
        return a == b

    def to_str(self, a) -> str:
        return str(a)

    def check_same(self, other: "Field"):
        if self != other:
            raise FieldMismatch(f"{self} vs {other}")


def QQ() -> Field:
    return Field("Rationals", 0)


def GF(p: int) -> Field:
    return Field("PrimeField", p)
