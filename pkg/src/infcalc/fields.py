"""Exact scalar arithmetic.

Default field is the rationals, represented by fractions.Fraction (already
canonical: reduced, positive denominator).  Prime fields are available for
experiments where characteristic matters; p = 2 is allowed, in which case
every sign degenerates to +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class Rationals:
    """The field of rational numbers."""

    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, text: str) -> Fraction:
        return Fraction(str(text).strip())

    def to_str(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = Rationals()


@dataclass(frozen=True)
class FpElement:
    """An element of F_p, stored as the canonical residue in [0, p)."""

    residue: int
    p: int

    def _check(self, other):
        if not isinstance(other, FpElement) or other.p != self.p:
            raise TypeError(f"mixed field arithmetic: {self!r} vs {other!r}")

    def __add__(self, other):
        self._check(other)
        return FpElement((self.residue + other.residue) % self.p, self.p)

    def __sub__(self, other):
        self._check(other)
        return FpElement((self.residue - other.residue) % self.p, self.p)

    def __neg__(self):
        return FpElement(-self.residue % self.p, self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpElement((self.residue * other) % self.p, self.p)
        self._check(other)
        return FpElement((self.residue * other.residue) % self.p, self.p)

    def __rmul__(self, other):
        if isinstance(other, int):
            return FpElement((self.residue * other) % self.p, self.p)
        return NotImplemented

    def __truediv__(self, other):
        self._check(other)
        if other.residue == 0:
            raise ZeroDivisionError("division by zero in prime field")
        inv = pow(other.residue, self.p - 2, self.p)
        return FpElement((self.residue * inv) % self.p, self.p)

    def __bool__(self):
        return self.residue != 0

    def __str__(self):
        return str(self.residue)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The finite field F_p for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    def from_int(self, n: int) -> FpElement:
        return FpElement(n % self.p, self.p)

    def parse(self, text: str) -> FpElement:
        text = str(text).strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.from_int(int(num)) / self.from_int(int(den))
        return self.from_int(int(text))

    def to_str(self, x) -> str:
        return str(x.residue)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def field_from_name(name: str):
    """Build a field from its configuration string: "q" or "fp:<p>"."""
    name = name.strip().lower()
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r} (expected 'q' or 'fp:<p>')")


def sgn(exponent: int) -> int:
    """(-1)**exponent as a plain int, reduced mod 2."""
    return -1 if exponent & 1 else 1
