"""Coefficient fields: the rationals and prime fields F_p.

Elements of Q are :class:`fractions.Fraction`; elements of F_p are plain
``int`` values in ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

# The compiled kernel multiplies residues in int64.
MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"{self.p!r} is not a prime")
            if self.p >= MAX_PRIME:
                raise ValueError(f"prime {self.p} too large (limit 2**31)")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"q"`` or ``"fp:<prime>"``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(None)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field {text!r}") from None
            return cls(p)
        raise ValueError(f"bad field {text!r}; expected 'q' or 'fp:<prime>'")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "q" if self.p is None else f"fp:{self.p}"

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, x):
        """Coerce an integer or rational into this field."""
        if self.p is None:
            return Fraction(x)
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(
                f"denominator {x.denominator} not invertible mod {self.p}"
            )
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / Fraction(x)
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def neg(self, x):
        return -x if self.p is None else (-x) % self.p

    def add(self, x, y):
        return x + y if self.p is None else (x + y) % self.p

    def mul(self, x, y):
        return x * y if self.p is None else (x * y) % self.p

    def is_zero(self, x) -> bool:
        return x == 0 if self.p is None else x % self.p == 0

    def format(self, x) -> str:
        """Serialize an element as ``"num/den"`` (or an integer string)."""
        return str(Fraction(x)) if self.p is None else str(x % self.p)


QQ = FieldSpec(None)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
