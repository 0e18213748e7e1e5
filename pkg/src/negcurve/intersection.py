"""Numerical classes on X = Bl_{t0} X_Delta.

N_1(X) has basis {pi^*H, E} with H^2 = 2 area(Delta), E^2 = -1 and
pi^*H . E = 0. A class ``BlowupClass(h, e)`` stands for ``h pi^*H - e E``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .families import FamilyParams, delta
from .geometry import QPolygon, area


@dataclass(frozen=True)
class AmbientModel:
    triangle: QPolygon
    h_squared: Fraction

    @classmethod
    def of(cls, triangle: QPolygon) -> "AmbientModel":
        hh = 2 * area(triangle)
        if hh <= 0:
            raise ValueError("ambient triangle must have positive area")
        return cls(triangle, hh)

    @classmethod
    def for_params(cls, params: FamilyParams) -> "AmbientModel":
        return cls.of(delta(params))


@dataclass(frozen=True)
class BlowupClass:
    h: Fraction
    e: Fraction
    ambient: AmbientModel | None = None

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        object.__setattr__(self, "e", Fraction(self.e))


def pair(a: BlowupClass, b: BlowupClass, amb: AmbientModel) -> Fraction:
    for c in (a, b):
        if c.ambient is not None and c.ambient != amb:
            raise ValueError("classes belong to a different ambient surface")
    return a.h * b.h * amb.h_squared - a.e * b.e


def lambda_factor(params: FamilyParams) -> Fraction:
    """Homothety ratio between Delta' and Delta (ratio of right-edge widths)."""
    m, s = params.m, params.alpha + params.beta
    den = (m - 1 + s) if params.family == 1 else (Fraction(2 * m - 1, 4) + s)
    if den == 0:
        raise ZeroDivisionError("Delta is degenerate (family 1, m=1, alpha=beta=0)")
    return Fraction(m) / den


def class_of_C(params: FamilyParams) -> BlowupClass:
    return BlowupClass(1, params.m, AmbientModel.for_params(params))


def class_of_D0(params: FamilyParams) -> BlowupClass:
    return BlowupClass(lambda_factor(params), params.d0_mult, AmbientModel.for_params(params))


def c_self_intersection(params: FamilyParams) -> Fraction:
    """``C^2 = 2 area(Delta) - m^2``."""
    return 2 * area(delta(params)) - params.m**2


class Negativity(enum.Enum):
    NEGATIVE = "Negative"
    ZERO = "Zero"
    POSITIVE = "Positive"


def negativity_status(params: FamilyParams) -> Negativity:
    c2 = c_self_intersection(params)
    if c2 < 0:
        return Negativity.NEGATIVE
    if c2 == 0:
        return Negativity.ZERO
    return Negativity.POSITIVE


def negativity_threshold(family: int, m: int) -> Fraction:
    """The value of ``alpha + beta`` at which ``C^2 = 0``."""
    return Fraction(1, m + 1) if family == 1 else Fraction(1, 4 * (2 * m + 1))
