"""Sparse Laurent polynomials in x, y over Q or F_p.

A polynomial is a map from exponent pairs ``(i, j)`` (the monomial
``x**i * y**j``) to nonzero coefficients. The local questions all concern the
point ``t0 = (1, 1)`` of the torus.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .geometry import (
    LatticePoint,
    QPolygon,
    edge_is_lattice_primitive,
    lattice_order,
    minkowski_difference,
)
from .linalg import QQ, ExactMatrix, FieldSpec, GF


class LaurentPoly:
    __slots__ = ("field", "terms")

    def __init__(self, terms: Mapping[LatticePoint, object] | Iterable = (), field: FieldSpec = QQ):
        self.field = field
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[LatticePoint, object] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            c = field.add(clean.get(key, field.zero), field(c))
            clean[key] = c
        self.terms = {k: v for k, v in clean.items() if not field.is_zero(v)}

    # -- constructors --------------------------------------------------------

    @classmethod
    def monomial(cls, i: int, j: int, c=1, field: FieldSpec = QQ) -> "LaurentPoly":
        return cls({(i, j): c}, field)

    @classmethod
    def constant(cls, c, field: FieldSpec = QQ) -> "LaurentPoly":
        return cls({(0, 0): c}, field)

    @classmethod
    def from_vector(cls, points, vec, field: FieldSpec) -> "LaurentPoly":
        return cls(zip(points, vec), field)

    @classmethod
    def x(cls, field: FieldSpec = QQ):
        return cls.monomial(1, 0, 1, field)

    @classmethod
    def y(cls, field: FieldSpec = QQ):
        return cls.monomial(0, 1, 1, field)

    # -- basic protocol -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self}, field={self.field})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in self.support():
            c = self.terms[(i, j)]
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts)

    def support(self) -> list[LatticePoint]:
        return sorted(self.terms, key=lattice_order)

    def coefficient(self, pt: LatticePoint):
        return self.terms.get(tuple(pt), self.field.zero)

    def _check(self, other: "LaurentPoly"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.constant(other, self.field)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = f.add(out.get(k, f.zero), v)
        return LaurentPoly(out, f)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return LaurentPoly({k: f.neg(v) for k, v in self.terms.items()}, f)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        out: dict[LatticePoint, object] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = f.add(out.get(k, f.zero), f.mul(a, b))
        return LaurentPoly(out, f)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (i, j), c = next(iter(self.terms.items()))
            return LaurentPoly({(-i, -j): self.field.inv(c)}, self.field) ** (-n)
        result = LaurentPoly.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "LaurentPoly":
        f = self.field
        c = f(c)
        return LaurentPoly({k: f.mul(v, c) for k, v in self.terms.items()}, f)

    def shift(self, a: int, b: int) -> "LaurentPoly":
        """Multiply by the monomial ``x**a * y**b``."""
        return LaurentPoly({(i + a, j + b): v for (i, j), v in self.terms.items()}, self.field)

    def swap_xy(self) -> "LaurentPoly":
        return LaurentPoly({(j, i): v for (i, j), v in self.terms.items()}, self.field)

    def frobenius(self, q: int) -> "LaurentPoly":
        """Substitute ``x -> x**q``, ``y -> y**q``; equals ``self**q`` over F_p for q a power of p."""
        return LaurentPoly({(q * i, q * j): v for (i, j), v in self.terms.items()}, self.field)

    def is_proportional(self, other: "LaurentPoly") -> bool:
        """True iff ``other = c * self`` for a nonzero scalar c."""
        self._check(other)
        if set(self.terms) != set(other.terms):
            return False
        if not self.terms:
            return True
        f = self.field
        k0 = next(iter(self.terms))
        ratio = f.mul(other.terms[k0], f.inv(self.terms[k0]))
        return all(other.terms[k] == f.mul(v, ratio) for k, v in self.terms.items())

    def to_json(self) -> list:
        f = self.field
        return [[i, j, f.format(self.terms[(i, j)])] for (i, j) in self.support()]

    @classmethod
    def from_json(cls, data, field: FieldSpec = QQ) -> "LaurentPoly":
        from .geometry import parse_rational

        return cls(((i, j), parse_rational(c)) for i, j, c in data)._as(field)

    def _as(self, field: FieldSpec) -> "LaurentPoly":
        return LaurentPoly(self.terms, field) if field != self.field else self


# -- local conditions at t0 ---------------------------------------------------


def taylor_targets(mult: int) -> list[tuple[int, int]]:
    """Exponents ``(r, s)`` with ``r + s < mult``, by degree, then r descending."""
    return [(d - s, s) for d in range(mult) for s in range(d + 1)]


def _nonneg_shift(points) -> tuple[int, int]:
    a = max(0, -min((p[0] for p in points), default=0))
    b = max(0, -min((p[1] for p in points), default=0))
    return a, b


def taylor_matrix(points, mult: int, field: FieldSpec) -> ExactMatrix:
    """Rows: vanishing of the Taylor coefficient of ``u^r v^s`` at t0, ``r+s < mult``.

    Columns follow ``points``. The support is first shifted by a monomial so
    that all exponents are nonnegative; the coefficient of ``u^r v^s`` in
    ``(u+1)^i (v+1)^j`` is then ``C(i, r) C(j, s)``.
    """
    points = list(points)
    a, b = _nonneg_shift(points)
    rows = []
    for r, s in taylor_targets(mult):
        rows.append([math.comb(i + a, r) * math.comb(j + b, s) for i, j in points])
    return ExactMatrix(field, rows, len(points))


def taylor_coefficient(f: LaurentPoly, r: int, s: int, shift: tuple[int, int] | None = None):
    a, b = shift if shift is not None else _nonneg_shift(f.terms)
    F = f.field
    total = F.zero
    for (i, j), c in f.terms.items():
        w = math.comb(i + a, r) * math.comb(j + b, s)
        if w:
            total = F.add(total, F.mul(c, F(w)))
    return total


def multiplicity_at_unit(f: LaurentPoly, shift: tuple[int, int] | None = None) -> int:
    """Order of vanishing of ``f`` at ``t0 = (1, 1)``.

    ``shift`` overrides the clearing monomial; any shift making all exponents
    nonnegative gives the same answer.
    """
    if not f:
        raise ValueError("zero polynomial has no multiplicity")
    if shift is None:
        shift = _nonneg_shift(f.terms)
    a, b = shift
    if any(i + a < 0 or j + b < 0 for i, j in f.terms):
        raise ValueError("shift does not clear negative exponents")
    top = max(i + a + j + b for i, j in f.terms)
    for d in range(top + 1):
        for s in range(d + 1):
            if not f.field.is_zero(taylor_coefficient(f, d - s, s, shift)):
                return d
    raise AssertionError("nonzero polynomial with all Taylor coefficients zero")


# -- Newton polygons and divisibility ------------------------------------------


def newton_polygon(f: LaurentPoly) -> QPolygon:
    if not f:
        raise ValueError("zero polynomial has no Newton polygon")
    return QPolygon.hull(f.terms)


def _leading(f: LaurentPoly):
    k = max(f.terms, key=lattice_order)
    return k, f.terms[k]


def divides_exactly(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """Return ``q`` with ``g = f * q`` in the Laurent ring, or ``None``.

    Division peels the leading corner in the ``(j, i)`` order. Every exponent
    of a genuine quotient lies in ``Newton(g) - Newton(f)`` (Minkowski
    difference), which bounds the search.
    """
    f._check(g)
    if not f:
        raise ZeroDivisionError("division by the zero polynomial")
    F = g.field
    if not g:
        return LaurentPoly({}, F)
    room = minkowski_difference(newton_polygon(g), newton_polygon(f))
    if room is None:
        return None
    (fi, fj), fc = _leading(f)
    finv = F.inv(fc)
    q: dict[LatticePoint, object] = {}
    r = g
    while r:
        (ri, rj), rc = _leading(r)
        t = (ri - fi, rj - fj)
        if not room.contains(t):
            return None
        c = F.mul(rc, finv)
        q[t] = c
        r = r - f.shift(*t).scale(c)
    return LaurentPoly(q, F)


def reduce_mod_p(f: LaurentPoly, p: int) -> LaurentPoly:
    if not f.field.is_rational:
        raise ValueError("reduction needs a rational polynomial")
    Fp = GF(p)
    try:
        return LaurentPoly(f.terms, Fp)
    except ZeroDivisionError:
        raise ValueError(f"a coefficient denominator is divisible by {p}") from None


def normalize_integer(f: LaurentPoly) -> LaurentPoly:
    """Integer multiple with coprime coefficients, positive at the ``(j, i)``-first exponent."""
    if not f.field.is_rational:
        raise ValueError("integer normalization needs a rational polynomial")
    if not f:
        raise ValueError("cannot normalize the zero polynomial")
    coeffs = [Fraction(c) for c in f.terms.values()]
    den = math.lcm(*(c.denominator for c in coeffs))
    g = math.gcd(*(int(c * den) for c in coeffs))
    scale = Fraction(den, g)
    if f.terms[f.support()[0]] < 0:
        scale = -scale
    return f.scale(scale)


def normalize_at(f: LaurentPoly, pt: LatticePoint) -> LaurentPoly:
    """Scale so that the coefficient at ``pt`` becomes 1."""
    c = f.coefficient(pt)
    if f.field.is_zero(c):
        raise ValueError(f"coefficient at {pt} vanishes")
    return f.scale(f.field.inv(c))


def irreducibility_certificate(f: LaurentPoly, delta: QPolygon):
    """An edge of ``delta`` proving ``f`` irreducible, or ``None``.

    The edge must have lattice endpoints, no other lattice points, and nonzero
    coefficients of ``f`` at both ends. ``None`` is inconclusive. A segment
    ``delta`` counts as its own edge; polygons with more than three vertices
    never yield a certificate.
    """
    if not all(delta.contains(pt) for pt in f.terms):
        raise ValueError("support of f is not inside delta")
    if len(delta.vertices) not in (2, 3):
        return None
    for a, b in delta.edges():
        if a.x.denominator != 1 or a.y.denominator != 1:
            continue
        if b.x.denominator != 1 or b.y.denominator != 1:
            continue
        pa, pb = (int(a.x), int(a.y)), (int(b.x), int(b.y))
        if not edge_is_lattice_primitive(pa, pb):
            continue
        if f.field.is_zero(f.coefficient(pa)) or f.field.is_zero(f.coefficient(pb)):
            continue
        return (pa, pb)
    return None
