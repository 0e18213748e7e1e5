"""Membership tests for HC_K and the MDS classification of the two families.

``l`` lies in HC_K when some section of ``l D0`` misses the negative curve C.
Sections of ``l D0`` are Laurent polynomials supported in ``l Delta'`` that
vanish to order ``l (i m + 1)`` at ``t0``; such a section misses C exactly
when it is not divisible by ``xi_m``.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .families import (
    FamilyParams,
    delta,
    delta_double_prime,
    delta_prime,
    xi_solve,
)
from .geometry import LatticePoint, QPolygon, lattice_points, minkowski_difference
from .intersection import (
    Negativity,
    c_self_intersection,
    negativity_status,
    negativity_threshold,
)
from .laurent import (
    LaurentPoly,
    divides_exactly,
    multiplicity_at_unit,
    newton_polygon,
    taylor_matrix,
)
from .linalg import QQ, ExactMatrix, FieldSpec, kernel_basis, kernel_coordinate_nonzero, nullity

DEFAULT_PRIMES = (1009, 2003, 4001)


def default_primes() -> tuple[int, ...]:
    """Prime sample for cross-characteristic checks; ``NEGCURVE_PRIMES`` overrides it."""
    env = os.environ.get("NEGCURVE_PRIMES", "").strip()
    if not env:
        return DEFAULT_PRIMES
    try:
        primes = tuple(int(tok) for tok in env.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"NEGCURVE_PRIMES is not a list of integers: {env!r}") from None
    for p in primes:
        FieldSpec.prime(p)
    return primes


@functools.lru_cache(maxsize=None)
def _xi(family: int, m: int, field: FieldSpec) -> LaurentPoly:
    return xi_solve(family, m, field)


def _require_negative(params: FamilyParams):
    status = negativity_status(params)
    if status is not Negativity.NEGATIVE:
        raise ValueError(f"C^2 is {status.value.lower()} for {params}; HC tests need C^2 < 0")


# -- section spaces ------------------------------------------------------------


@dataclass
class SectionSpace:
    polygon: QPolygon | None
    mult_required: int
    field: FieldSpec
    matrix: ExactMatrix
    dim: int
    point_index: dict[LatticePoint, int]

    @property
    def points(self) -> list[LatticePoint]:
        return list(self.point_index)

    def basis(self) -> list[LaurentPoly]:
        return [LaurentPoly.from_vector(self.points, v, self.field) for v in kernel_basis(self.matrix)]

    def has_section_at(self, pt: LatticePoint) -> bool:
        """True iff some section has a nonzero coefficient at ``pt``."""
        if pt not in self.point_index:
            return False
        return kernel_coordinate_nonzero(self.matrix, self.point_index[pt])


def section_space(polygon: QPolygon | None, mult: int, field: FieldSpec = QQ) -> SectionSpace:
    """Polynomials supported in ``polygon`` vanishing to order ``mult`` at t0.

    ``None`` stands for the empty polygon (an empty Minkowski difference).
    """
    pts = lattice_points(polygon) if polygon is not None else []
    mult = max(mult, 0)
    M = taylor_matrix(pts, mult, field)
    return SectionSpace(polygon, mult, field, M, nullity(M), {p: k for k, p in enumerate(pts)})


# -- HC verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class HcVerdict:
    l: int
    member: bool
    method: str
    field: str
    dims: tuple[int, int] | None = None
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "member": self.member,
            "method": self.method,
            "field": self.field,
            "dims": list(self.dims) if self.dims is not None else None,
            "note": self.note,
        }


def scaled_delta_prime(params: FamilyParams, l: int, offset=(0, 0)) -> QPolygon:
    """``l Delta'`` scaled about the origin, then moved by an integer ``offset``."""
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"l must be a positive integer, got {l!r}")
    return delta_prime(params).scale(l).translate(offset)


def top_vertex(params: FamilyParams, l: int, offset=(0, 0)) -> LatticePoint:
    return (offset[0], l * params.d0_mult + offset[1])


def vertex_test_applicable(params: FamilyParams, field: FieldSpec = QQ) -> bool:
    """False when the top vertex of Delta lies in Newton(xi_m), so C avoids its fixed point."""
    top = delta(params).vertices[-1]
    return not newton_polygon(_xi(params.family, params.m, field)).contains(top)


def hc_vertex_test(l: int, params: FamilyParams, field: FieldSpec = QQ, offset=(0, 0)) -> HcVerdict:
    """Sufficient test: some section of ``l D0`` is nonzero at the top vertex of ``l Delta'``."""
    _require_negative(params)
    P = scaled_delta_prime(params, l, offset)
    T = top_vertex(params, l, offset)
    assert P.vertices[-1] == T, "top vertex of l*Delta' is not the expected lattice point"
    if not vertex_test_applicable(params, field):
        return HcVerdict(l, False, "vertex", str(field), note="inapplicable: C misses the top fixed point")
    S = section_space(P, l * params.d0_mult, field)
    return HcVerdict(l, S.has_section_at(T), "vertex", str(field))


def hc_exact_test(l: int, params: FamilyParams, field: FieldSpec = QQ, offset=(0, 0)) -> HcVerdict:
    """``l`` is in HC iff the sections of ``l D0`` are not all multiples of ``xi_m``.

    Multiplication by ``xi_m`` embeds L (sections supported in
    ``l Delta' - Newton(xi_m)`` with the multiplicity lowered by m) into S,
    and its image is exactly the divisible part, so membership is
    ``dim S > dim L``.
    """
    _require_negative(params)
    xi = _xi(params.family, params.m, field)
    P = scaled_delta_prime(params, l, offset)
    mult = l * params.d0_mult
    S = section_space(P, mult, field)
    L = section_space(minkowski_difference(P, newton_polygon(xi)), mult - params.m, field)
    if L.dim > S.dim:
        raise AssertionError(f"dim L = {L.dim} exceeds dim S = {S.dim}")
    return HcVerdict(l, S.dim > L.dim, "exact", str(field), dims=(S.dim, L.dim))


# -- classification --------------------------------------------------------------

WITNESS_ALPHA0 = "(1-y)^(im+1)"
WITNESS_Y_XI = "y*xi_(m+1)"
WITNESS_MIRROR = "x^-1*y*(1-x)^(m+1)"
WITNESS_COMBINATION = "(1-y)^(2m+1) + c*x^(1-m)*y*xi_(m+1)*xi_m"


@dataclass(frozen=True)
class MdsVerdict:
    variant: str  # MDS, NotMDS, NoInfo or OutOfScope
    witness: str | None = None
    c_squared: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "verdict": self.variant,
            "witness": self.witness,
            "c_squared": str(self.c_squared) if self.c_squared is not None else None,
        }


def not_mds_predicate(params: FamilyParams) -> bool:
    """The NotMDS inequalities of the classification (ignoring the sign of C^2)."""
    a, b, m = params.alpha, params.beta, params.m
    if params.family == 1:
        t = Fraction(1, m + 2)
        return (a > 0 and b > t) or (b > 0 and a > t)
    return a > 0 and b > 0


def _witness_tag(params: FamilyParams) -> str:
    a, b = params.alpha, params.beta
    if a == 0:
        return WITNESS_ALPHA0
    if params.family == 1:
        return WITNESS_MIRROR if b == 0 else WITNESS_Y_XI
    return WITNESS_COMBINATION


def mds_classify(params: FamilyParams) -> MdsVerdict:
    if delta(params).is_degenerate:
        raise ValueError(f"Delta is degenerate for {params}")
    c2 = c_self_intersection(params)
    status = negativity_status(params)
    if status is Negativity.POSITIVE:
        return MdsVerdict("OutOfScope", c_squared=c2)
    if status is Negativity.ZERO:
        return MdsVerdict("NoInfo", c_squared=c2)
    if not_mds_predicate(params):
        return MdsVerdict("NotMDS", c_squared=c2)
    return MdsVerdict("MDS", _witness_tag(params), c2)


def mds_witness(params: FamilyParams, field: FieldSpec = QQ) -> tuple[str, LaurentPoly]:
    """The explicit section of ``D0`` behind an MDS verdict."""
    verdict = mds_classify(params)
    if verdict.variant != "MDS":
        raise ValueError(f"{params} is classified {verdict.variant}, not MDS")
    m, i = params.m, params.family
    x, y = LaurentPoly.x(field), LaurentPoly.y(field)
    one = LaurentPoly.constant(1, field)
    tag = verdict.witness
    if tag == WITNESS_ALPHA0:
        return tag, (one - y) ** (i * m + 1)
    if tag == WITNESS_MIRROR:
        return tag, LaurentPoly.monomial(-1, 1, 1, field) * (one - x) ** (m + 1)
    if tag == WITNESS_Y_XI:
        return tag, y * _xi(1, m + 1, field)
    a = (one - y) ** (2 * m + 1)
    b = LaurentPoly.monomial(1 - m, 1, 1, field) * _xi(2, m + 1, field) * _xi(2, m, field)
    c0 = b.coefficient((0, 0))
    if field.is_zero(c0):
        raise AssertionError("the second witness summand has no constant term")
    return tag, a - b.scale(field.inv(c0))


@dataclass
class WitnessReport:
    params: FamilyParams
    tag: str
    poly: LaurentPoly
    checks: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "poly": self.poly.to_json(),
            "checks": dict(sorted(self.checks.items())),
        }


def mds_witness_verify(params: FamilyParams, field: FieldSpec = QQ) -> WitnessReport:
    """Build the witness and assert it is a section of ``D0`` not divisible by ``xi_m``."""
    tag, w = mds_witness(params, field)
    Dp = delta_prime(params)
    report = WitnessReport(params, tag, w)
    report.checks["support_in_delta_prime"] = all(Dp.contains(pt) for pt in w.terms)
    report.checks["multiplicity"] = multiplicity_at_unit(w) >= params.d0_mult
    report.checks["not_divisible_by_xi"] = divides_exactly(_xi(params.family, params.m, field), w) is None
    failed = [k for k, ok in report.checks.items() if not ok]
    if failed:
        raise AssertionError(f"witness {tag} for {params} fails {failed}")
    return report


# -- characteristic comparisons -------------------------------------------------------


@dataclass
class CrossCharReport:
    l: int
    params: FamilyParams
    rational: HcVerdict
    by_prime: dict[int, HcVerdict] = field(default_factory=dict)
    skipped: dict[int, str] = field(default_factory=dict)

    @property
    def exceptional(self) -> list[int]:
        return sorted(p for p, v in self.by_prime.items() if v.member != self.rational.member)

    @property
    def agree(self) -> bool:
        return not self.exceptional

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "rational": self.rational.to_json(),
            "by_prime": {str(p): v.to_json() for p, v in sorted(self.by_prime.items())},
            "skipped": {str(p): r for p, r in sorted(self.skipped.items())},
            "exceptional": self.exceptional,
            "agree": self.agree,
        }


def cross_char_check(l: int, params: FamilyParams, primes=None) -> CrossCharReport:
    """Compare the exact test over Q with the same test over several F_p."""
    _require_negative(params)
    primes = default_primes() if primes is None else tuple(primes)
    report = CrossCharReport(l, params, hc_exact_test(l, params, QQ))
    for p in sorted(set(primes)):
        Fp = FieldSpec.prime(p)
        if params.alpha.denominator % p == 0 or params.beta.denominator % p == 0:
            report.skipped[p] = "parameter denominator divisible by p"
            continue
        try:
            report.by_prime[p] = hc_exact_test(l, params, Fp)
        except ArithmeticError as exc:
            report.skipped[p] = f"xi_m undefined over F_{p}: {exc}"
    return report


@dataclass
class CharpAttempt:
    l: int
    found: bool
    reason: str

    def to_json(self) -> dict:
        return {"l": self.l, "found": self.found, "reason": self.reason}


@dataclass
class CharpOutcome:
    params: FamilyParams
    p: int
    l: int | None
    witness: LaurentPoly | None
    attempts: list[CharpAttempt] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "found" if self.l is not None else "inconclusive"

    @property
    def degree(self) -> int | None:
        """Multiple ``p^l`` of D0 the witness is a section of."""
        return None if self.l is None else self.p**self.l

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "status": self.status,
            "l": self.l,
            "multiple": self.degree,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "attempts": [a.to_json() for a in self.attempts],
        }


def _charp_candidate(params: FamilyParams, F: FieldSpec, l: int) -> tuple[LaurentPoly | None, str]:
    p, i, m = F.characteristic, params.family, params.m
    q = p**l
    one = LaurentPoly.constant(1, F)
    y = LaurentPoly.y(F)
    pts = lattice_points(delta_double_prime(params).scale(q))
    if (0, 0) not in pts:
        pts = [(0, 0)] + pts
    M = taylor_matrix(pts, q * ((i - 1) * m + 1), F)
    origin = pts.index((0, 0))
    K = kernel_basis(M)
    vec = next((v for v in K if not F.is_zero(v[origin])), None)
    if vec is None:
        return None, "no 1+g with the required multiplicity"
    h = LaurentPoly.from_vector(pts, vec, F)
    h = h.scale(F.inv(h.coefficient((0, 0))))
    xyxi = LaurentPoly.monomial(1, 1, 1, F) * _xi(i, m, F)
    G = xyxi.frobenius(q) * h
    g0 = G.coefficient((0, 0))
    if F.is_zero(g0):
        return None, "F has zero constant term"
    zeta = ((one - y) ** (i * m + 1)).frobenius(q) - G.scale(F.inv(g0))
    target = delta_prime(params).scale(q)
    if not all(target.contains(pt) for pt in zeta.terms):
        return None, "support leaves p^l*Delta'"
    if multiplicity_at_unit(zeta) < q * params.d0_mult:
        return None, "multiplicity too low"
    if F.is_zero(zeta.coefficient((0, q * params.d0_mult))):
        return None, "top coefficient vanishes"
    return zeta, "ok"


def charp_witness_search(params: FamilyParams, p: int, l_max: int) -> CharpOutcome:
    """Search for a section of ``p^l D0`` over F_p that misses C, for l = 1..l_max.

    The section has the shape ``((1-y)^(im+1))^(p^l) + c (x y xi_m)^(p^l) (1+g)``
    with ``g`` supported in ``p^l Delta''``.
    """
    _require_negative(params)
    F = FieldSpec.prime(p)
    if params.alpha == 0:
        one, y = LaurentPoly.constant(1, F), LaurentPoly.y(F)
        w = (one - y) ** params.d0_mult
        return CharpOutcome(params, p, 0, w, [CharpAttempt(0, True, "alpha = 0")])
    out = CharpOutcome(params, p, None, None)
    for l in range(1, l_max + 1):
        zeta, reason = _charp_candidate(params, F, l)
        out.attempts.append(CharpAttempt(l, zeta is not None, reason))
        if zeta is not None:
            out.l, out.witness = l, zeta
            break
    return out


# -- finite audits ----------------------------------------------------------------------


@dataclass
class SemigroupAudit:
    members: list[int]
    tested: list[int]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"members": self.members, "tested": self.tested, "violations": self.violations, "ok": self.ok}


def semigroup_audit(params: FamilyParams, field: FieldSpec = QQ, l_max: int = 3) -> SemigroupAudit:
    """Check additive closure and the m / m-1 implications on HC for l <= l_max."""
    _require_negative(params)
    tested = list(range(1, l_max + 1))
    member = {l: hc_exact_test(l, params, field).member for l in tested}
    S = sorted(l for l, ok in member.items() if ok)
    m = params.m
    bad = []
    for a in S:
        for b in S:
            if a <= b and a + b <= l_max and not member[a + b]:
                bad.append(f"{a} and {b} are members but {a + b} is not")
    for l in S:
        if m >= 1 and l + m <= l_max and member[l + m] and not member.get(m, True):
            bad.append(f"{l} and {l + m} are members but {m} is not")
        if m >= 2 and l + m - 1 <= l_max and member[l + m - 1] and not member.get(m - 1, True):
            bad.append(f"{l} and {l + m - 1} are members but {m - 1} is not")
    return SemigroupAudit(S, tested, bad)


@dataclass(frozen=True)
class ScanNode:
    alpha: Fraction
    beta: Fraction
    verdict: MdsVerdict

    def to_json(self) -> dict:
        d = {"alpha": str(self.alpha), "beta": str(self.beta)}
        d.update(self.verdict.to_json())
        return d


def scan_grid(family: int, m: int, step) -> list[ScanNode]:
    """Classify every grid node with ``0 <= alpha + beta <= threshold``, sorted by (alpha, beta)."""
    step = Fraction(step)
    if step <= 0:
        raise ValueError("grid step must be positive")
    t = negativity_threshold(family, m)
    n = int(t / step)
    nodes = []
    for a in range(n + 1):
        for b in range(n + 1 - a):
            alpha, beta = a * step, b * step
            if alpha + beta > t:
                continue
            params = FamilyParams(family, m, alpha, beta)
            if delta(params).is_degenerate:
                continue
            nodes.append(ScanNode(alpha, beta, mds_classify(params)))
    nodes.sort(key=lambda nd: (nd.alpha, nd.beta))
    return nodes
