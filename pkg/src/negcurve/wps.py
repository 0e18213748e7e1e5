"""Normal fans of the family triangles and weighted projective plane weights."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .families import FamilyParams, delta
from .geometry import primitive_inward_normals
from .intersection import Negativity, negativity_status

Ray = tuple[int, int]


def _det(u: Ray, v: Ray) -> int:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class WeightData:
    rays: tuple[Ray, Ray, Ray]
    weights: tuple[int, int, int]
    index: int
    content: int  # gcd of the unreduced determinant weights

    def to_json(self) -> dict:
        return {
            "rays": [list(r) for r in self.rays],
            "weights": list(self.weights),
            "index": self.index,
            "content": self.content,
        }


def snf_index(rays) -> int:
    """Index in Z^2 of the sublattice spanned by ``rays`` (product of the SNF diagonal)."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    M = Matrix([[r[0] for r in rays], [r[1] for r in rays]])
    S = smith_normal_form(M, domain=ZZ)
    d = [abs(int(S[k, k])) for k in range(min(S.shape))]
    if 0 in d:
        raise ValueError("rays do not span a full-rank sublattice")
    return math.prod(d)


def wps_weights(rays) -> WeightData:
    """Positive primitive relation ``a n1 + b n2 + c n3 = 0`` among three rays."""
    n1, n2, n3 = (tuple(int(c) for c in r) for r in rays)
    w = (_det(n2, n3), _det(n3, n1), _det(n1, n2))
    if any(x == 0 for x in w):
        raise ValueError("rays are not pairwise independent")
    if all(x < 0 for x in w):
        w = tuple(-x for x in w)
    elif not all(x > 0 for x in w):
        raise ValueError("rays do not positively span the plane")
    g = math.gcd(*w)
    weights = tuple(x // g for x in w)
    return WeightData((n1, n2, n3), weights, snf_index((n1, n2, n3)), g)


def example_parameters(family: int, m: int) -> FamilyParams:
    """Closed-form (alpha, beta) producing a non-MDS blowup in each family."""
    if family == 1:
        alpha = Fraction(3, 4 * m * m + 11 * m + 10)
        beta = Fraction(4 * m + 5, (2 * m + 3) ** 2)
    elif family == 2:
        alpha = Fraction(1, 10 * m + 7)
        beta = Fraction(2 * m + 1, 16 * (20 * m * m + 4 * m + 13))
    else:
        raise ValueError("family must be 1 or 2")
    params = FamilyParams(family, m, alpha, beta)
    if negativity_status(params) is not Negativity.NEGATIVE:
        raise AssertionError(f"example parameters {params} are not negative")
    return params


def fan_of_family(params: FamilyParams) -> WeightData:
    """Fan of Delta(params), rays ordered (left edge, bottom edge, right edge)."""
    D = delta(params)
    if D.is_degenerate:
        raise ValueError("degenerate triangle has no complete fan")
    bottom, right, left = primitive_inward_normals(D)
    return wps_weights((left, bottom, right))


def example_rays(family: int, m: int) -> tuple[Ray, Ray, Ray]:
    """Closed-form outward ray generators for :func:`example_parameters`.

    Ordered (left, bottom, right). They are positive multiples of the
    primitive outward normals; for family 1 with ``m % 3 == 2`` the bottom
    generator carries a factor 3, so the relation among these vectors is the
    non-well-formed presentation of the same weighted projective plane.
    """
    if family == 1:
        return (
            (-(4 * m * m + 8 * m + 5), 4 * (m + 1)),
            (4 * m + 7, -(m + 1) * (4 * m + 3)),
            (1, 1),
        )
    if family == 2:
        return (
            (-2 * (80 * m * m + 16 * m + 53), 80 * m * m + 16 * m + 51),
            (5, -(5 * m + 1)),
            (2, 1),
        )
    raise ValueError("family must be 1 or 2")


def well_formed(weights) -> tuple[int, int, int]:
    """Reduce weights to the well-formed presentation of the same plane.

    Divides out the overall gcd, then for each pair the common factor that
    the third weight does not share: P(a, b, c) = P(a/d, b/d, c) when
    d = gcd(a, b) is coprime to c.
    """
    w = list(weights)
    g = math.gcd(*w)
    w = [x // g for x in w]
    changed = True
    while changed:
        changed = False
        for k in range(3):
            a, b = (k + 1) % 3, (k + 2) % 3
            d = math.gcd(w[a], w[b])
            if d > 1:
                w[a] //= d
                w[b] //= d
                changed = True
    return tuple(w)
