"""Exact computations for negative curves on blowups of toric surfaces."""

from .families import FamilyParams, delta, delta0, delta_double_prime, delta_prime, verify_xi, xi_recurrence, xi_solve
from .hc import (
    charp_witness_search,
    cross_char_check,
    hc_exact_test,
    hc_vertex_test,
    mds_classify,
    mds_witness_verify,
    scan_grid,
    section_space,
    semigroup_audit,
)
from .intersection import c_self_intersection, negativity_status
from .linalg import BACKEND, GF, QQ, FieldSpec
from .tilde import pivot_slope, q_point, tilde_negativity_certificate, tilde_triangle
from .wps import example_parameters, fan_of_family, wps_weights

__all__ = [
    "BACKEND", "FieldSpec", "GF", "QQ", "FamilyParams",
    "delta", "delta0", "delta_prime", "delta_double_prime",
    "xi_solve", "xi_recurrence", "verify_xi",
    "c_self_intersection", "negativity_status",
    "section_space", "hc_vertex_test", "hc_exact_test", "mds_classify", "mds_witness_verify",
    "cross_char_check", "charp_witness_search", "semigroup_audit", "scan_grid",
    "pivot_slope", "q_point", "tilde_triangle", "tilde_negativity_certificate",
    "wps_weights", "fan_of_family", "example_parameters",
]
__version__ = "0.1.0"
