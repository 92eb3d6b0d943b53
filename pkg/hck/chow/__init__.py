"""Invariants of Chow varieties of projective space."""

from hck.chow.constraints import (
    ConstraintCheck,
    ConstraintReport,
    check_chow_constraints,
    check_diagonal_hodge,
)
from hck.chow.invariants import (
    COMPONENT_COUNTS_C1D_P3,
    ChowIndex,
    binom,
    chow2_expr,
    chow_dim,
    chow_dim_curves,
    chow_euler,
    chow_euler_rec,
    chow_known_epoly,
    chow_known_expr,
    kollar_bound,
    v,
)

__all__ = [
    "COMPONENT_COUNTS_C1D_P3",
    "ChowIndex",
    "ConstraintCheck",
    "ConstraintReport",
    "binom",
    "check_chow_constraints",
    "check_diagonal_hodge",
    "chow2_expr",
    "chow_dim",
    "chow_dim_curves",
    "chow_euler",
    "chow_euler_rec",
    "chow_known_epoly",
    "chow_known_expr",
    "kollar_bound",
    "v",
]
