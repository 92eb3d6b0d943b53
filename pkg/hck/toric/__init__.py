"""Toric varieties from fans: Chow groups and Euler-Chow series."""

from hck.toric.chow_lattice import (
    ChowLattice,
    chow_lattice,
    orbit_cones,
    relations_vanish,
)
from hck.toric.euler_chow import EulerChowSeries, euler_chow_series
from hck.toric.fan import (
    Fan,
    hirzebruch_fan,
    load_fan,
    make_fan,
    parse_fan,
    product_fan,
    projective_space_fan,
)
from hck.toric.smith import (
    SmithForm,
    column_hermite_form,
    integer_kernel,
    smith_normal_form,
)

__all__ = [
    "ChowLattice",
    "EulerChowSeries",
    "Fan",
    "SmithForm",
    "chow_lattice",
    "column_hermite_form",
    "euler_chow_series",
    "hirzebruch_fan",
    "integer_kernel",
    "load_fan",
    "make_fan",
    "orbit_cones",
    "parse_fan",
    "product_fan",
    "projective_space_fan",
    "relations_vanish",
    "smith_normal_form",
]
