"""
Chow groups of smooth complete toric varieties from their fans.

The p-dimensional torus-invariant subvarieties are the orbit closures V(sigma)
of cones sigma with n - p rays. For every cone tau with one ray fewer and
every functional u vanishing on tau, the divisor of the character u on V(tau)
gives the relation sum over sigma > tau of <u, nu> [V(sigma)] = 0, where nu is
the ray of sigma outside tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from hck.toric.fan import Cone, Fan
from hck.toric.smith import (
    as_integer_matrix,
    column_hermite_form,
    integer_kernel,
    smith_normal_form,
)
from hck.utils.eprint import eprint
from hck.utils.errors import FanError, RangeError, TorsionError


def orbit_cones(fan: Fan, p: int) -> List[Cone]:
    """
    List the cones whose orbit closures have dimension p.

    Args:
        fan: The fan.
        p: The orbit closure dimension, 0 <= p <= n.

    Returns:
        The cones with n - p rays, as sorted ray-index tuples in lexicographic
        order.

    Raises:
        RangeError: if p is outside 0..n.
    """
    if not 0 <= p <= fan.dim:
        raise RangeError(f"p must lie in 0..{fan.dim}, received {p}")
    return fan.cones(fan.dim - p)


@dataclass(frozen=True)
class ChowLattice:
    """
    The group A_p of a toric variety as a free quotient of the orbit classes.

    `class_coords[i]` is the class of V(generators[i]) in a basis of A_p,
    chosen so that the coordinate matrix is in column Hermite normal form.
    `relations` are the rows of the presentation, one column per generator.
    """

    p: int
    rank: int
    generators: Tuple[Cone, ...]
    relations: Tuple[Tuple[int, ...], ...]
    class_coords: Tuple[Tuple[int, ...], ...]

    def class_of(self: ChowLattice, cone: Cone) -> Tuple[int, ...]:
        """
        Get the class of one orbit closure.

        Args:
            cone: A cone with n - p rays.

        Returns:
            Its coordinate vector.

        Raises:
            RangeError: if the cone is not a generator.
        """
        try:
            return self.class_coords[self.generators.index(tuple(cone))]
        except ValueError as e:
            raise RangeError(f"{list(cone)} is not a cone of dimension n-p") from e


def _relations(fan: Fan, p: int, generators: List[Cone]) -> List[List[int]]:
    rows = []
    for tau in fan.cones(fan.dim - p - 1):
        functionals = integer_kernel(fan.ray_matrix(tau))
        containing = [
            (column, sigma)
            for column, sigma in enumerate(generators)
            if set(tau) <= set(sigma)
        ]
        for k in range(functionals.shape[1]):
            u = functionals[:, k]
            row = [0] * len(generators)
            for column, sigma in containing:
                (extra,) = set(sigma) - set(tau)
                row[column] = int(sum(a * b for a, b in zip(u, fan.rays[extra])))
            rows.append(row)
    return rows


def chow_lattice(fan: Fan, p: int) -> ChowLattice:
    """
    Present A_p of the toric variety of a fan.

    Args:
        fan: A smooth facet-paired fan.
        p: Cycle dimension, 0 <= p <= n - 1.

    Returns:
        The rank of A_p and the coordinates of every orbit class.

    Raises:
        RangeError: if p is outside 0..n-1.
        TorsionError: if the presentation has torsion.
        FanError: if A_p comes out as zero although there are generators.
    """
    if not 0 <= p <= fan.dim - 1:
        raise RangeError(f"p must lie in 0..{fan.dim - 1}, received {p}")
    generators = orbit_cones(fan, p)
    relations = _relations(fan, p, generators)
    R = as_integer_matrix(relations, len(generators))
    form = smith_normal_form(R)
    eprint(
        f"A_{p}: {len(generators)} generators, {len(relations)} relations, "
        f"invariant factors {[d for d in form.diagonal if d != 0]}"
    )

    torsion = [d for d in form.diagonal if d not in (0, 1)]
    if torsion:
        raise TorsionError(f"A_{p} has torsion, invariant factors {torsion}")
    free = list(range(form.rank, len(generators)))
    if not free:
        raise FanError(f"A_{p} has rank 0 but {len(generators)} generators")

    coords = column_hermite_form(form.Tinv[:, free])
    return ChowLattice(
        p=p,
        rank=len(free),
        generators=tuple(generators),
        relations=tuple(tuple(row) for row in relations),
        class_coords=tuple(tuple(int(x) for x in row) for row in coords),
    )


def relations_vanish(lattice: ChowLattice) -> bool:
    """
    Check that every relation annihilates the class coordinates.

    Args:
        lattice: The presentation.

    Returns:
        True iff relations @ class_coords == 0.
    """
    if not lattice.relations:
        return True
    product = np.array(lattice.relations, dtype=object) @ np.array(
        lattice.class_coords, dtype=object
    )
    return bool((product == 0).all())
