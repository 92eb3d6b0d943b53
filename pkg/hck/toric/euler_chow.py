"""Euler-Chow series of smooth projective toric varieties."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hck.series.trunc_series import SeriesBound, TruncSeries, product_expand
from hck.toric.chow_lattice import ChowLattice, chow_lattice
from hck.toric.fan import Fan
from hck.utils.eprint import eprint
from hck.utils.errors import FunctionalError, RangeError


@dataclass(frozen=True)
class EulerChowSeries:
    """
    The p-th Euler-Chow series sum over classes alpha of chi(C_{p,alpha}) x^alpha.

    Terms are kept while the degree functional is at most `bound`.
    """

    p: int
    basis_rank: int
    functional: Tuple[int, ...]
    bound: int
    series: TruncSeries

    def degree(self: EulerChowSeries, cls: Sequence[int]) -> int:
        """
        Get the degree of a class under the functional.

        Args:
            cls: Class coordinates.

        Returns:
            The pairing of the functional with the class.
        """
        return sum(w * c for w, c in zip(self.functional, cls))

    def coefficient(self: EulerChowSeries, cls: Sequence[int]) -> int:
        """
        Get the Euler characteristic of the Chow variety of one class.

        Args:
            cls: Class coordinates, within the bound.

        Returns:
            chi(C_{p,cls}); zero for classes with no effective cycles.
        """
        return self.series.coefficient(cls)

    def entries(self: EulerChowSeries) -> List[Tuple[Tuple[int, ...], int]]:
        """
        Get every stored term.

        Returns:
            (class, chi) pairs sorted by degree, then lexicographically.
        """
        return sorted(
            self.series.terms(), key=lambda term: (self.degree(term[0]), term[0])
        )

    def to_list(self: EulerChowSeries) -> List[Dict[str, Any]]:
        """
        Get the series in its output form.

        Returns:
            ``{"class": [...], "chi": ...}`` records in `entries` order.
        """
        return [{"class": list(cls), "chi": chi} for cls, chi in self.entries()]


def euler_chow_series(
    fan: Fan,
    p: int,
    bound: int,
    degree_functional: Optional[Sequence[int]] = None,
    lattice: Optional[ChowLattice] = None,
) -> EulerChowSeries:
    """
    Expand the Euler-Chow series as a product of geometric series.

    Each torus-invariant p-dimensional subvariety V contributes a factor
    1 / (1 - x^[V]).

    Args:
        fan: The fan of the toric variety.
        p: Cycle dimension, 0 <= p <= n - 1.
        bound: Largest degree kept.
        degree_functional: Integer weights on the class coordinates; defaults
            to the sum of coordinates.
        lattice: A precomputed `chow_lattice(fan, p)`.

    Returns:
        The truncated series.

    Raises:
        RangeError: if bound < 0.
        FunctionalError: if the functional has the wrong length or is not
            strictly positive on every orbit class.
    """
    if bound < 0:
        raise RangeError(f"bound must be nonnegative, received {bound}")
    if lattice is None:
        lattice = chow_lattice(fan, p)
    functional = tuple(
        [1] * lattice.rank if degree_functional is None else degree_functional
    )
    if len(functional) != lattice.rank:
        raise FunctionalError(
            f"Degree functional has {len(functional)} entries, "
            f"the class lattice has rank {lattice.rank}"
        )
    weights = SeriesBound.weighted(functional, bound)
    for cone, cls in zip(lattice.generators, lattice.class_coords):
        if weights.degree(cls) <= 0:
            raise FunctionalError(
                f"Degree functional {list(functional)} is not positive on the "
                f"class {list(cls)} of V({list(cone)}); pass an explicit functional"
            )

    series = product_expand([(cls, 1) for cls in lattice.class_coords], weights)
    eprint(f"E_{p}: {len(lattice.generators)} factors, {len(series)} terms")
    return EulerChowSeries(
        p=p,
        basis_rank=lattice.rank,
        functional=functional,
        bound=bound,
        series=series,
    )
