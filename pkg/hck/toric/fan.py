"""Smooth complete fans: validation, the JSON fan file, and standard fans."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from hck.toric.smith import as_integer_matrix, smith_normal_form
from hck.utils.errors import FanError, RangeError

Cone = Tuple[int, ...]
Ray = Tuple[int, ...]

_FAN_FIELDS = {"dim", "rays", "max_cones"}


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Fan:
    """
    A smooth fan with facet-paired maximal cones.

    Cones are sorted tuples of 0-based ray indices. Construction validates the
    fan; projectivity is assumed, not checked.
    """

    dim: int
    rays: Tuple[Ray, ...]
    max_cones: Tuple[Cone, ...]

    def __post_init__(self: Fan) -> None:
        """
        Validate the fan.

        Raises:
            FanError: if a ray is zero, non-primitive, repeated or of the wrong
                length, a maximal cone is malformed or not unimodular, or an
                (n-1)-dimensional face does not lie in exactly two maximal cones.
        """
        if self.dim < 1:
            raise FanError(f"Fan dimension must be positive, received {self.dim}")
        self._check_rays()
        self._check_cones()
        self._check_facets()

    def _check_rays(self: Fan) -> None:
        seen = set()
        for index, ray in enumerate(self.rays):
            if len(ray) != self.dim:
                raise FanError(
                    f"Ray {index} {list(ray)} does not have {self.dim} entries"
                )
            if not any(ray):
                raise FanError(f"Ray {index} is zero")
            divisor = 0
            for entry in ray:
                divisor = gcd(divisor, entry)
            if divisor != 1:
                raise FanError(f"Ray {index} {list(ray)} is not primitive")
            if ray in seen:
                raise FanError(f"Ray {index} {list(ray)} is a duplicate")
            seen.add(ray)

    def _check_cones(self: Fan) -> None:
        if not self.max_cones:
            raise FanError("Fan has no maximal cones")
        if len(set(self.max_cones)) != len(self.max_cones):
            raise FanError("Fan lists a maximal cone twice")
        for cone in self.max_cones:
            if len(set(cone)) != len(cone):
                raise FanError(f"Cone {list(cone)} repeats a ray")
            for index in cone:
                if not 0 <= index < len(self.rays):
                    raise FanError(f"Cone {list(cone)} refers to missing ray {index}")
            if len(cone) != self.dim:
                raise FanError(
                    f"Cone {list(cone)} is not full-dimensional; "
                    f"it needs {self.dim} rays"
                )
            form = smith_normal_form(self.ray_matrix(cone))
            if form.rank != self.dim or any(d != 1 for d in form.diagonal):
                raise FanError(f"Cone {list(cone)} is not smooth")

    def _check_facets(self: Fan) -> None:
        counts = Counter(
            facet
            for cone in self.max_cones
            for facet in combinations(cone, self.dim - 1)
        )
        for facet, count in sorted(counts.items()):
            if count != 2:
                raise FanError(
                    f"Facet {list(facet)} lies in {count} maximal cone(s), expected 2"
                )

    def ray_matrix(self: Fan, cone: Sequence[int]) -> Any:
        """
        Get the rays of a cone as matrix rows.

        Args:
            cone: Ray indices.

        Returns:
            A len(cone) x dim object-dtype matrix.
        """
        return as_integer_matrix([self.rays[i] for i in cone], self.dim)

    def cones(self: Fan, dim: int) -> List[Cone]:
        """
        List the cones of one dimension.

        Args:
            dim: The cone dimension, 0 <= dim <= n.

        Returns:
            Every face of a maximal cone with `dim` rays, sorted and deduplicated.

        Raises:
            RangeError: if dim is outside 0..n.
        """
        if not 0 <= dim <= self.dim:
            raise RangeError(
                f"Cone dimension must lie in 0..{self.dim}, received {dim}"
            )
        return sorted(
            {face for cone in self.max_cones for face in combinations(cone, dim)}
        )

    def to_document(self: Fan) -> Dict[str, Any]:
        """
        Get the fan file representation.

        Returns:
            The JSON-compatible document.
        """
        return {
            "dim": self.dim,
            "rays": [list(ray) for ray in self.rays],
            "max_cones": [list(cone) for cone in self.max_cones],
        }


def make_fan(
    dim: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]]
) -> Fan:
    """
    Build a fan from plain sequences.

    Args:
        dim: The lattice rank n.
        rays: Ray generators in Z^n.
        max_cones: Ray index sets of the maximal cones.

    Returns:
        The validated fan.
    """
    return Fan(
        dim,
        tuple(tuple(ray) for ray in rays),
        tuple(tuple(sorted(cone)) for cone in max_cones),
    )


def parse_fan(document: Union[str, Dict[str, Any]]) -> Fan:
    """
    Parse a fan file document.

    The document is ``{"dim": n, "rays": [[int, ...], ...], "max_cones":
    [[index, ...], ...]}`` with 0-based ray indices and no other fields.

    Args:
        document: The document, or its JSON text.

    Returns:
        The validated fan.

    Raises:
        FanError: if the document is malformed or the fan invalid.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except (json.JSONDecodeError, RecursionError) as e:
            raise FanError(f"Fan file is not valid JSON: {e}") from e
    if not isinstance(document, dict):
        raise FanError("Fan document must be an object")
    unknown = sorted(set(document) - _FAN_FIELDS)
    if unknown:
        raise FanError(f"Unknown fan field(s): {', '.join(unknown)}")
    missing = sorted(_FAN_FIELDS - set(document))
    if missing:
        raise FanError(f"Missing fan field(s): {', '.join(missing)}")

    dim = document["dim"]
    if not _is_int(dim):
        raise FanError("dim must be an integer")
    for field in ("rays", "max_cones"):
        value = document[field]
        if not isinstance(value, list) or not all(
            isinstance(row, list) and all(_is_int(x) for x in row) for row in value
        ):
            raise FanError(f"{field} must be a list of integer lists")
    return make_fan(dim, document["rays"], document["max_cones"])


def load_fan(path: Union[str, Path]) -> Fan:
    """
    Read and parse a fan file.

    Args:
        path: Location of the JSON fan file.

    Returns:
        The validated fan.

    Raises:
        FanError: if the file cannot be read or does not hold a valid fan.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise FanError(f"Cannot read fan file {path}: {e}") from e
    return parse_fan(text)


def projective_space_fan(n: int) -> Fan:
    """
    The fan of P^n: rays e_1..e_n and -(e_1+..+e_n).

    Args:
        n: The dimension, at least 1.

    Returns:
        The fan.

    Raises:
        RangeError: if n < 1.
    """
    if n < 1:
        raise RangeError(f"n must be >= 1, received {n}")
    rays = [[int(i == j) for j in range(n)] for i in range(n)] + [[-1] * n]
    return make_fan(n, rays, list(combinations(range(n + 1), n)))


def product_fan(a: Fan, b: Fan) -> Fan:
    """
    The fan of a product of two toric varieties.

    Args:
        a: The first factor, on the first coordinates.
        b: The second factor, on the last coordinates.

    Returns:
        The product fan; rays of a come first.
    """
    rays = [list(ray) + [0] * b.dim for ray in a.rays]
    rays += [[0] * a.dim + list(ray) for ray in b.rays]
    offset = len(a.rays)
    cones = [
        list(left) + [offset + i for i in right]
        for left in a.max_cones
        for right in b.max_cones
    ]
    return make_fan(a.dim + b.dim, rays, cones)


def hirzebruch_fan(a: int) -> Fan:
    """
    The fan of the Hirzebruch surface F_a.

    Args:
        a: The twist, at least 0; F_0 is P^1 x P^1.

    Returns:
        The fan with rays (1,0), (0,1), (-1,a), (0,-1).

    Raises:
        RangeError: if a < 0.
    """
    if a < 0:
        raise RangeError(f"a must be >= 0, received {a}")
    rays = [[1, 0], [0, 1], [-1, a], [0, -1]]
    return make_fan(2, rays, [[0, 1], [1, 2], [2, 3], [3, 0]])
