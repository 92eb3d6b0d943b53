"""Standard varieties whose E-polynomials are known in closed form."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple, Type

from hck.epoly.epoly import EPoly
from hck.utils.errors import RangeError


class AtomKind(Enum):
    """The atom families, valued by their grammar spelling."""

    POINT = "pt"
    AFFINE = "A"
    TORUS = "T"
    PROJECTIVE = "P"
    GRASSMANNIAN = "G"
    CURVE = "Curve"


_ARITY = {
    AtomKind.POINT: 0,
    AtomKind.AFFINE: 1,
    AtomKind.TORUS: 1,
    AtomKind.PROJECTIVE: 1,
    AtomKind.GRASSMANNIAN: 2,
    AtomKind.CURVE: 1,
}

# smooth projective atoms; their E-polynomials are honest Hodge polynomials
SMOOTH_PROJECTIVE = frozenset(
    [AtomKind.POINT, AtomKind.PROJECTIVE, AtomKind.GRASSMANNIAN, AtomKind.CURVE]
)


@dataclass(frozen=True)
class Atom:
    """A descriptor for one standard variety, e.g. ``G(2,4)``."""

    kind: AtomKind
    params: Tuple[int, ...] = ()

    def __post_init__(self: Atom) -> None:
        """
        Validate the parameters.

        Raises:
            RangeError: if the arity is wrong, a parameter is negative, or
                k > n for a Grassmannian.
        """
        if len(self.params) != _ARITY[self.kind]:
            raise RangeError(
                f"{self.kind.value} takes {_ARITY[self.kind]} parameter(s), "
                f"received {len(self.params)}"
            )
        for value in self.params:
            if value < 0:
                raise RangeError(
                    f"{self.kind.value} parameters must be nonnegative, "
                    f"received {value}"
                )
        if self.kind == AtomKind.GRASSMANNIAN:
            k, n = self.params
            if k > n:
                raise RangeError(f"G(k,n) needs k <= n, received G({k},{n})")

    @classmethod
    def point(cls: Type[Atom]) -> Atom:
        """A single point."""
        return cls(AtomKind.POINT)

    @classmethod
    def affine(cls: Type[Atom], n: int) -> Atom:
        """Affine n-space."""
        return cls(AtomKind.AFFINE, (n,))

    @classmethod
    def torus(cls: Type[Atom], n: int) -> Atom:
        """The algebraic torus (C*)^n."""
        return cls(AtomKind.TORUS, (n,))

    @classmethod
    def projective(cls: Type[Atom], n: int) -> Atom:
        """Projective n-space."""
        return cls(AtomKind.PROJECTIVE, (n,))

    @classmethod
    def grassmannian(cls: Type[Atom], k: int, n: int) -> Atom:
        """k-dimensional subspaces of an n-dimensional space."""
        return cls(AtomKind.GRASSMANNIAN, (k, n))

    @classmethod
    def curve(cls: Type[Atom], g: int) -> Atom:
        """A smooth projective curve of genus g."""
        return cls(AtomKind.CURVE, (g,))

    @property
    def smooth_projective(self: Atom) -> bool:
        """Whether the atom is a smooth projective variety."""
        return self.kind in SMOOTH_PROJECTIVE

    def __str__(self: Atom) -> str:
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}({','.join(str(x) for x in self.params)})"


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> Tuple[int, ...]:
    """
    Coefficients of the Gaussian binomial [n choose k]_q.

    Uses the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], so no division is
    ever needed.

    Args:
        n: The ambient dimension.
        k: The subspace dimension, 0 <= k <= n.

    Returns:
        c with [n choose k]_q = sum of c[j] q^j.

    Raises:
        RangeError: if k is outside 0..n.
    """
    if k < 0 or k > n:
        raise RangeError(f"Gaussian binomial needs 0 <= k <= n, received ({n},{k})")
    if k == 0 or k == n:
        return (1,)
    left = gaussian_binomial(n - 1, k - 1)
    right = gaussian_binomial(n - 1, k)
    out = [0] * max(len(left), len(right) + k)
    for j, c in enumerate(left):
        out[j] += c
    for j, c in enumerate(right):
        out[j + k] += c
    return tuple(out)


def atom_epoly(atom: Atom) -> EPoly:
    """
    Get the E-polynomial of a standard variety.

    Args:
        atom: The atom descriptor.

    Returns:
        point 1, A^n (uv)^n, (C*)^n (uv-1)^n, P^n sum of (uv)^j,
        G(k,n) the Gaussian binomial in q = uv, a genus-g curve 1-gu-gv+uv.
    """
    lefschetz = EPoly.lefschetz()
    if atom.kind == AtomKind.POINT:
        return EPoly.constant(1)
    if atom.kind == AtomKind.AFFINE:
        return lefschetz ** atom.params[0]
    if atom.kind == AtomKind.TORUS:
        return (lefschetz - 1) ** atom.params[0]
    if atom.kind == AtomKind.PROJECTIVE:
        return EPoly.from_uv([1] * (atom.params[0] + 1))
    if atom.kind == AtomKind.GRASSMANNIAN:
        return EPoly.from_uv(gaussian_binomial(atom.params[1], atom.params[0]))
    g = atom.params[0]
    return EPoly.from_terms([(0, 0, 1), (1, 0, -g), (0, 1, -g), (1, 1, 1)])
