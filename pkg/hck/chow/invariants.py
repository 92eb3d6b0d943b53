"""
Closed-form invariants of the Chow varieties C_{p,d}(P^n).

C_{p,d}(P^n) parameterizes effective p-cycles of degree d in P^n. Everything
here is exact integer arithmetic; binomials come from `math.comb`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from hck.epoly.atoms import Atom, atom_epoly
from hck.epoly.epoly import EPoly
from hck.series.sym_powers import sym_powers
from hck.utils.errors import NoClosedFormError, RangeError
from hck.variety.expr import (
    AtomExpr,
    Complement,
    Disjoint,
    Product,
    SymPower,
    VarietyExpr,
)

# number of irreducible components of C_{1,d}(P^3) for d = 1..7, as known
# from genus bounds on space curves; not computed anywhere
COMPONENT_COUNTS_C1D_P3 = (1, 2, 4, 8, 14, 27, 46)


@dataclass(frozen=True)
class ChowIndex:
    """The index (p, d, n) of the Chow variety C_{p,d}(P^n)."""

    p: int
    d: int
    n: int

    def __post_init__(self: ChowIndex) -> None:
        """
        Validate the index.

        Raises:
            RangeError: if d or n is negative, or p lies outside 0..n.
        """
        if self.n < 0:
            raise RangeError(f"n must be nonnegative, received {self.n}")
        if self.d < 0:
            raise RangeError(f"d must be nonnegative, received {self.d}")
        if not 0 <= self.p <= self.n:
            raise RangeError(f"p must lie in 0..n={self.n}, received {self.p}")

    def __str__(self: ChowIndex) -> str:
        return f"C_{{{self.p},{self.d}}}(P^{self.n})"


def binom(a: int, b: int) -> int:
    """
    Binomial coefficient, zero when b < 0 or b > a.

    Args:
        a: The top, nonnegative.
        b: The bottom.

    Returns:
        a choose b.
    """
    if b < 0 or a < 0:
        return 0
    return comb(a, b)


def v(p: int, n: int) -> int:
    """
    Count the torus-invariant p-planes of P^n.

    Args:
        p: Dimension of the planes.
        n: Dimension of the ambient space.

    Returns:
        binom(n + 1, p + 1).

    Raises:
        RangeError: if p lies outside 0..n.
    """
    ChowIndex(p, 0, n)
    return comb(n + 1, p + 1)


def chow_euler(p: int, d: int, n: int) -> int:
    """
    Euler characteristic of C_{p,d}(P^n), in closed form.

    Each of the v(p, n) invariant p-planes contributes a geometric factor, so
    the Euler characteristic counts degree-d monomials in v(p, n) variables.

    Args:
        p: Cycle dimension.
        d: Cycle degree.
        n: Ambient dimension.

    Returns:
        binom(v(p, n) + d - 1, d).

    Raises:
        RangeError: if the index is invalid.
    """
    ChowIndex(p, d, n)
    if d == 0:
        return 1
    return comb(v(p, n) + d - 1, d)


@lru_cache(maxsize=None)
def _sym_euler(n: int, d: int) -> int:
    return sym_powers(atom_epoly(Atom.projective(n)), d).entry(d).euler_char()


@lru_cache(maxsize=None)
def _chow_euler_rec(p: int, d: int, n: int) -> int:
    if d == 0 or p == n:
        return 1
    if p == 0:
        return _sym_euler(n, d)
    total = _chow_euler_rec(p - 1, d, n - 1)
    for i in range(1, d + 1):
        total += _chow_euler_rec(p, i, n - 1) * _chow_euler_rec(p - 1, d - i, n - 1)
    return total


def chow_euler_rec(p: int, d: int, n: int) -> int:
    """
    Euler characteristic of C_{p,d}(P^n), by recursion on (p, n).

    Uses chi(C_{p,d}(P^n)) = chi(C_{p-1,d}(P^{n-1}))
    + sum_{i=1..d} chi(C_{p,i}(P^{n-1})) chi(C_{p-1,d-i}(P^{n-1})),
    bottoming out at d = 0 and p = n (value 1) and at p = 0, where the
    symmetric product Sp^d(P^n) is evaluated through `sym_powers`.

    Args:
        p: Cycle dimension.
        d: Cycle degree.
        n: Ambient dimension.

    Returns:
        The Euler characteristic.

    Raises:
        RangeError: if the index is invalid.
    """
    ChowIndex(p, d, n)
    return _chow_euler_rec(p, d, n)


def _check_dim_index(p: int, d: int, n: int) -> None:
    ChowIndex(p, d, n)
    if d < 1:
        raise RangeError(f"d must be >= 1, received {d}")


def chow_dim(p: int, d: int, n: int) -> int:
    """
    Dimension of C_{p,d}(P^n).

    The larger of two families wins: unions of d planes of dimension p, or
    degree-d hypersurfaces in a (p+1)-plane.

    Args:
        p: Cycle dimension.
        d: Cycle degree, at least 1.
        n: Ambient dimension.

    Returns:
        max(d(p+1)(n-p), binom(d+p+1, p+1) - 1 + (p+2)(n-p-1)), and 0 for
        p = n.

    Raises:
        RangeError: if the index is invalid.
    """
    _check_dim_index(p, d, n)
    if p == n:
        return 0
    planes = d * (p + 1) * (n - p)
    hypersurfaces = comb(d + p + 1, p + 1) - 1 + (p + 2) * (n - p - 1)
    return max(planes, hypersurfaces)


def chow_dim_curves(d: int, n: int) -> int:
    """
    Dimension of the space of degree-d curves in P^n.

    Args:
        d: Curve degree, at least 1.
        n: Ambient dimension, at least 2.

    Returns:
        max(2d(n-1), 3(n-2) + d(d+3)/2).

    Raises:
        RangeError: if d < 1 or n < 2.
    """
    if n < 2:
        raise RangeError(f"n must be >= 2, received {n}")
    if d < 1:
        raise RangeError(f"d must be >= 1, received {d}")
    return max(2 * d * (n - 1), 3 * (n - 2) + d * (d + 3) // 2)


def kollar_bound(p: int, d: int, n: int) -> int:
    """
    Upper bound on the number of irreducible components of C_{p,d}(P^n).

    Args:
        p: Cycle dimension.
        d: Cycle degree, at least 1.
        n: Ambient dimension.

    Returns:
        binom(nd + d, n) ** m with m = d binom(d+p-1, p) + binom(d+p-1, p-1).

    Raises:
        RangeError: if the index is invalid.
    """
    _check_dim_index(p, d, n)
    m = d * binom(d + p - 1, p) + binom(d + p - 1, p - 1)
    return binom(n * d + d, n) ** m


def _grassmannian(k: int, n: int) -> VarietyExpr:
    return AtomExpr(Atom.grassmannian(k, n))


def _projective(n: int) -> VarietyExpr:
    return AtomExpr(Atom.projective(n))


def chow2_expr(p: int, n: int) -> VarietyExpr:
    """
    Expression for C_{p,2}(P^n).

    A degree-2 p-cycle is either a pair of p-planes or a quadric in a
    (p+1)-plane that is not a pair of planes, so
    C_{p,2}(P^n) = Sp^2 G(p+1, n+1) disjoint from a bundle over G(p+2, n+1)
    with fiber P^{binom(p+3,2)-1} minus Sp^2(P^{p+1}).

    Args:
        p: Cycle dimension.
        n: Ambient dimension.

    Returns:
        The decomposition tree.

    Raises:
        RangeError: unless 0 <= p <= n - 1.
    """
    if not 0 <= p <= n - 1:
        raise RangeError(f"chow2 needs 0 <= p <= n-1, received p={p}, n={n}")
    pairs = SymPower(_grassmannian(p + 1, n + 1), 2)
    quadrics = Complement(
        _projective(comb(p + 3, 2) - 1), SymPower(_projective(p + 1), 2)
    )
    return Disjoint(pairs, Product(_grassmannian(p + 2, n + 1), quadrics))


def chow_known_expr(p: int, d: int, n: int) -> VarietyExpr:
    """
    Expression for C_{p,d}(P^n) where a closed description is known.

    Args:
        p: Cycle dimension.
        d: Cycle degree.
        n: Ambient dimension.

    Returns:
        pt for d = 0 or p = n, G(p+1, n+1) for d = 1, Sp^d(P^n) for p = 0,
        P^{binom(n+d,d)-1} for hypersurfaces (p = n-1), and `chow2_expr` for
        d = 2.

    Raises:
        RangeError: if the index is invalid.
        NoClosedFormError: for every other index.
    """
    ChowIndex(p, d, n)
    if d == 0 or p == n:
        return AtomExpr(Atom.point())
    if d == 1:
        return _grassmannian(p + 1, n + 1)
    if p == 0:
        return SymPower(_projective(n), d)
    if p == n - 1:
        return _projective(comb(n + d, d) - 1)
    if d == 2:
        return chow2_expr(p, n)
    raise NoClosedFormError(f"No closed form is known for {ChowIndex(p, d, n)}")


def chow_known_epoly(p: int, d: int, n: int) -> EPoly:
    """
    E-polynomial of C_{p,d}(P^n) where a closed description is known.

    Args:
        p: Cycle dimension.
        d: Cycle degree.
        n: Ambient dimension.

    Returns:
        The evaluated `chow_known_expr`.
    """
    return chow_known_expr(p, d, n).evaluate()
