"""
Vanishing statements implied by a singularity-preserving C*-action.

If X carries such an action with fixed locus of dimension f, then
h^{p,q}(X) = 0 whenever |p - q| > f, and the odd virtual Betti numbers
beta^{2k-1}(X) vanish for k > f. These helpers report where a given
E-polynomial breaks those statements.
"""

from typing import List, Tuple

from hck.epoly.epoly import EPoly
from hck.utils.errors import RangeError


def _check_fixed_dim(fixed_dim: int) -> None:
    if fixed_dim < 0:
        raise RangeError(f"fixed_dim must be nonnegative, received {fixed_dim}")


def hodge_vanishing_violations(
    a: EPoly, fixed_dim: int
) -> List[Tuple[int, int, int]]:
    """
    List the Hodge numbers that should vanish but don't.

    Args:
        a: The E-polynomial of X.
        fixed_dim: Dimension of the fixed point set.

    Returns:
        (p, q, h^{p,q}) for every nonzero term with |p - q| > fixed_dim.
    """
    _check_fixed_dim(fixed_dim)
    return [
        (p, q, coeff) for (p, q), coeff in a.terms() if abs(p - q) > fixed_dim
    ]


def odd_betti_violations(a: EPoly, fixed_dim: int) -> List[Tuple[int, int]]:
    """
    List the odd virtual Betti numbers that should vanish but don't.

    Args:
        a: The E-polynomial of X.
        fixed_dim: Dimension of the fixed point set.

    Returns:
        (k, beta^k) for odd k = 2j - 1 with j > fixed_dim and beta^k != 0.
    """
    _check_fixed_dim(fixed_dim)
    return [
        (k, beta)
        for k, beta in a.betti_numbers()
        if k % 2 == 1 and (k + 1) // 2 > fixed_dim and beta != 0
    ]
