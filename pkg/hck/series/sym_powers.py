"""E-polynomials of symmetric powers through the signed product formula."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul
from sympy.polys.rings import ring

from hck.epoly.epoly import EPoly
from hck.series.trunc_series import binomial_series_coefficient
from hck.utils.errors import RangeError

# u, v carry the Hodge grading; t counts the symmetric power
SYM_RING, _U, _V, _T = ring("u,v,t", ZZ)


@dataclass(frozen=True)
class SymSeries:
    """The first dmax + 1 coefficients of sum_d E(Sp^d X) t^d."""

    base: EPoly
    dmax: int
    coeffs: Tuple[EPoly, ...]

    def entry(self: SymSeries, d: int) -> EPoly:
        """
        Get E(Sp^d X).

        Args:
            d: The symmetric power, 0 <= d <= dmax.

        Returns:
            The E-polynomial of the d-th symmetric power.

        Raises:
            RangeError: if d is outside 0..dmax.
        """
        if not 0 <= d <= self.dmax:
            raise RangeError(f"d must lie in 0..{self.dmax}, received {d}")
        return self.coeffs[d]


def sym_powers(base: EPoly, dmax: int) -> SymSeries:
    """
    Compute E(Sp^d X) for d = 0..dmax.

    Expands prod over (p, q) of (1 - u^p v^q t)^(-c_{p,q}), with c_{p,q} the
    signed coefficients of the base, truncated at t^dmax. Negative c_{p,q}
    contribute finite polynomials.

    Args:
        base: E-polynomial of X.
        dmax: The largest symmetric power wanted.

    Returns:
        The SymSeries holding coefficients 0..dmax.

    Raises:
        RangeError: if dmax is negative.
    """
    if dmax < 0:
        raise RangeError(f"dmax must be nonnegative, received {dmax}")
    prec = dmax + 1
    series = SYM_RING.one
    for (p, q), c in base.terms():
        factor = SYM_RING.from_dict(
            {(p * k, q * k, k): binomial_series_coefficient(c, k) for k in range(prec)}
        )
        series = rs_mul(series, factor, _T, prec)

    buckets: List[Dict[Tuple[int, int], int]] = [{} for _ in range(prec)]
    for (a, b, k), coeff in series.terms():
        buckets[k][(a, b)] = int(coeff)
    coeffs = tuple(
        EPoly.from_terms([(a, b, coeff) for (a, b), coeff in bucket.items()])
        for bucket in buckets
    )
    return SymSeries(base=base, dmax=dmax, coeffs=coeffs)
