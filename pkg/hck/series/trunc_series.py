"""Truncated multivariate formal power series over the integers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Type

from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_trunc
from sympy.polys.rings import PolyRing, ring

from hck.utils.errors import RangeError, SeriesShapeError

Exponent = Tuple[int, ...]


def binomial_series_coefficient(c: int, k: int) -> int:
    """
    Coefficient of x^k in (1 - x)^(-c).

    For c > 0 this is binom(c - 1 + k, k); for c < 0 it is the finite binomial
    (-1)^k binom(|c|, k); for c = 0 it is 1 at k = 0 and 0 elsewhere.

    Args:
        c: The (possibly negative) exponent of the geometric factor.
        k: The power of x.

    Returns:
        The integer coefficient.
    """
    if k < 0:
        return 0
    if c > 0:
        return comb(c - 1 + k, k)
    if c == 0:
        return 1 if k == 0 else 0
    return (-1) ** k * comb(-c, k)


@dataclass(frozen=True)
class SeriesBound:
    """
    Truncation region of a series.

    Exactly one of two shapes is used: per-variable caps (``caps``), keeping
    exponent vectors e with 0 <= e[i] <= caps[i]; or a weighted total degree
    (``weights`` and ``total``), keeping e with sum(weights[i] * e[i]) <= total.
    """

    caps: Optional[Tuple[int, ...]] = None
    weights: Optional[Tuple[int, ...]] = None
    total: Optional[int] = None

    def __post_init__(self: SeriesBound) -> None:
        """
        Validate the shape.

        Raises:
            RangeError: if neither or both shapes are given, or a bound is
                negative.
        """
        boxed = self.caps is not None
        weighted = self.weights is not None or self.total is not None
        if boxed == weighted:
            raise RangeError("A series bound needs either caps or weights+total")
        if boxed:
            assert self.caps is not None  # for typing
            if not self.caps or min(self.caps) < 0:
                raise RangeError(f"Caps must be nonnegative, received {self.caps}")
        else:
            if self.weights is None or self.total is None or not self.weights:
                raise RangeError("A weighted bound needs both weights and total")
            if self.total < 0:
                raise RangeError(f"Bound must be nonnegative, received {self.total}")

    @classmethod
    def box(cls: Type[SeriesBound], caps: Sequence[int]) -> SeriesBound:
        """
        Per-variable truncation.

        Args:
            caps: The largest exponent kept for each variable.

        Returns:
            The bound.
        """
        return cls(caps=tuple(caps))

    @classmethod
    def weighted(
        cls: Type[SeriesBound], weights: Sequence[int], total: int
    ) -> SeriesBound:
        """
        Weighted total-degree truncation.

        Args:
            weights: The degree of each variable.
            total: The largest degree kept.

        Returns:
            The bound.
        """
        return cls(weights=tuple(weights), total=total)

    @classmethod
    def scalar(cls: Type[SeriesBound], nvars: int, total: int) -> SeriesBound:
        """
        Ordinary total-degree truncation (every weight 1).

        Args:
            nvars: The number of variables.
            total: The largest total degree kept.

        Returns:
            The bound.
        """
        return cls.weighted([1] * nvars, total)

    @property
    def nvars(self: SeriesBound) -> int:
        """The number of variables the bound is shaped for."""
        shape = self.caps if self.caps is not None else self.weights
        assert shape is not None  # for typing
        return len(shape)

    def degree(self: SeriesBound, exponent: Exponent) -> int:
        """
        The weighted degree of an exponent vector (weighted bounds only).

        Args:
            exponent: The exponent vector.

        Returns:
            sum(weights[i] * exponent[i]).
        """
        assert self.weights is not None
        return sum(w * e for w, e in zip(self.weights, exponent))

    def admits(self: SeriesBound, exponent: Exponent) -> bool:
        """
        Whether an exponent vector lies in the truncation region.

        Args:
            exponent: The exponent vector.

        Returns:
            True if a term with this exponent is kept.
        """
        if self.caps is not None:
            return all(0 <= e <= cap for e, cap in zip(exponent, self.caps))
        assert self.total is not None
        return self.degree(exponent) <= self.total

    def max_power(self: SeriesBound, monomial: Exponent) -> int:
        """
        The largest k with k * monomial still admitted.

        Args:
            monomial: A nonzero exponent vector.

        Returns:
            The largest admitted power.

        Raises:
            RangeError: if the powers of the monomial never leave the region,
                i.e. the geometric series in it would not truncate.
        """
        if len(monomial) != self.nvars:
            raise SeriesShapeError(
                f"Monomial has {len(monomial)} variables, bound has {self.nvars}"
            )
        if self.caps is not None:
            if min(monomial) < 0 or not any(monomial):
                raise RangeError(
                    f"Monomial {monomial} must be nonzero with nonnegative entries"
                )
            return min(cap // e for e, cap in zip(monomial, self.caps) if e > 0)
        assert self.total is not None
        degree = self.degree(monomial)
        if degree <= 0:
            raise RangeError(
                f"Monomial {monomial} has degree {degree}; it must be positive"
            )
        return self.total // degree


class TruncSeries:
    """
    A multivariate formal power series truncated to a `SeriesBound`.

    Terms map exponent vectors to nonzero integers; terms outside the bound are
    dropped on construction, so every stored term lies in the region.
    """

    __slots__ = ("_bound", "_terms")

    def __init__(
        self: TruncSeries,
        bound: SeriesBound,
        terms: Optional[Mapping[Exponent, int]] = None,
    ) -> None:
        """
        Initialize a TruncSeries.

        Args:
            bound: The truncation region.
            terms: Exponent vector to coefficient. Zero coefficients and terms
                outside the bound are dropped.

        Raises:
            SeriesShapeError: if an exponent vector has the wrong length.
        """
        self._bound = bound
        kept: Dict[Exponent, int] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != bound.nvars:
                raise SeriesShapeError(
                    f"Exponent {exponent} does not have {bound.nvars} entries"
                )
            if coeff and bound.admits(exponent):
                kept[exponent] = int(coeff)
        self._terms = kept

    @classmethod
    def one(cls: Type[TruncSeries], bound: SeriesBound) -> TruncSeries:
        """
        The constant series 1.

        Args:
            bound: The truncation region.

        Returns:
            The unit series.
        """
        return cls(bound, {(0,) * bound.nvars: 1})

    @property
    def bound(self: TruncSeries) -> SeriesBound:
        """The truncation region."""
        return self._bound

    @property
    def nvars(self: TruncSeries) -> int:
        """The number of variables."""
        return self._bound.nvars

    def coefficient(self: TruncSeries, exponent: Sequence[int]) -> int:
        """
        Get one coefficient.

        Args:
            exponent: The exponent vector.

        Returns:
            The coefficient, zero if absent or truncated away.
        """
        return self._terms.get(tuple(exponent), 0)

    def terms(self: TruncSeries) -> List[Tuple[Exponent, int]]:
        """
        Get all stored terms.

        Returns:
            (exponent, coeff) pairs in lexicographic order of exponents.
        """
        return sorted(self._terms.items())

    def __len__(self: TruncSeries) -> int:
        return len(self._terms)

    def __eq__(self: TruncSeries, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._bound == other._bound and self._terms == other._terms

    def __hash__(self: TruncSeries) -> int:
        return hash((self._bound, tuple(self.terms())))

    def __repr__(self: TruncSeries) -> str:
        return f"TruncSeries({self._bound}, {dict(self.terms())})"

    def __mul__(self: TruncSeries, other: TruncSeries) -> TruncSeries:
        return series_mul(self, other)


@lru_cache(maxsize=None)
def _series_ring(nvars: int) -> PolyRing:
    return ring(",".join(f"x{i}" for i in range(nvars)), ZZ)[0]


def _box_mul(a: TruncSeries, b: TruncSeries, caps: Tuple[int, ...]) -> TruncSeries:
    R = _series_ring(len(caps))
    pa, pb = R.from_dict(dict(a.terms())), R.from_dict(dict(b.terms()))
    product = rs_mul(pa, pb, R.gens[0], caps[0] + 1)
    for x, cap in zip(R.gens[1:], caps[1:]):
        product = rs_trunc(product, x, cap + 1)
    return TruncSeries(a.bound, {tuple(e): int(c) for e, c in product.terms()})


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Multiply two series, discarding every term outside the shared bound.

    Args:
        a: The left factor.
        b: The right factor.

    Returns:
        The truncated product.

    Raises:
        SeriesShapeError: if the two series differ in variables or bound.
    """
    if a.bound != b.bound:
        raise SeriesShapeError(f"Cannot multiply series over {a.bound} and {b.bound}")
    bound = a.bound
    if bound.caps is not None:
        return _box_mul(a, b, bound.caps)

    # sympy truncates one variable at a time, so weighted bounds multiply here
    out: Dict[Exponent, int] = {}
    for ea, ca in a.terms():
        for eb, cb in b.terms():
            exponent = tuple(x + y for x, y in zip(ea, eb))
            if bound.admits(exponent):
                out[exponent] = out.get(exponent, 0) + ca * cb
    return TruncSeries(bound, out)


def geom_factor_expand(
    monomial: Sequence[int], c: int, bound: SeriesBound
) -> TruncSeries:
    """
    Expand (1 - m)^(-c) up to the bound.

    Args:
        monomial: The exponent vector of m; must be nonzero.
        c: The exponent; c > 0 gives a binomial series, c < 0 a polynomial.
        bound: The truncation region.

    Returns:
        The truncated expansion.

    Raises:
        RangeError: if m is the zero vector or its powers never leave the region.
    """
    monomial = tuple(monomial)
    if not any(monomial):
        raise RangeError("Cannot expand a geometric factor in the zero monomial")
    top = bound.max_power(monomial)
    terms = {
        tuple(k * e for e in monomial): binomial_series_coefficient(c, k)
        for k in range(top + 1)
    }
    return TruncSeries(bound, terms)


def product_expand(
    factors: Iterable[Tuple[Sequence[int], int]], bound: SeriesBound
) -> TruncSeries:
    """
    Expand a product of geometric factors prod (1 - m_i)^(-c_i).

    Factors are folded in input order; the result does not depend on it.

    Args:
        factors: (monomial, c) pairs.
        bound: The truncation region.

    Returns:
        The truncated product; 1 for an empty factor list.
    """
    result = TruncSeries.one(bound)
    for monomial, c in factors:
        result = series_mul(result, geom_factor_expand(monomial, c, bound))
    return result
