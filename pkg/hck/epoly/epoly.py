"""Virtual Hodge polynomials (E-polynomials) and virtual Poincaré polynomials."""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple, Type, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from hck.utils.errors import RangeError

# Both rings are created once; every EPoly/UniPoly lives in one of them.
HODGE_RING, _U, _V = ring("u,v", ZZ)
BETTI_RING, _T = ring("t", ZZ)

Monomial = Tuple[int, ...]
Coercible = Union["EPoly", int]


def format_terms(
    terms: Sequence[Tuple[Monomial, int]], names: Sequence[str]
) -> str:
    """
    Render sparse terms as ASCII text, e.g. ``u^2v^2-2uv+1``.

    Args:
        terms: (exponents, coefficient) pairs, already in the order to print.
        names: Variable name for each exponent position.

    Returns:
        The rendered polynomial; "0" if there are no terms.
    """
    if not terms:
        return "0"
    out: List[str] = []
    for i, (monom, coeff) in enumerate(terms):
        monomial = "".join(
            name if exp == 1 else f"{name}^{exp}"
            for name, exp in zip(names, monom)
            if exp != 0
        )
        sign = "-" if coeff < 0 else ("+" if i > 0 else "")
        magnitude = abs(coeff)
        if monomial and magnitude == 1:
            out.append(f"{sign}{monomial}")
        else:
            out.append(f"{sign}{magnitude}{monomial}")
    return "".join(out)


def _sorted_terms(poly: PolyElement) -> List[Tuple[Monomial, int]]:
    # lexicographic-descending on exponent tuples; coefficients as python ints
    return sorted(
        ((tuple(monom), int(coeff)) for monom, coeff in poly.items()),
        reverse=True,
    )


class UniPoly:
    """
    A virtual Poincaré polynomial: a sparse polynomial in t over the integers.

    The coefficient of t^k is the k-th virtual Betti number; it can be negative
    for singular varieties.
    """

    __slots__ = ("_poly",)

    def __init__(self: UniPoly, poly: PolyElement = BETTI_RING.zero) -> None:
        """
        Initialize a UniPoly.

        Args:
            poly: An element of ``BETTI_RING``.
        """
        self._poly = poly

    @classmethod
    def from_coefficients(cls: Type[UniPoly], coeffs: Sequence[int]) -> UniPoly:
        """
        Build a UniPoly from a dense coefficient list.

        Args:
            coeffs: coeffs[k] is the coefficient of t^k.

        Returns:
            The polynomial sum of coeffs[k] t^k.
        """
        return cls(BETTI_RING.from_dict({(k,): c for k, c in enumerate(coeffs)}))

    @property
    def poly(self: UniPoly) -> PolyElement:
        """The underlying sympy ring element."""
        return self._poly

    def coefficient(self: UniPoly, k: int) -> int:
        """
        Get the coefficient of t^k.

        Args:
            k: The power of t.

        Returns:
            The coefficient, zero if absent.
        """
        return int(self._poly.get((k,), 0))

    def degree(self: UniPoly) -> int:
        """
        Get the degree in t.

        Returns:
            The largest k with a nonzero coefficient, -1 for the zero polynomial.
        """
        return max((monom[0] for monom in self._poly.keys()), default=-1)

    def coefficients(self: UniPoly) -> List[int]:
        """
        Get the dense coefficient list.

        Returns:
            [c_0, ..., c_deg]; empty for the zero polynomial.
        """
        return [self.coefficient(k) for k in range(self.degree() + 1)]

    def evaluate(self: UniPoly, t: int) -> int:
        """
        Evaluate at an integer.

        Args:
            t: The value substituted for t.

        Returns:
            The integer value.
        """
        return sum(coeff * t**k for k, coeff in enumerate(self.coefficients()))

    def to_terms(self: UniPoly) -> List[List[int]]:
        """
        Get the JSON-friendly term list.

        Returns:
            [k, coeff] pairs in descending k.
        """
        return [[monom[0], coeff] for monom, coeff in _sorted_terms(self._poly)]

    def __add__(self: UniPoly, other: UniPoly) -> UniPoly:
        return UniPoly(self._poly + other._poly)

    def __mul__(self: UniPoly, other: UniPoly) -> UniPoly:
        return UniPoly(self._poly * other._poly)

    def __eq__(self: UniPoly, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._poly == other._poly

    def __hash__(self: UniPoly) -> int:
        return hash(tuple(_sorted_terms(self._poly)))

    def __repr__(self: UniPoly) -> str:
        return f"UniPoly({self})"

    def __str__(self: UniPoly) -> str:
        return format_terms(_sorted_terms(self._poly), ["t"])


class EPoly:
    """
    The virtual Hodge polynomial H_X(u, v) of a complex variety.

    The coefficient of u^p v^q is the signed virtual Hodge number h^{p,q};
    signs are stored exactly as the smooth projective definition builds them in,
    (-1)^{p+q} dim H^q(X, Omega^p). Values are immutable; every operation
    returns a new EPoly in canonical sparse form.
    """

    __slots__ = ("_poly",)

    def __init__(self: EPoly, poly: PolyElement = HODGE_RING.zero) -> None:
        """
        Initialize an EPoly.

        Args:
            poly: An element of ``HODGE_RING``. Use the classmethods to build
                EPoly values from plain integers.
        """
        self._poly = poly

    # constructors

    @classmethod
    def constant(cls: Type[EPoly], value: int) -> EPoly:
        """
        Build a constant E-polynomial.

        Args:
            value: The constant.

        Returns:
            The constant polynomial.
        """
        return cls(HODGE_RING(value))

    @classmethod
    def lefschetz(cls: Type[EPoly]) -> EPoly:
        """
        The class of the affine line.

        Returns:
            uv
        """
        return cls(_U * _V)

    @classmethod
    def from_terms(
        cls: Type[EPoly], terms: Iterable[Sequence[int]]
    ) -> EPoly:
        """
        Build an EPoly from (p, q, coefficient) triples.

        Repeated exponent pairs are summed and zero sums dropped.

        Args:
            terms: Triples [p, q, coeff], e.g. from `to_terms` or a JSON document.

        Returns:
            The E-polynomial.

        Raises:
            RangeError: if an exponent is negative or a triple is malformed.
        """
        acc: Dict[Monomial, int] = {}
        for term in terms:
            if len(term) != 3:
                raise RangeError(f"Expected [p, q, coeff], received {list(term)}")
            p, q, coeff = (int(x) for x in term)
            if p < 0 or q < 0:
                raise RangeError(f"Exponents must be nonnegative, received ({p},{q})")
            acc[(p, q)] = acc.get((p, q), 0) + coeff
        return cls(HODGE_RING.from_dict(acc))

    @classmethod
    def from_uv(cls: Type[EPoly], coeffs: Sequence[int]) -> EPoly:
        """
        Build a polynomial in uv from its coefficient list.

        Args:
            coeffs: coeffs[j] is the coefficient of (uv)^j.

        Returns:
            sum of coeffs[j] (uv)^j.
        """
        return cls(HODGE_RING.from_dict({(j, j): c for j, c in enumerate(coeffs)}))

    # ring structure

    @staticmethod
    def _coerce(value: Coercible) -> PolyElement:
        if isinstance(value, EPoly):
            return value._poly
        if isinstance(value, int):
            return HODGE_RING(value)
        raise TypeError(f"Cannot combine EPoly with {type(value).__name__}")

    def __add__(self: EPoly, other: Coercible) -> EPoly:
        return EPoly(self._poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self: EPoly, other: Coercible) -> EPoly:
        return EPoly(self._poly - self._coerce(other))

    def __rsub__(self: EPoly, other: Coercible) -> EPoly:
        return EPoly(self._coerce(other) - self._poly)

    def __neg__(self: EPoly) -> EPoly:
        return EPoly(-self._poly)

    def __mul__(self: EPoly, other: Coercible) -> EPoly:
        return EPoly(self._poly * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self: EPoly, k: int) -> EPoly:
        if k < 0:
            raise RangeError(f"Exponent must be nonnegative, received {k}")
        return EPoly(self._poly**k)

    def __eq__(self: EPoly, other: object) -> bool:
        if isinstance(other, int):
            other = EPoly.constant(other)
        if not isinstance(other, EPoly):
            return NotImplemented
        return self._poly == other._poly

    def __hash__(self: EPoly) -> int:
        return hash(tuple(self.terms()))

    def __bool__(self: EPoly) -> bool:
        return bool(self._poly)

    def __repr__(self: EPoly) -> str:
        return f"EPoly({self})"

    def __str__(self: EPoly) -> str:
        return format_terms(self.terms(), ["u", "v"])

    # inspection

    @property
    def poly(self: EPoly) -> PolyElement:
        """The underlying sympy ring element."""
        return self._poly

    def terms(self: EPoly) -> List[Tuple[Monomial, int]]:
        """
        Get the nonzero terms.

        Returns:
            ((p, q), coeff) pairs in lexicographic-descending exponent order.
        """
        return _sorted_terms(self._poly)

    def to_terms(self: EPoly) -> List[List[int]]:
        """
        Get the JSON-friendly term list accepted by `from_terms`.

        Returns:
            [p, q, coeff] triples in lexicographic-descending exponent order.
        """
        return [[p, q, coeff] for (p, q), coeff in self.terms()]

    def coefficient(self: EPoly, p: int, q: int) -> int:
        """
        Get the virtual Hodge number h^{p,q}.

        Args:
            p: The power of u.
            q: The power of v.

        Returns:
            The coefficient of u^p v^q, zero if absent.
        """
        return int(self._poly.get((p, q), 0))

    def total_degree(self: EPoly) -> int:
        """
        Get the largest p + q of a nonzero term.

        Returns:
            The total degree, -1 for the zero polynomial.
        """
        return max((p + q for (p, q), _ in self.terms()), default=-1)

    # specializations

    def poincare(self: EPoly) -> UniPoly:
        """
        Get the virtual Poincaré polynomial P(t) = H(-t, -t).

        Returns:
            The UniPoly whose coefficient of t^k is sum over p+q=k of
            (-1)^k h^{p,q}.
        """
        acc: Dict[Monomial, int] = {}
        for (p, q), coeff in self.terms():
            k = p + q
            acc[(k,)] = acc.get((k,), 0) + (-1) ** k * coeff
        return UniPoly(BETTI_RING.from_dict(acc))

    def betti_numbers(self: EPoly) -> List[Tuple[int, int]]:
        """
        Get every virtual Betti number up to the total degree.

        Returns:
            (k, beta^k) pairs for k = 0..total degree, zeros included.
        """
        poincare = self.poincare()
        return [(k, poincare.coefficient(k)) for k in range(self.total_degree() + 1)]

    def euler_char(self: EPoly) -> int:
        """
        Get the Euler characteristic H(1, 1).

        Returns:
            The sum of all coefficients.
        """
        return sum(coeff for _, coeff in self.terms())

    def diagonal_sum(self: EPoly, i: int) -> int:
        """
        Sum the virtual Hodge numbers on one diagonal of the Hodge diamond.

        Args:
            i: The offset p - q.

        Returns:
            sum of h^{p,q} over p - q = i.
        """
        return sum(coeff for (p, q), coeff in self.terms() if p - q == i)

    def parity_sums(self: EPoly) -> Tuple[int, int]:
        """
        Sum the even and the odd virtual Betti numbers.

        Returns:
            (b_even, b_odd); their difference is the Euler characteristic.
        """
        even = odd = 0
        for k, beta in self.betti_numbers():
            if k % 2:
                odd += beta
            else:
                even += beta
        return even, odd

    def hodge_table(self: EPoly) -> List[List[int]]:
        """
        Get the dense Hodge-number grid.

        Returns:
            rows[p][q] = h^{p,q} for 0 <= p, q <= max exponent; empty for zero.
        """
        size = max((max(p, q) for (p, q), _ in self.terms()), default=-1) + 1
        return [[self.coefficient(p, q) for q in range(size)] for p in range(size)]
