"""
Expression trees of varieties built by cut-and-paste, and their evaluation.

Every node evaluates to the E-polynomial of the variety it describes, using
only additivity over a closed subset and its complement, multiplicativity over
products, and the closed forms of the atoms. The geometric hypotheses of each
constructor (closedness, local triviality, the fixed-point decomposition of a
singularity-preserving action) are assertions of whoever builds the tree.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Tuple

from hck.epoly.atoms import Atom, atom_epoly
from hck.epoly.epoly import EPoly
from hck.series.sym_powers import sym_powers
from hck.utils.errors import RangeError


def _require_at_least(name: str, value: int, low: int) -> None:
    if value < low:
        raise RangeError(f"{name} must be >= {low}, received {value}")


class VarietyExpr(ABC):
    """A variety assembled from atoms and constructors."""

    @abstractmethod
    def evaluate(self: VarietyExpr) -> EPoly:
        """
        Compute the E-polynomial of the variety.

        Returns:
            The virtual Hodge polynomial.
        """
        pass

    @abstractmethod
    def to_text(self: VarietyExpr) -> str:
        """
        Render the expression in the input grammar.

        Returns:
            Text that `parse` turns back into an equivalent expression.
        """
        pass

    def __str__(self: VarietyExpr) -> str:
        return self.to_text()


@dataclass(frozen=True)
class AtomExpr(VarietyExpr):
    """One standard variety."""

    atom: Atom

    def evaluate(self: AtomExpr) -> EPoly:  # noqa: D102
        return atom_epoly(self.atom)

    def to_text(self: AtomExpr) -> str:  # noqa: D102
        return str(self.atom)


@dataclass(frozen=True)
class Product(VarietyExpr):
    """The product X x Y."""

    left: VarietyExpr
    right: VarietyExpr

    def evaluate(self: Product) -> EPoly:  # noqa: D102
        return self.left.evaluate() * self.right.evaluate()

    def to_text(self: Product) -> str:  # noqa: D102
        return f"prod({self.left.to_text()},{self.right.to_text()})"


@dataclass(frozen=True)
class Disjoint(VarietyExpr):
    """A disjoint union of locally closed pieces."""

    left: VarietyExpr
    right: VarietyExpr

    def evaluate(self: Disjoint) -> EPoly:  # noqa: D102
        return self.left.evaluate() + self.right.evaluate()

    def to_text(self: Disjoint) -> str:  # noqa: D102
        return f"disj({self.left.to_text()},{self.right.to_text()})"


@dataclass(frozen=True)
class Complement(VarietyExpr):
    """X minus a closed subvariety Y; closedness is not checked."""

    whole: VarietyExpr
    closed_part: VarietyExpr

    def evaluate(self: Complement) -> EPoly:  # noqa: D102
        return self.whole.evaluate() - self.closed_part.evaluate()

    def to_text(self: Complement) -> str:  # noqa: D102
        return f"diff({self.whole.to_text()},{self.closed_part.to_text()})"


@dataclass(frozen=True)
class AffineBundle(VarietyExpr):
    """A Zariski-locally trivial bundle with fiber A^m."""

    base: VarietyExpr
    fiber_dim: int

    def __post_init__(self: AffineBundle) -> None:
        """Validate the fiber dimension."""
        _require_at_least("affb fiber dimension", self.fiber_dim, 0)

    def evaluate(self: AffineBundle) -> EPoly:  # noqa: D102
        return self.base.evaluate() * EPoly.lefschetz() ** self.fiber_dim

    def to_text(self: AffineBundle) -> str:  # noqa: D102
        return f"affb({self.base.to_text()},{self.fiber_dim})"


@dataclass(frozen=True)
class ProjBundle(VarietyExpr):
    """A Zariski-locally trivial bundle with fiber P^r."""

    base: VarietyExpr
    fiber_proj_dim: int

    def __post_init__(self: ProjBundle) -> None:
        """Validate the fiber dimension."""
        _require_at_least("projb fiber dimension", self.fiber_proj_dim, 0)

    def evaluate(self: ProjBundle) -> EPoly:  # noqa: D102
        return self.base.evaluate() * atom_epoly(Atom.projective(self.fiber_proj_dim))

    def to_text(self: ProjBundle) -> str:  # noqa: D102
        return f"projb({self.base.to_text()},{self.fiber_proj_dim})"


@dataclass(frozen=True)
class Blowup(VarietyExpr):
    """
    The blowup of X along a smooth center Z of codimension c.

    The center is replaced by its exceptional divisor, a P^{c-1}-bundle over Z.
    """

    whole: VarietyExpr
    center: VarietyExpr
    codim: int

    def __post_init__(self: Blowup) -> None:
        """Validate the codimension."""
        _require_at_least("blowup codimension", self.codim, 1)

    def evaluate(self: Blowup) -> EPoly:  # noqa: D102
        fiber = atom_epoly(Atom.projective(self.codim - 1)) - 1
        return self.whole.evaluate() + self.center.evaluate() * fiber

    def to_text(self: Blowup) -> str:  # noqa: D102
        return (
            f"blowup({self.whole.to_text()},{self.center.to_text()},{self.codim})"
        )


@dataclass(frozen=True)
class SymPower(VarietyExpr):
    """The d-th symmetric product Sp^d X."""

    base: VarietyExpr
    d: int

    def __post_init__(self: SymPower) -> None:
        """Validate the power."""
        _require_at_least("sym power", self.d, 0)

    def evaluate(self: SymPower) -> EPoly:  # noqa: D102
        return sym_powers(self.base.evaluate(), self.d).entry(self.d)

    def to_text(self: SymPower) -> str:  # noqa: D102
        return f"sym({self.base.to_text()},{self.d})"


@dataclass(frozen=True)
class BBDecomp(VarietyExpr):
    """
    A variety cut into affine-space bundles over fixed components.

    Each entry is (F_j, m_j): the attracting set of the fixed component F_j is
    an A^{m_j}-bundle over it, so H_X = sum of H_{F_j} (uv)^{m_j}.
    """

    components: Tuple[Tuple[VarietyExpr, int], ...]

    def __post_init__(self: BBDecomp) -> None:
        """
        Validate the component list.

        Raises:
            RangeError: if the list is empty or a fiber dimension is negative.
        """
        if not self.components:
            raise RangeError("bb needs at least one fixed component")
        for _, fiber_dim in self.components:
            _require_at_least("bb fiber dimension", fiber_dim, 0)

    def evaluate(self: BBDecomp) -> EPoly:  # noqa: D102
        lefschetz = EPoly.lefschetz()
        total = EPoly()
        for fixed, fiber_dim in self.components:
            total = total + fixed.evaluate() * lefschetz**fiber_dim
        return total

    def to_text(self: BBDecomp) -> str:  # noqa: D102
        pairs = ",".join(f"({fixed.to_text()},{m})" for fixed, m in self.components)
        return f"bb({pairs})"


@dataclass(frozen=True)
class Named(VarietyExpr):
    """A builtin: a frozen tree that renders under its own name."""

    label: str
    expr: VarietyExpr

    def evaluate(self: Named) -> EPoly:  # noqa: D102
        return self.expr.evaluate()

    def to_text(self: Named) -> str:  # noqa: D102
        return self.label


def evaluate(e: VarietyExpr) -> EPoly:
    """
    Compute the E-polynomial of an expression.

    Args:
        e: A well-formed expression tree.

    Returns:
        The virtual Hodge polynomial.

    Raises:
        RangeError: if the tree is too deep to walk.
    """
    try:
        return e.evaluate()
    except RecursionError as err:
        raise RangeError("Expression tree is too deep to evaluate") from err
