"""Worked examples shipped as frozen expression trees."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from hck.epoly.atoms import Atom
from hck.utils.errors import RangeError
from hck.variety.expr import (
    AtomExpr,
    BBDecomp,
    Blowup,
    Complement,
    Disjoint,
    Named,
    Product,
    VarietyExpr,
)


class BuiltinName(Enum):
    """Builtin names, valued by their grammar spelling."""

    NODAL_CUBIC = "nodal_cubic"
    SURFACE_S = "surfS"
    CONE = "cone"


def _point() -> VarietyExpr:
    return AtomExpr(Atom.point())


def nodal_cubic() -> VarietyExpr:
    """
    A plane cubic with one node.

    Its normalization is P^1 with two points glued, so the smooth part is a
    copy of C* and the node adds one point.

    Returns:
        disj(T(1),pt), rendered as ``nodal_cubic``.
    """
    return Named("nodal_cubic", Disjoint(AtomExpr(Atom.torus(1)), _point()))


def surface_s(g: int) -> VarietyExpr:
    """
    The surface obtained from P^1 x C by blowing up two points, removing the
    proper transforms of two fibers C x {x_i} and gluing in two points.

    Its only C*-fixed points are isolated, yet its virtual Poincare polynomial
    has odd terms for g >= 1.

    Args:
        g: Genus of the curve C, at least 1.

    Returns:
        The assembly tree, rendered as ``surfS(g)``.

    Raises:
        RangeError: if g < 1.
    """
    if g < 1:
        raise RangeError(f"surfS needs genus >= 1, received {g}")
    curve = AtomExpr(Atom.curve(g))
    point = _point()
    ruled = Product(AtomExpr(Atom.projective(1)), curve)
    blown_up = Blowup(Blowup(ruled, point, 2), point, 2)
    opened = Complement(Complement(blown_up, curve), curve)
    return Named(f"surfS({g})", Disjoint(opened, Disjoint(point, point)))


def cone(base: VarietyExpr) -> VarietyExpr:
    """
    The projective cone over a variety, under the action fixing the vertex
    and a copy of the base at infinity.

    Args:
        base: The variety V the cone is built over.

    Returns:
        bb((V,1),(pt,0)), rendered as ``cone(V)``.
    """
    return Named(f"cone({base.to_text()})", BBDecomp(((base, 1), (_point(), 0))))


def builtin(name: BuiltinName, args: Sequence[object] = ()) -> VarietyExpr:
    """
    Build a builtin by name.

    Args:
        name: Which builtin.
        args: Its arguments: none, the genus, or the base expression.

    Returns:
        The builtin expression tree.

    Raises:
        RangeError: if the arguments do not fit the builtin.
    """
    if name == BuiltinName.NODAL_CUBIC:
        if args:
            raise RangeError("nodal_cubic takes no arguments")
        return nodal_cubic()
    if len(args) != 1:
        raise RangeError(f"{name.value} takes exactly one argument")
    (arg,) = args
    if name == BuiltinName.SURFACE_S:
        if not isinstance(arg, int):
            raise RangeError("surfS takes an integer genus")
        return surface_s(arg)
    if not isinstance(arg, VarietyExpr):
        raise RangeError("cone takes an expression")
    return cone(arg)
