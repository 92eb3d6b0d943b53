"""Cut-and-paste expressions for varieties and their E-polynomials."""

from hck.variety.builtins import BuiltinName, builtin, cone, nodal_cubic, surface_s
from hck.variety.expr import (
    AffineBundle,
    AtomExpr,
    BBDecomp,
    Blowup,
    Complement,
    Disjoint,
    Named,
    Product,
    ProjBundle,
    SymPower,
    VarietyExpr,
    evaluate,
)
from hck.variety.parser import MAX_NESTING, parse, tokenize

__all__ = [
    "MAX_NESTING",
    "AffineBundle",
    "AtomExpr",
    "BBDecomp",
    "Blowup",
    "BuiltinName",
    "Complement",
    "Disjoint",
    "Named",
    "Product",
    "ProjBundle",
    "SymPower",
    "VarietyExpr",
    "builtin",
    "cone",
    "evaluate",
    "nodal_cubic",
    "parse",
    "surface_s",
    "tokenize",
]
