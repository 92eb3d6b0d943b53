"""
Recursive-descent parser for the variety expression grammar.

    expr  := NAME | NAME '(' args ')'
    args  := arg (',' arg)*
    arg   := expr | INT | '(' expr ',' INT ')'

Which argument shapes a NAME accepts is fixed per name (see `_SIGNATURES`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple, Union

from hck.epoly.atoms import Atom
from hck.utils.errors import ExprSyntaxError, RangeError
from hck.variety.builtins import BuiltinName, builtin
from hck.variety.expr import (
    AffineBundle,
    AtomExpr,
    BBDecomp,
    Blowup,
    Complement,
    Disjoint,
    Product,
    ProjBundle,
    SymPower,
    VarietyExpr,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    | (?P<int>[0-9]+)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<punct>[(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    """One lexeme and where it starts."""

    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Split expression text into tokens, dropping whitespace.

    Args:
        text: The expression.

    Returns:
        The tokens, terminated by an ``end`` token.

    Raises:
        ExprSyntaxError: on a character outside the grammar.
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise ExprSyntaxError(f"Unexpected character {text[position]!r}", position)
        kind = match.lastgroup
        assert kind is not None  # for typing
        if kind != "ws":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


Arg = Union[VarietyExpr, int, Tuple[VarietyExpr, int]]

MAX_NESTING = 100

# "e" expression, "i" integer, "b" a run of (expr, int) pairs
_SIGNATURES: Dict[str, str] = {
    "pt": "",
    "point": "",
    "nodal_cubic": "",
    "A": "i",
    "T": "i",
    "P": "i",
    "G": "ii",
    "Curve": "i",
    "surfS": "i",
    "cone": "e",
    "prod": "ee",
    "disj": "ee",
    "diff": "ee",
    "affb": "ei",
    "projb": "ei",
    "blowup": "eei",
    "sym": "ei",
    "bb": "b",
}

_BUILDERS: Dict[str, Callable[..., VarietyExpr]] = {
    "pt": lambda: AtomExpr(Atom.point()),
    "point": lambda: AtomExpr(Atom.point()),
    "nodal_cubic": lambda: builtin(BuiltinName.NODAL_CUBIC),
    "A": lambda n: AtomExpr(Atom.affine(n)),
    "T": lambda n: AtomExpr(Atom.torus(n)),
    "P": lambda n: AtomExpr(Atom.projective(n)),
    "G": lambda k, n: AtomExpr(Atom.grassmannian(k, n)),
    "Curve": lambda g: AtomExpr(Atom.curve(g)),
    "surfS": lambda g: builtin(BuiltinName.SURFACE_S, [g]),
    "cone": lambda x: builtin(BuiltinName.CONE, [x]),
    "prod": Product,
    "disj": Disjoint,
    "diff": Complement,
    "affb": AffineBundle,
    "projb": ProjBundle,
    "blowup": Blowup,
    "sym": SymPower,
    "bb": lambda *pairs: BBDecomp(tuple(pairs)),
}


class _Parser:
    def __init__(self: _Parser, text: str) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        self.depth = 0

    @property
    def current(self: _Parser) -> Token:
        return self.tokens[self.index]

    def _advance(self: _Parser) -> Token:
        token = self.current
        self.index += 1
        return token

    def _expect(self: _Parser, text: str) -> Token:
        token = self.current
        if token.text != text:
            found = token.text or "end of input"
            raise ExprSyntaxError(f"Expected {text!r}, found {found!r}", token.position)
        return self._advance()

    def parse(self: _Parser) -> VarietyExpr:
        expr = self._expr()
        token = self.current
        if token.kind != "end":
            raise ExprSyntaxError(f"Unexpected {token.text!r}", token.position)
        return expr

    def _int(self: _Parser) -> int:
        token = self.current
        if token.kind != "int":
            raise ExprSyntaxError(
                f"Expected an integer, found {token.text or 'end of input'!r}",
                token.position,
            )
        self._advance()
        return int(token.text)

    def _pair(self: _Parser) -> Tuple[VarietyExpr, int]:
        self._expect("(")
        expr = self._expr()
        self._expect(",")
        m = self._int()
        self._expect(")")
        return expr, m

    def _expr(self: _Parser) -> VarietyExpr:
        if self.depth == MAX_NESTING:
            raise ExprSyntaxError(
                f"Expression nests deeper than {MAX_NESTING} levels",
                self.current.position,
            )
        self.depth += 1
        expr = self._node()
        self.depth -= 1
        return expr

    def _node(self: _Parser) -> VarietyExpr:
        token = self.current
        if token.kind != "name":
            raise ExprSyntaxError(
                f"Expected a variety, found {token.text or 'end of input'!r}",
                token.position,
            )
        if token.text not in _SIGNATURES:
            raise ExprSyntaxError(f"Unknown name {token.text!r}", token.position)
        self._advance()
        signature = _SIGNATURES[token.text]

        args: List[Arg] = []
        if signature:
            self._expect("(")
            if signature == "b":
                args.append(self._pair())
                while self.current.text == ",":
                    self._advance()
                    args.append(self._pair())
            else:
                for i, shape in enumerate(signature):
                    if i:
                        self._expect(",")
                    args.append(self._int() if shape == "i" else self._expr())
            self._expect(")")

        try:
            return _BUILDERS[token.text](*args)
        except RangeError as e:
            raise RangeError(f"{e} at position {token.position}") from e


def parse(text: str) -> VarietyExpr:
    """
    Parse a variety expression.

    Whitespace is ignored anywhere between tokens.

    Args:
        text: The expression, e.g. ``"blowup(prod(P(1),Curve(2)),pt,2)"``.

    Returns:
        The expression tree.

    Raises:
        ExprSyntaxError: if the text does not match the grammar or nests
            deeper than `MAX_NESTING` levels.
        RangeError: if an integer parameter is out of range.
    """
    return _Parser(text).parse()
