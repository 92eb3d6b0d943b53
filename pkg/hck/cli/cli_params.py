"""Parsing and storage of command-line args for the hodge-chow tool."""

from __future__ import annotations

import argparse
import re
from typing import List, Optional, Sequence

FORMATS = ("text", "json", "csv")

_RANGE_RE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> range:
    """
    Parse an inclusive integer range written ``a`` or ``a..b``.

    Args:
        text: The range text.

    Returns:
        The range a..b, inclusive.

    Raises:
        ArgumentTypeError: if the text is malformed or the range is empty.
    """
    match = _RANGE_RE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}, expected a or a..b")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if high < low:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(low, high + 1)


def parse_functional(text: str) -> List[int]:
    """
    Parse a comma-separated list of integers.

    Args:
        text: e.g. ``"1,2"``.

    Returns:
        The integers.

    Raises:
        ArgumentTypeError: if an entry is not an integer.
    """
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid degree functional {text!r}, expected c1,c2,..."
        )


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _output_args_helper(parser: argparse.ArgumentParser, *, top_level: bool) -> None:
    # options given after the verb only override what was given before it
    default = (lambda value: value) if top_level else (lambda _: argparse.SUPPRESS)

    parser.add_argument(
        "--format",
        "-f",
        choices=FORMATS,
        default=default("text"),
        help=("Output format of the result document (default: text)"),
    )

    parser.add_argument(
        "--quiet",
        "-q",
        action="store_true",
        default=default(False),
        help=("Disable printing diagnostics (eprint disabled)"),
    )

    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        default=default(False),
        help=("Enable printing diagnostics (eprint enabled)"),
    )


def _index_args_helper(parser: argparse.ArgumentParser, names: str) -> None:
    help_text = {
        "p": "cycle dimension p",
        "d": "cycle degree d",
        "n": "ambient projective dimension n",
    }
    for name in names:
        parser.add_argument(
            f"--{name}", type=int, required=True, help=(help_text[name])
        )


def _expr_args_helper(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "expr",
        help=("variety expression, e.g. 'blowup(prod(P(1),Curve(2)),pt,2)'"),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodge-chow",
        description=(
            "Virtual Hodge polynomials of cut-and-paste varieties and invariants "
            "of Chow varieties"
        ),
    )
    _output_args_helper(parser, top_level=True)

    common = argparse.ArgumentParser(add_help=False)
    _output_args_helper(common, top_level=False)

    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    epoly = verbs.add_parser(
        "epoly", parents=[common], help=("E-polynomial of an expression")
    )
    _expr_args_helper(epoly)
    selector = epoly.add_mutually_exclusive_group()
    selector.add_argument(
        "--poincare",
        action="store_true",
        help=("print the virtual Poincare polynomial H(-t,-t) instead"),
    )
    selector.add_argument(
        "--euler",
        action="store_true",
        help=("print the Euler characteristic H(1,1) instead"),
    )
    selector.add_argument(
        "--hodge",
        nargs=2,
        type=int,
        metavar=("P", "Q"),
        help=("print the virtual Hodge number h^{P,Q} instead"),
    )
    epoly.add_argument(
        "--parity",
        action="store_true",
        help=("also report the even and odd virtual Betti sums"),
    )
    epoly.add_argument(
        "--fixed-dim",
        type=int,
        metavar="K",
        help=(
            "also report the Hodge numbers and odd Betti numbers a C*-action with "
            "a K-dimensional fixed locus forces to vanish but that do not"
        ),
    )

    poincare = verbs.add_parser(
        "poincare", parents=[common], help=("virtual Poincare polynomial")
    )
    _expr_args_helper(poincare)

    betti = verbs.add_parser(
        "betti", parents=[common], help=("virtual Betti numbers")
    )
    _expr_args_helper(betti)

    chow_euler = verbs.add_parser(
        "chow-euler",
        parents=[common],
        help=("Euler characteristic of C_{p,d}(P^n)"),
    )
    _index_args_helper(chow_euler, "pdn")
    chow_euler.add_argument(
        "--check-recursion",
        action="store_true",
        help=("recompute by the recursion in (p, n) and compare"),
    )

    chow_dim = verbs.add_parser(
        "chow-dim", parents=[common], help=("dimension of C_{p,d}(P^n)")
    )
    _index_args_helper(chow_dim, "pdn")

    chow_bound = verbs.add_parser(
        "chow-bound",
        parents=[common],
        help=("upper bound on the number of components of C_{p,d}(P^n)"),
    )
    _index_args_helper(chow_bound, "pdn")

    chow2 = verbs.add_parser(
        "chow2", parents=[common], help=("E-polynomial of C_{p,2}(P^n)")
    )
    _index_args_helper(chow2, "pn")
    chow2.add_argument(
        "--check-constraints",
        action="store_true",
        help=("check the Hodge-number equations of Chow varieties"),
    )

    chow_hodge = verbs.add_parser(
        "chow-hodge",
        parents=[common],
        help=("E-polynomial of C_{p,d}(P^n) where a closed form is known"),
    )
    _index_args_helper(chow_hodge, "pdn")
    chow_hodge.add_argument(
        "--check-constraints",
        action="store_true",
        help=("check the Hodge-number equations of Chow varieties"),
    )

    sym = verbs.add_parser(
        "sym", parents=[common], help=("E-polynomials of symmetric powers")
    )
    _expr_args_helper(sym)
    sym.add_argument(
        "--dmax", type=int, required=True, help=("largest symmetric power")
    )

    toric = verbs.add_parser(
        "toric",
        parents=[common],
        help=("Euler-Chow series of a smooth projective toric variety"),
    )
    toric.add_argument("--fan", required=True, help=("path to the JSON fan file"))
    toric.add_argument("--p", type=int, required=True, help=("cycle dimension p"))
    toric.add_argument(
        "--bound", type=int, required=True, help=("largest degree kept")
    )
    toric.add_argument(
        "--degree-functional",
        type=parse_functional,
        metavar="C1,C2,...",
        help=(
            "weights on the class coordinates used as degree "
            "(default: sum of coordinates)"
        ),
    )

    sweep = verbs.add_parser(
        "sweep",
        parents=[common],
        help=("table of Chow invariants over ranges of p, d, n"),
    )
    for name in "pdn":
        sweep.add_argument(
            f"--{name}",
            type=parse_range,
            required=True,
            metavar="A[..B]",
            help=(f"inclusive range of {name}"),
        )
    sweep.add_argument(
        "--jobs",
        "-j",
        type=_positive_int,
        default=1,
        help=("number of worker processes (default: 1)"),
    )
    sweep.add_argument(
        "--check-recursion",
        action="store_true",
        help=("add a column comparing the closed form with the recursion"),
    )

    return parser


class CliParams:
    """A class that parses and stores the command-line arguments of one run."""

    def __init__(self: CliParams, argv: Optional[Sequence[str]] = None) -> None:
        """
        Process command-line args.

        Args:
            argv: The arguments after the program name; defaults to sys.argv.

        Raises:
            SystemExit: with status 2 on a usage error, as argparse does.
        """
        parser = _build_parser()
        args = parser.parse_args(argv)
        self.args = args
        self.verb: str = args.verb
        self.format: str = args.format
        self.quiet: bool = args.quiet
        self.verbose: bool = args.verbose

        if self.verbose and self.quiet:
            parser.error(
                "Cannot specify both verbose and quiet options at the same time"
            )

        if self.verb == "sweep":
            self._check_sweep(parser)
        if self.verb == "sym" and args.dmax < 0:
            parser.error(f"--dmax must be nonnegative, received {args.dmax}")

    def _check_sweep(self: CliParams, parser: argparse.ArgumentParser) -> None:
        args = self.args
        if args.p[-1] > args.n[0]:
            parser.error(
                f"sweep needs p <= n for every row, received p up to {args.p[-1]} "
                f"and n from {args.n[0]}"
            )
        if args.d[0] < 1:
            parser.error("sweep needs d >= 1")
