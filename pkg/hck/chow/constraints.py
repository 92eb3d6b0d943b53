"""Constraints every E-polynomial of a Chow variety C_{p,d}(P^n) satisfies."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from hck.chow.invariants import ChowIndex, chow_euler
from hck.epoly.epoly import EPoly


@dataclass(frozen=True)
class ConstraintCheck:
    """The outcome of one constraint."""

    name: str
    passed: bool
    offending: Tuple[Tuple[int, ...], ...] = ()
    expected: Optional[int] = None
    actual: Optional[int] = None

    def to_dict(self: ConstraintCheck) -> Dict[str, Any]:
        """
        Get a JSON-friendly view of the check.

        Returns:
            The fields as plain Python values.
        """
        return {
            "name": self.name,
            "passed": self.passed,
            "offending": [list(entry) for entry in self.offending],
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class ConstraintReport:
    """All constraint outcomes for one E-polynomial and Chow index."""

    index: ChowIndex
    checks: List[ConstraintCheck] = field(default_factory=list)

    @property
    def passed(self: ConstraintReport) -> bool:
        """Whether every constraint holds."""
        return all(check.passed for check in self.checks)

    def failures(self: ConstraintReport) -> List[ConstraintCheck]:
        """
        Get the failing checks.

        Returns:
            The checks that did not pass, in report order.
        """
        return [check for check in self.checks if not check.passed]

    def to_dict(self: ConstraintReport) -> Dict[str, Any]:
        """
        Get a JSON-friendly view of the report.

        Returns:
            The index, the overall verdict and each check.
        """
        return {
            "p": self.index.p,
            "d": self.index.d,
            "n": self.index.n,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def check_chow_constraints(a: EPoly, p: int, d: int, n: int) -> ConstraintReport:
    """
    Check an E-polynomial against the equations a Chow variety obeys.

    The equations are: every off-diagonal sum of Hodge numbers (p - q = i,
    i != 0) vanishes; the diagonal sum equals the Euler characteristic of
    C_{p,d}(P^n); h^{0,0} = 1; and h^{r,0} = h^{0,r} = 0 for r > 0. Each is
    reported independently.

    Args:
        a: The candidate E-polynomial.
        p: Cycle dimension.
        d: Cycle degree.
        n: Ambient dimension.

    Returns:
        The report, one check per equation.

    Raises:
        RangeError: if the index is invalid.
    """
    index = ChowIndex(p, d, n)
    offsets = sorted({r - s for (r, s), _ in a.terms() if r != s})
    off_diagonal = tuple(
        (i, a.diagonal_sum(i)) for i in offsets if a.diagonal_sum(i) != 0
    )
    expected_chi = chow_euler(p, d, n)
    diagonal = a.diagonal_sum(0)
    edges = tuple(
        (r, s, coeff)
        for (r, s), coeff in a.terms()
        if (r == 0) != (s == 0)
    )
    h00 = a.coefficient(0, 0)
    checks = [
        ConstraintCheck("off-diagonal sums vanish", not off_diagonal, off_diagonal),
        ConstraintCheck(
            "diagonal sum equals chi",
            diagonal == expected_chi,
            expected=expected_chi,
            actual=diagonal,
        ),
        ConstraintCheck("h^{0,0} = 1", h00 == 1, expected=1, actual=h00),
        ConstraintCheck("h^{r,0} = h^{0,r} = 0 for r > 0", not edges, edges),
    ]
    return ConstraintReport(index, checks)


def check_diagonal_hodge(a: EPoly) -> bool:
    """
    Check that all Hodge numbers off the diagonal vanish.

    Every C_{p,d}(P^n) is expected to have this shape.

    Args:
        a: The E-polynomial.

    Returns:
        True iff h^{r,s} = 0 for all r != s.
    """
    return all(r == s for (r, s), _ in a.terms())
