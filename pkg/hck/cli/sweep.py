"""Tables of Chow-variety invariants over ranges of (p, d, n)."""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hck.chow.constraints import check_chow_constraints
from hck.chow.invariants import (
    chow_dim,
    chow_euler,
    chow_euler_rec,
    chow_known_epoly,
    kollar_bound,
)
from hck.utils.eprint import eprint
from hck.utils.errors import NoClosedFormError, RangeError

SWEEP_HEADERS = ["p", "d", "n", "chi", "dim", "kollar_bound"]


@dataclass(frozen=True)
class SweepRow:
    """The invariants of one C_{p,d}(P^n)."""

    p: int
    d: int
    n: int
    chi: int
    dim: int
    kollar_bound: int
    constraints_ok: Optional[bool] = None
    recursion_ok: Optional[bool] = None

    def values(self: SweepRow) -> List[Any]:
        """
        Get the row in `SWEEP_HEADERS` order.

        Returns:
            The six fixed columns.
        """
        return [self.p, self.d, self.n, self.chi, self.dim, self.kollar_bound]

    def to_dict(self: SweepRow) -> Dict[str, Any]:
        """
        Get the row as a JSON object.

        Returns:
            The fixed columns and ``constraints_ok``, plus ``recursion_ok``
            when it was checked.
        """
        out: Dict[str, Any] = dict(zip(SWEEP_HEADERS, self.values()))
        out["constraints_ok"] = self.constraints_ok
        if self.recursion_ok is not None:
            out["recursion_ok"] = self.recursion_ok
        return out


def _constraints_ok(p: int, d: int, n: int) -> Optional[bool]:
    try:
        a = chow_known_epoly(p, d, n)
    except NoClosedFormError:
        return None
    return check_chow_constraints(a, p, d, n).passed


# top level so worker processes can unpickle it
def _sweep_row(task: Tuple[int, int, int, bool]) -> SweepRow:
    p, d, n, check_recursion = task
    chi = chow_euler(p, d, n)
    return SweepRow(
        p=p,
        d=d,
        n=n,
        chi=chi,
        dim=chow_dim(p, d, n),
        kollar_bound=kollar_bound(p, d, n),
        constraints_ok=_constraints_ok(p, d, n),
        recursion_ok=(chow_euler_rec(p, d, n) == chi) if check_recursion else None,
    )


def sweep(
    p_range: Sequence[int],
    d_range: Sequence[int],
    n_range: Sequence[int],
    *,
    jobs: int = 1,
    check_recursion: bool = False,
) -> List[SweepRow]:
    """
    Compute invariants for every (p, d, n) in the given ranges.

    Args:
        p_range: Cycle dimensions.
        d_range: Cycle degrees, each at least 1.
        n_range: Ambient dimensions, each at least every p.
        jobs: Worker processes; 1 computes in this process.
        check_recursion: Whether to compare each Euler characteristic with
            the recursion.

    Returns:
        The rows in lexicographic (p, d, n) order.

    Raises:
        RangeError: if a range is empty or an index is invalid.
    """
    if not p_range or not d_range or not n_range:
        raise RangeError("sweep ranges must be nonempty")
    tasks = [
        (p, d, n, check_recursion)
        for p in p_range
        for d in d_range
        for n in n_range
    ]
    for p, d, n, _ in tasks:
        if p > n:
            raise RangeError(f"sweep needs p <= n, received p={p}, n={n}")
        if d < 1:
            raise RangeError(f"sweep needs d >= 1, received d={d}")

    start = time.monotonic()
    if jobs > 1:
        with Pool(jobs) as pool:
            rows = pool.map(_sweep_row, tasks)
    else:
        rows = [_sweep_row(task) for task in tasks]
    elapsed = time.monotonic() - start
    eprint(f"sweep: {len(rows)} rows in {elapsed:.3f}s, {jobs} job(s)")
    return rows
