from math import comb

import pytest

from hck.cli.sweep import SWEEP_HEADERS, sweep
from hck.utils.errors import RangeError


def test_sweep_rows_are_ordered():
    rows = sweep(range(0, 2), range(1, 3), range(1, 3))
    assert [(row.p, row.d, row.n) for row in rows] == [
        (0, 1, 1),
        (0, 1, 2),
        (0, 2, 1),
        (0, 2, 2),
        (1, 1, 1),
        (1, 1, 2),
        (1, 2, 1),
        (1, 2, 2),
    ]


def test_sweep_values():
    rows = sweep([0], range(1, 5), [2])
    assert [row.chi for row in rows] == [comb(d + 2, d) for d in range(1, 5)]
    assert all(row.recursion_ok is None for row in rows)
    assert sweep([1], [1], [3])[0].values() == [1, 1, 3, 6, 5, 16]


def test_parallel_sweep_matches_serial():
    args = (range(0, 3), range(1, 4), range(2, 4))
    assert sweep(*args, jobs=2) == sweep(*args, jobs=1)


def test_sweep_checks_recursion():
    rows = sweep(range(0, 3), range(1, 5), range(2, 5), check_recursion=True)
    assert all(row.recursion_ok is True for row in rows)


def test_sweep_row_to_dict():
    plain, checked = sweep([1], [2], [3]), sweep([1], [2], [3], check_recursion=True)
    assert list(plain[0].to_dict()) == SWEEP_HEADERS + ["constraints_ok"]
    assert list(checked[0].to_dict())[-1] == "recursion_ok"
    assert checked[0].to_dict()["recursion_ok"] is True
    assert plain[0].to_dict()["chi"] == 21


@pytest.mark.parametrize(
    "p_range,d_range,n_range",
    [
        ([], [1], [1]),
        ([0], range(1, 1), [1]),
        ([2], [1], [1]),
        ([0], [0, 1], [2]),
    ],
)
def test_sweep_range_errors(p_range, d_range, n_range):
    with pytest.raises(RangeError):
        sweep(p_range, d_range, n_range)


def test_sweep_checks_constraints_where_known():
    rows = [row for n in range(1, 5) for row in sweep(range(n + 1), range(1, 5), [n])]
    known = [row for row in rows if row.d in (1, 2) or row.p in (0, row.n - 1, row.n)]
    assert known
    assert all(row.constraints_ok is True for row in known)
    unknown = [row for row in rows if row not in known]
    assert (1, 3, 4) in [(row.p, row.d, row.n) for row in unknown]
    assert all(row.constraints_ok is None for row in unknown)
