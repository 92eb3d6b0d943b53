from math import comb

import pytest

from hck.chow import (
    COMPONENT_COUNTS_C1D_P3,
    ChowIndex,
    binom,
    chow2_expr,
    chow_dim,
    chow_dim_curves,
    chow_euler,
    chow_euler_rec,
    chow_known_epoly,
    chow_known_expr,
    kollar_bound,
    v,
)
from hck.epoly import Atom, atom_epoly
from hck.series import sym_powers
from hck.utils.errors import NoClosedFormError, RangeError
from hck.variety import AtomExpr, SymPower

GRID = [(p, d, n) for n in range(7) for p in range(n + 1) for d in range(9)]


def test_v():
    assert v(0, 1) == 2
    assert v(1, 3) == 6
    assert v(1, 2) == 3
    with pytest.raises(RangeError):
        v(2, 1)


def test_chow_euler():
    assert chow_euler(1, 2, 2) == 6
    assert chow_euler(1, 2, 3) == 21
    assert chow_euler(0, 2, 1) == 3
    for n in range(5):
        assert chow_euler(n, 0, n + 1) == 1
        for d in range(6):
            assert chow_euler(0, d, n) == comb(n + d, d)


def test_chow_euler_rec():
    assert chow_euler_rec(1, 2, 2) == 6
    assert chow_euler_rec(3, 5, 3) == 1
    assert chow_euler_rec(1, 3, 3) == 56


def test_closed_form_matches_recursion_on_grid():
    for p, d, n in GRID:
        assert chow_euler(p, d, n) == chow_euler_rec(p, d, n), (p, d, n)


def test_recursion_base_uses_symmetric_powers():
    for n in range(1, 5):
        powers = sym_powers(atom_epoly(Atom.projective(n)), 6)
        for d in range(7):
            assert chow_euler_rec(0, d, n) == powers.entry(d).euler_char()


def test_chow_euler_symmetry():
    for p, d, n in GRID:
        if p <= n - 1:
            assert chow_euler(p, d, n) == chow_euler(n - p - 1, d, n)


@pytest.mark.parametrize(
    "index", [(-1, 1, 2), (3, 1, 2), (0, -1, 2), (0, 1, -1)]
)
def test_invalid_indices(index):
    with pytest.raises(RangeError):
        ChowIndex(*index)
    with pytest.raises(RangeError):
        chow_euler(*index)
    with pytest.raises(RangeError):
        chow_euler_rec(*index)


def test_chow_index_str():
    assert str(ChowIndex(1, 2, 3)) == "C_{1,2}(P^3)"


def test_chow_dim():
    assert chow_dim(1, 4, 3) == 17
    # the two published branches overshoot dim G(2,4) = 4 at d = 1
    assert chow_dim(1, 1, 3) == 5
    assert chow_dim(3, 2, 3) == 0
    for n in range(2, 6):
        for d in range(2, 7):
            assert chow_dim(n - 1, d, n) == comb(d + n, n) - 1
    with pytest.raises(RangeError):
        chow_dim(1, 0, 3)


def test_chow_dim_curves():
    assert chow_dim_curves(4, 3) == 17
    assert chow_dim_curves(1, 3) == 5
    for d in range(1, 21):
        for n in range(2, 11):
            assert chow_dim_curves(d, n) == chow_dim(1, d, n)
    with pytest.raises(RangeError):
        chow_dim_curves(1, 1)
    with pytest.raises(RangeError):
        chow_dim_curves(0, 3)


def test_kollar_bound():
    assert kollar_bound(1, 2, 3) == 56**5 == 550731776
    for p in range(5):
        for n in range(p, 7):
            assert kollar_bound(p, 1, n) == (n + 1) ** (p + 1)
    for n in range(4):
        for d in range(1, 5):
            assert kollar_bound(0, d, n) == comb(n * d + d, n) ** d


def test_kollar_bound_monotone_in_d():
    for n in range(1, 5):
        for p in range(n + 1):
            bounds = [kollar_bound(p, d, n) for d in range(1, 6)]
            assert all(b >= 1 for b in bounds)
            assert bounds == sorted(bounds)


def test_kollar_bound_dominates_component_counts():
    for d, count in enumerate(COMPONENT_COUNTS_C1D_P3, start=1):
        assert kollar_bound(1, d, 3) >= count


def test_binom():
    assert binom(3, -1) == 0
    assert binom(2, 5) == 0
    assert binom(6, 2) == 15


def test_chow2_expr():
    assert chow2_expr(0, 1).evaluate().poincare().coefficients() == [1, 0, 1, 0, 1]
    assert chow2_expr(1, 3).evaluate().euler_char() == 21
    for n in range(1, 7):
        for p in range(n):
            a = chow2_expr(p, n).evaluate()
            assert a.euler_char() == chow_euler(p, 2, n)
            if n <= 5:
                assert all(c == 0 for c in a.poincare().coefficients()[1::2])
    with pytest.raises(RangeError):
        chow2_expr(2, 2)


def test_chow_known_expr():
    assert chow_known_expr(1, 3, 2) == AtomExpr(Atom.projective(9))
    assert chow_known_expr(1, 1, 3) == AtomExpr(Atom.grassmannian(2, 4))
    assert chow_known_expr(0, 3, 2) == SymPower(AtomExpr(Atom.projective(2)), 3)
    assert chow_known_expr(2, 4, 2) == AtomExpr(Atom.point())
    assert chow_known_expr(1, 2, 4) == chow2_expr(1, 4)
    with pytest.raises(NoClosedFormError):
        chow_known_expr(1, 3, 3)


def test_known_forms_agree_with_euler_characteristic():
    checked = 0
    for p, d, n in GRID:
        if d > 5:
            continue
        try:
            a = chow_known_epoly(p, d, n)
        except NoClosedFormError:
            continue
        assert a.euler_char() == chow_euler(p, d, n), (p, d, n)
        checked += 1
    assert checked > 100
