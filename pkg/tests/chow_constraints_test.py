import pytest

from hck.chow import chow2_expr, check_chow_constraints, check_diagonal_hodge
from hck.epoly import Atom, EPoly, atom_epoly
from hck.utils.errors import RangeError


def test_chow2_passes():
    report = check_chow_constraints(chow2_expr(1, 3).evaluate(), 1, 2, 3)
    assert report.passed
    assert report.failures() == []
    assert [check.name for check in report.checks] == [
        "off-diagonal sums vanish",
        "diagonal sum equals chi",
        "h^{0,0} = 1",
        "h^{r,0} = h^{0,r} = 0 for r > 0",
    ]


@pytest.mark.parametrize("n", range(1, 6))
def test_chow2_grid(n):
    for p in range(n):
        a = chow2_expr(p, n).evaluate()
        assert check_chow_constraints(a, p, 2, n).passed, (p, n)
        assert check_diagonal_hodge(a)


def test_curve_fails_edge_constraint():
    report = check_chow_constraints(atom_epoly(Atom.curve(1)), 0, 1, 1)
    failed = {check.name: check for check in report.failures()}
    assert not report.passed
    edge = failed["h^{r,0} = h^{0,r} = 0 for r > 0"]
    assert (1, 0, -1) in edge.offending
    assert (0, 1, -1) in edge.offending
    off_diagonal = failed["off-diagonal sums vanish"]
    assert off_diagonal.offending == ((-1, -1), (1, -1))


def test_projective_plane_as_lines_in_plane():
    report = check_chow_constraints(atom_epoly(Atom.projective(2)), 1, 1, 2)
    assert report.passed
    chi = report.checks[1]
    assert (chi.expected, chi.actual) == (3, 3)


def test_wrong_euler_characteristic_is_reported():
    report = check_chow_constraints(atom_epoly(Atom.projective(2)), 1, 2, 2)
    assert [check.name for check in report.failures()] == ["diagonal sum equals chi"]
    assert report.failures()[0].expected == 6


def test_h00():
    report = check_chow_constraints(EPoly.from_uv([2, 1]), 0, 1, 2)
    assert "h^{0,0} = 1" in [check.name for check in report.failures()]


def test_report_to_dict():
    data = check_chow_constraints(atom_epoly(Atom.curve(1)), 0, 1, 1).to_dict()
    assert (data["p"], data["d"], data["n"]) == (0, 1, 1)
    assert data["passed"] is False
    assert data["checks"][3]["offending"] == [[1, 0, -1], [0, 1, -1]]


def test_invalid_index():
    with pytest.raises(RangeError):
        check_chow_constraints(EPoly.constant(1), 2, 1, 1)


def test_diagonal_hodge():
    assert check_diagonal_hodge(chow2_expr(2, 4).evaluate())
    assert not check_diagonal_hodge(atom_epoly(Atom.curve(1)))
    assert check_diagonal_hodge(atom_epoly(Atom.projective(5)))
