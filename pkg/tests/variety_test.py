import random

import pytest

from hck.epoly import Atom, EPoly, UniPoly, atom_epoly, odd_betti_violations
from hck.utils.errors import RangeError
from hck.variety import (
    AffineBundle,
    AtomExpr,
    BBDecomp,
    Blowup,
    BuiltinName,
    Complement,
    Disjoint,
    Product,
    ProjBundle,
    SymPower,
    builtin,
    cone,
    evaluate,
    nodal_cubic,
    parse,
    surface_s,
)

L = EPoly.lefschetz()
PT = AtomExpr(Atom.point())


def projective(n):
    return AtomExpr(Atom.projective(n))


def surface_s_epoly(g):
    return EPoly.from_terms(
        [
            (0, 0, 1),
            (1, 0, g),
            (0, 1, g),
            (1, 1, 2),
            (2, 1, -g),
            (1, 2, -g),
            (2, 2, 1),
        ]
    )


def test_nodal_cubic():
    a = evaluate(nodal_cubic())
    assert a == L
    assert str(a.poincare()) == "t^2"
    assert a.poincare().coefficient(1) == 0
    assert str(nodal_cubic()) == "nodal_cubic"


@pytest.mark.parametrize("g", [1, 2, 3])
def test_surface_s(g):
    a = evaluate(surface_s(g))
    assert a == surface_s_epoly(g)
    poincare = a.poincare()
    assert poincare == UniPoly.from_coefficients([1, -2 * g, 2, 2 * g, 1])
    assert poincare.coefficient(1) == -2 * g
    assert a.euler_char() == 4
    for i in (-2, -1, 1, 2):
        assert a.diagonal_sum(i) == 0


def test_surface_s_needs_positive_genus():
    with pytest.raises(RangeError):
        surface_s(0)


@pytest.mark.parametrize("n", range(7))
def test_bb_decomposition_of_projective_space(n):
    bb = BBDecomp(tuple((PT, j) for j in range(n + 1)))
    assert evaluate(bb) == atom_epoly(Atom.projective(n))
    poincare = evaluate(bb).poincare()
    assert all(c == 0 for c in poincare.coefficients()[1::2])


def test_cone():
    assert evaluate(cone(projective(1))) == EPoly.from_uv([1, 1, 1])
    assert evaluate(builtin(BuiltinName.CONE, [projective(1)])) == EPoly.from_uv(
        [1, 1, 1]
    )
    assert str(cone(projective(1))) == "cone(P(1))"


def test_builtin_arguments():
    assert evaluate(builtin(BuiltinName.NODAL_CUBIC)) == L
    assert evaluate(builtin(BuiltinName.SURFACE_S, [2])) == surface_s_epoly(2)
    with pytest.raises(RangeError):
        builtin(BuiltinName.NODAL_CUBIC, [1])
    with pytest.raises(RangeError):
        builtin(BuiltinName.SURFACE_S, [])
    with pytest.raises(RangeError):
        builtin(BuiltinName.CONE, [3])


def test_constructors():
    x = Product(projective(2), AtomExpr(Atom.curve(2)))
    z = AtomExpr(Atom.curve(1))
    assert evaluate(Blowup(x, z, 3)) - evaluate(x) == evaluate(z) * (L + L**2)
    affine = AtomExpr(Atom.affine(2))
    assert evaluate(AffineBundle(x, 2)) == evaluate(Product(x, affine))
    assert evaluate(ProjBundle(z, 2)) == evaluate(z) * EPoly.from_uv([1, 1, 1])
    assert evaluate(Complement(projective(2), projective(1))) == L**2
    assert evaluate(SymPower(projective(1), 3)) == atom_epoly(Atom.projective(3))


def test_constructor_validation():
    with pytest.raises(RangeError):
        Blowup(PT, PT, 0)
    with pytest.raises(RangeError):
        AffineBundle(PT, -1)
    with pytest.raises(RangeError):
        ProjBundle(PT, -1)
    with pytest.raises(RangeError):
        SymPower(PT, -1)
    with pytest.raises(RangeError):
        BBDecomp(())
    with pytest.raises(RangeError):
        BBDecomp(((PT, -1),))


def random_expr(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(
            [
                PT,
                projective(rng.randint(0, 3)),
                AtomExpr(Atom.torus(rng.randint(0, 2))),
                AtomExpr(Atom.curve(rng.randint(0, 2))),
                AtomExpr(Atom.grassmannian(2, 4)),
            ]
        )
    left, right = random_expr(rng, depth - 1), random_expr(rng, depth - 1)
    return rng.choice([Product, Disjoint, Complement])(left, right)


@pytest.mark.parametrize("seed", range(15))
def test_disjoint_and_product_laws(seed):
    rng = random.Random(seed)
    a, b = random_expr(rng, 3), random_expr(rng, 3)
    assert evaluate(Disjoint(a, b)) == evaluate(a) + evaluate(b)
    assert evaluate(Product(a, b)) == evaluate(a) * evaluate(b)
    assert evaluate(parse(str(a))) == evaluate(a)


@pytest.mark.parametrize("g,n", [(1, 1), (2, 2), (3, 3)])
def test_products_with_projective_space_keep_odd_classes(g, n):
    a = evaluate(Product(surface_s(g), projective(n)))
    assert a.poincare().coefficient(1) == -2 * g
    assert odd_betti_violations(a, 0)


@pytest.mark.parametrize("k", range(1, 5))
def test_torus_plus_points(k):
    expr = AtomExpr(Atom.torus(1))
    for _ in range(k):
        expr = Disjoint(expr, PT)
    a = evaluate(expr)
    assert a == L + (k - 1)
    assert odd_betti_violations(a, 0) == []


def test_rendering_round_trips():
    for expr in [
        surface_s(2),
        cone(Product(projective(1), projective(1))),
        BBDecomp(((AtomExpr(Atom.curve(1)), 1), (PT, 0))),
        Blowup(Product(projective(1), AtomExpr(Atom.curve(2))), PT, 2),
        AffineBundle(SymPower(projective(2), 2), 1),
    ]:
        assert evaluate(parse(str(expr))) == evaluate(expr)


def test_evaluate_rejects_trees_too_deep_to_walk():
    point = AtomExpr(Atom.point())
    tree = point
    for _ in range(5000):
        tree = Product(tree, point)
    with pytest.raises(RangeError, match="too deep"):
        evaluate(tree)
