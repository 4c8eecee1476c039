import random

import pytest

from invforms.errors import StructuralError
from invforms.forms import PolyForm, exterior_derivative, merge_sign, wedge
from invforms.poly import Polynomial
from oracles import random_form

N = 2
X = Polynomial.variable(N, 0)
Y = Polynomial.variable(N, 1)
DX = PolyForm.dx(N, 0)
DY = PolyForm.dx(N, 1)


def test_merge_sign():
    assert merge_sign((0,), (1,)) == (1, (0, 1))
    assert merge_sign((1,), (0,)) == (-1, (0, 1))
    assert merge_sign((0,), (0,)) == (0, ())
    assert merge_sign((), (0, 1)) == (1, (0, 1))
    assert merge_sign((0, 2), (1,)) == (-1, (0, 1, 2))


def test_wedge_examples():
    assert wedge(DX, DX).is_zero
    assert wedge(X * DY, Y * DX) == (-1) * (X * Y) * wedge(DX, DY)
    d_x2 = PolyForm.from_poly(X * X).d()
    d_xy = PolyForm.from_poly(X * Y).d()
    assert wedge(d_x2, d_xy) == (2 * X * X) * wedge(DX, DY)


def test_wedge_degree_overflow_is_zero():
    assert wedge(wedge(DX, DY), DX).is_zero
    assert wedge(wedge(DX, DY), wedge(DX, DY)).is_zero


def test_wedge_variable_count_mismatch():
    with pytest.raises(StructuralError):
        wedge(DX, PolyForm.dx(3, 0))


def test_exterior_derivative_examples():
    assert PolyForm.from_poly(X * Y).d() == Y * DX + X * DY
    assert (X * DY).d() == wedge(DX, DY)
    rng = random.Random(23)
    for _ in range(40):
        f = PolyForm.from_poly(
            Polynomial(
                3,
                {
                    tuple(rng.randint(0, 3) for _ in range(3)): rng.randint(-3, 3)
                    for _ in range(3)
                },
            )
        )
        assert f.d().d().is_zero


def test_anticommutativity_randomized():
    rng = random.Random(29)
    for _ in range(80):
        n = rng.randint(2, 4)
        k = rng.randint(0, n)
        l = rng.randint(0, n)
        a = random_form(rng, n, k, 4)
        b = random_form(rng, n, l, 4)
        sign = -1 if (k * l) % 2 else 1
        assert wedge(a, b) == sign * wedge(b, a)


def test_graded_leibniz_randomized():
    rng = random.Random(31)
    for _ in range(80):
        n = rng.randint(2, 4)
        k = rng.randint(0, n - 1)
        l = rng.randint(0, n - 1)
        a = random_form(rng, n, k, 4)
        b = random_form(rng, n, l, 4)
        lhs = wedge(a, b).d()
        rhs = wedge(a.d(), b) + (-1 if k % 2 else 1) * wedge(a, b.d())
        assert lhs == rhs


def test_dd_zero_randomized():
    rng = random.Random(37)
    for _ in range(80):
        n = rng.randint(2, 4)
        a = random_form(rng, n, rng.randint(0, n - 1), 5)
        assert exterior_derivative(exterior_derivative(a)).is_zero


def test_homogeneous_components():
    f = X * DX + DY
    assert f.homogeneous_component(2) == X * DX
    assert f.homogeneous_component(1) == DY
    assert f.homogeneous_component(5).is_zero
    assert not f.is_homogeneous
    assert (X * DX).is_homogeneous
    assert f.total_degrees() == {1, 2}


def test_component_validation():
    with pytest.raises(StructuralError):
        PolyForm(2, 1, {(0, 1): Polynomial.constant(2, 1)})
    with pytest.raises(StructuralError):
        PolyForm(2, 2, {(1, 0): Polynomial.constant(2, 1)})
    with pytest.raises(StructuralError):
        PolyForm(2, 1, {(2,): Polynomial.constant(2, 1)})


def test_str():
    assert str(Y * DX + X * DY) == "y*dx + x*dy"
    assert str(X * DY - Y * DX) == "-y*dx + x*dy"
    assert str(PolyForm.zero(2, 1)) == "0"
    assert str(wedge(DX, DY)) == "dx∧dy"
