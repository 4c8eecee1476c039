import pytest

from invforms.action import make_action, weight_of_form, zero_weight
from invforms.errors import InhomogeneityError
from invforms.pieces import (
    graded_piece_basis,
    monomials_of_degree,
    monomials_with_weight,
    piece_keys,
)
from invforms.forms import PolyForm
from invforms.poly import Polynomial
from oracles import brute_weight0_monomials

Z2 = make_action(2, finite_orders=[2], weight_matrix=[[1, 1]])
TRIV = make_action(2)
X = Polynomial.variable(2, 0)
Y = Polynomial.variable(2, 1)
DX = PolyForm.dx(2, 0)
DY = PolyForm.dx(2, 1)


def test_monomials_of_degree():
    assert monomials_of_degree(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert monomials_of_degree(1, 3) == [(3,)]
    assert monomials_of_degree(3, 0) == [(0, 0, 0)]
    assert monomials_of_degree(2, -1) == []
    assert len(monomials_of_degree(3, 5)) == 21


def test_weight0_enumeration_matches_oracle():
    actions = [
        Z2,
        make_action(2, torus_rank=1, weight_matrix=[[1, -1]]),
        make_action(
            3, torus_rank=1, finite_orders=[3],
            weight_matrix=[[1, 1, -2], [1, 2, 0]],
        ),
    ]
    for act in actions:
        for d in range(7):
            got = monomials_with_weight(act, d, zero_weight(act))
            want = brute_weight0_monomials(
                act.weight_matrix, act.torus_rank, act.finite_orders, act.n, d
            )
            assert got == want


def test_piece_keys_order_and_content():
    keys = piece_keys(Z2, 1, 2, zero_weight(Z2))
    assert keys == [
        ((0,), (0, 1)),
        ((0,), (1, 0)),
        ((1,), (0, 1)),
        ((1,), (1, 0)),
    ]
    assert piece_keys(Z2, 1, 0, zero_weight(Z2)) == []
    assert piece_keys(Z2, 3, 5, zero_weight(Z2)) == []


def test_graded_piece_basis_full_piece():
    basis = graded_piece_basis([DX, DY], 1, zero_weight(TRIV), TRIV)
    assert len(basis) == 2
    for f in basis:
        assert f.degree == 1
        assert f.total_degrees() == {1}


def test_graded_piece_basis_derived_example():
    gens = [
        PolyForm.from_poly(X * X).d(),
        PolyForm.from_poly(X * Y).d(),
        PolyForm.from_poly(Y * Y).d(),
    ]
    basis = graded_piece_basis(gens, 2, zero_weight(Z2), Z2)
    assert len(basis) == 3
    for f in basis:
        assert weight_of_form(Z2, f).is_zero
        assert f.total_degrees() == {2}


def test_graded_piece_basis_below_form_degree_is_empty():
    assert graded_piece_basis([DX], 0, zero_weight(TRIV), TRIV) == []


def test_graded_piece_basis_rejects_inhomogeneous():
    with pytest.raises(InhomogeneityError):
        graded_piece_basis([DX + X * DX], 2, zero_weight(TRIV), TRIV)


def test_graded_piece_basis_membership():
    # pieces of the span of d(xy) over the polynomial ring
    gens = [PolyForm.from_poly(X * Y).d()]
    basis = graded_piece_basis(gens, 3, zero_weight(TRIV), TRIV)
    # degree-3 piece: x d(xy), y d(xy)
    assert len(basis) == 2
