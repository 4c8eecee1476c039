import pytest

from invforms.action import make_action, weight_of_form, zero_weight
from invforms.errors import PreconditionError
from invforms.euler import is_horizontal
from invforms.forms import PolyForm
from invforms.invariants import (
    GradedSubmodule,
    hilbert_basis,
    hilbert_series_of,
    invariant_form_generators,
    invariant_ring_series,
    quotient_dimension,
)
from invforms.linalg import Echelon
from invforms.pieces import form_to_vector, monomials_with_weight, piece_keys
from invforms.poly import Polynomial
from oracles import brute_weight0_monomials

Z2 = make_action(2, finite_orders=[2], weight_matrix=[[1, 1]])
Z3 = make_action(2, finite_orders=[3], weight_matrix=[[1, 1]])
T = make_action(2, torus_rank=1, weight_matrix=[[1, -1]])
X = Polynomial.variable(2, 0)
Y = Polynomial.variable(2, 1)


def test_hilbert_basis_examples():
    hb = hilbert_basis(Z2, 4)
    assert set(hb.generators) == {(2, 0), (1, 1), (0, 2)}
    assert hb.complete
    hb3 = hilbert_basis(Z3, 4)
    assert set(hb3.generators) == {(3, 0), (2, 1), (1, 2), (0, 3)}
    assert hb3.complete
    hbt = hilbert_basis(T, 4)
    assert hbt.generators == ((1, 1),)
    assert hbt.complete


def test_hilbert_basis_weight0_impossible():
    act = make_action(2, torus_rank=1, weight_matrix=[[1, 1]])
    hb = hilbert_basis(act, 5)
    assert hb.generators == ()
    assert hb.complete


def test_hilbert_basis_incomplete_below_certificate():
    # single ray (5, 1) of degree 6: nothing found at bound 4, and the
    # certificate must refuse to declare completeness
    act = make_action(2, torus_rank=1, weight_matrix=[[1, -5]])
    hb4 = hilbert_basis(act, 4)
    assert hb4.generators == ()
    assert not hb4.complete
    hb6 = hilbert_basis(act, 6)
    assert hb6.generators == ((5, 1),)
    assert hb6.complete


def test_hilbert_basis_minimality_oracle():
    # every generator is weight zero and not a sum of two nonzero
    # weight-zero monomials (checked by exhaustive splitting)
    for act in [Z2, Z3, T, make_action(3, finite_orders=[4], weight_matrix=[[1, 2, 3]])]:
        hb = hilbert_basis(act, 6)
        members = set()
        for d in range(7):
            members.update(
                brute_weight0_monomials(
                    act.weight_matrix, act.torus_rank, act.finite_orders, act.n, d
                )
            )
        members.discard((0,) * act.n)
        for g in hb.generators:
            assert g in members
            for b in members:
                c = tuple(x - y for x, y in zip(g, b))
                if any(e < 0 for e in c) or not any(c):
                    continue
                assert c not in members, f"{g} = {b} + {c} is decomposable"
        # and everything low-degree is reachable from the generators
        reachable = hilbert_series_of(hb, act, 6)
        for d in range(7):
            assert reachable[d] == len(
                brute_weight0_monomials(
                    act.weight_matrix, act.torus_rank, act.finite_orders, act.n, d
                )
            )


def test_hilbert_basis_bound_precondition():
    with pytest.raises(PreconditionError):
        hilbert_basis(Z2, 0)


def test_quotient_dimension():
    assert quotient_dimension(Z2) == 2
    assert quotient_dimension(T) == 1
    assert quotient_dimension(make_action(2, torus_rank=1, weight_matrix=[[1, 1]])) == 0
    assert quotient_dimension(make_action(3)) == 3


def test_invariant_ring_series_examples():
    assert invariant_ring_series(Z2, 4).coefficients == (1, 0, 3, 0, 5)
    assert invariant_ring_series(T, 4).coefficients == (1, 0, 1, 0, 1)


def test_series_of_zero_module():
    empty = GradedSubmodule(1, (), (), 4, True)
    assert hilbert_series_of(empty, Z2, 4).coefficients == (0, 0, 0, 0, 0)


def test_form_generators_z2():
    sub = invariant_form_generators(Z2, 1, True, 6)
    assert sub.generator_degrees == (2, 2, 2, 2)
    got = {str(f) for f in sub.generators}
    assert got == {"y*dx", "x*dx", "y*dy", "x*dy"}
    assert sub.basis_complete


def test_form_generators_trivial_group():
    triv = make_action(3)
    sub = invariant_form_generators(triv, 1, True, 4)
    assert sub.generator_degrees == (1, 1, 1)
    assert {str(f) for f in sub.generators} == {"dx", "dy", "dz"}
    for k in range(4):
        subk = invariant_form_generators(triv, k, True, 4)
        assert len(subk.generators) == [1, 3, 3, 1][k]


def test_form_generators_torus_horizontal():
    sub = invariant_form_generators(T, 1, True, 6)
    assert len(sub.generators) == 1
    assert sub.generators[0] == Y * PolyForm.dx(2, 0) + X * PolyForm.dx(2, 1)
    assert sub.generator_degrees == (2,)


def test_generators_are_invariant_and_horizontal():
    act = make_action(3, torus_rank=1, finite_orders=[2],
                      weight_matrix=[[1, 1, -2], [1, 0, 1]])
    sub = invariant_form_generators(act, 1, True, 8)
    for f in sub.generators:
        assert weight_of_form(act, f).is_zero
        assert is_horizontal(act, f)


def test_generators_minimality():
    # dropping any generator strictly shrinks some piece
    act = Z3
    k = 1
    sub = invariant_form_generators(act, k, True, 6)
    w0 = zero_weight(act)

    def span_dims(gens, degs):
        dims = []
        for d in range(7):
            keys = piece_keys(act, k, d, w0)
            if not keys:
                dims.append(0)
                continue
            positions = {key: i for i, key in enumerate(keys)}
            ech = Echelon(len(keys))
            for dg, g in zip(degs, gens):
                if d < dg:
                    continue
                for exps in monomials_with_weight(act, d - dg, w0):
                    ech.insert(
                        form_to_vector(
                            g * Polynomial.monomial(act.n, exps), positions, len(keys)
                        )
                    )
            dims.append(ech.rank)
        return dims

    full = span_dims(sub.generators, sub.generator_degrees)
    for i in range(len(sub.generators)):
        gens = list(sub.generators)
        degs = list(sub.generator_degrees)
        del gens[i], degs[i]
        assert span_dims(gens, degs) != full


def test_series_of_module_matches_piece_dimensions():
    sub = invariant_form_generators(Z2, 1, True, 6)
    series = hilbert_series_of(sub, Z2, 6)
    # pieces of the invariant 1-forms have dimension 2*(d-1 monomials)
    # in even total degree d
    assert series.coefficients == (0, 0, 4, 0, 8, 0, 12)
