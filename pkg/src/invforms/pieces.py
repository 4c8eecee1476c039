"""Finite-dimensional graded pieces of form modules.

Every module in the engine is a direct sum of (total degree, weight)
pieces; a piece of the k-forms has the monomial basis x^a dx_I with
|a| + k = degree and matching weight, ordered by (I, a) lexicographic.
That order is the canonical coordinate system used everywhere.
"""

from itertools import combinations

from invforms.action import weight_of_exponents, weight_of_form
from invforms.errors import InhomogeneityError, StructuralError
from invforms.forms import PolyForm
from invforms.linalg import Echelon
from invforms.poly import Polynomial


def monomials_of_degree(n, d):
    """All exponent tuples of total degree d, ascending lexicographic."""
    if d < 0:
        return []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d + 1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    out.sort()
    return out


def monomials_with_weight(action, d, weight):
    """Exponent tuples of degree d whose monomial has the given weight."""
    return [
        e
        for e in monomials_of_degree(action.n, d)
        if weight_of_exponents(action, e) == weight
    ]


def index_subsets(n, k):
    return [tuple(c) for c in combinations(range(n), k)]


def piece_keys(action, k, degree, weight):
    """Canonical (I, exps) basis of the (degree, weight) piece of the k-forms."""
    if k < 0 or k > action.n or degree < k:
        return []
    keys = []
    for I in index_subsets(action.n, k):
        for exps in monomials_of_degree(action.n, degree - k):
            if weight_of_exponents(action, exps, I) == weight:
                keys.append((I, exps))
    keys.sort()
    return keys


def form_to_vector(form, positions, ncols):
    """Coordinates of a form in a piece basis given by {(I, exps): column}."""
    vec = [0] * ncols
    for I, exps, c in form.terms():
        try:
            vec[positions[(I, exps)]] = c
        except KeyError:
            raise StructuralError(
                f"term x^{exps} dx_{I} lies outside the requested piece"
            ) from None
    return vec


def vector_to_form(n, k, vec, keys):
    comps = {}
    for (I, exps), c in zip(keys, vec):
        if c:
            comps.setdefault(I, {})[exps] = c
    return PolyForm(n, k, {I: Polynomial(n, t) for I, t in comps.items()})


def homogeneous_data(action, form):
    """(form degree, total degree, weight) of a homogeneous nonzero form."""
    degs = form.total_degrees()
    if len(degs) > 1:
        raise InhomogeneityError(
            f"form mixes total degrees {sorted(degs)}"
        )
    w = weight_of_form(action, form)
    return form.degree, (degs.pop() if degs else form.degree), w


def graded_piece_basis(generators, degree, weight, action):
    """Basis of one piece of the polynomial-ring span of the generators.

    Generators must share a form degree and be homogeneous; the result
    is the canonical reduced basis of the (degree, weight) component of
    the submodule they generate, as forms.
    """
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        return []
    k = gens[0].degree
    for g in gens:
        if g.n != action.n:
            raise StructuralError(
                f"generator over {g.n} variables under an action on {action.n}"
            )
        if g.degree != k:
            raise StructuralError(
                f"generators mix form degrees {k} and {g.degree}"
            )
    keys = piece_keys(action, k, degree, weight)
    if not keys:
        return []
    positions = {key: i for i, key in enumerate(keys)}
    ech = Echelon(len(keys))
    for g in gens:
        _, dg, wg = homogeneous_data(action, g)
        mult = degree - dg
        if mult < 0:
            continue
        for exps in monomials_with_weight(action, mult, weight - wg):
            scaled = g * Polynomial.monomial(action.n, exps)
            ech.insert(form_to_vector(scaled, positions, len(keys)))
    return [vector_to_form(action.n, k, row, keys) for row in ech.rows]
