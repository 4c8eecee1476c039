"""Invariant-ring generators and minimal generators of invariant form modules.

The weight-zero monomials form a normal affine monoid; its Hilbert
basis generates the invariant ring.  Form modules are handled one
total degree at a time: a graded Nakayama sweep records exactly the
piece elements not reachable from lower degrees.
"""

from dataclasses import dataclass

from invforms.action import zero_weight
from invforms.cones import hilbert_certificate_bound, span_dim
from invforms.errors import PreconditionError
from invforms.euler import horizontal_piece
from invforms.linalg import Echelon
from invforms.pieces import (
    form_to_vector,
    monomials_with_weight,
    piece_keys,
    vector_to_form,
)
from invforms.poly import Polynomial


@dataclass(frozen=True)
class MonoidBasis:
    """Minimal weight-zero monomial generators found up to `search_bound`.

    `complete` is set only when `search_bound` reaches the certificate
    bound, so a complete basis is the whole Hilbert basis.
    """

    generators: tuple
    complete: bool
    search_bound: int
    certificate_bound: int

    @property
    def max_degree(self):
        return max((sum(g) for g in self.generators), default=0)


def _dominates(a, b):
    return all(x >= y for x, y in zip(a, b))


def hilbert_basis(action, bound):
    """Minimal generators of the weight-zero monoid up to total degree `bound`."""
    if bound < 1:
        raise PreconditionError(f"bound must be at least 1, got {bound}")
    w0 = zero_weight(action)
    gens = []
    for d in range(1, bound + 1):
        for exps in monomials_with_weight(action, d, w0):
            if not any(_dominates(exps, g) for g in gens):
                gens.append(exps)
    cert = hilbert_certificate_bound(action)
    return MonoidBasis(tuple(gens), bound >= cert, bound, cert)


def quotient_dimension(action):
    """Krull dimension of the invariant ring (dimension of the monoid span)."""
    cert = hilbert_certificate_bound(action)
    basis = hilbert_basis(action, max(cert, 1))
    return span_dim(basis.generators, action.n)


@dataclass(frozen=True)
class HilbertSeries:
    """Weight-zero piece dimensions per total degree, 0..D."""

    coefficients: tuple

    def __getitem__(self, d):
        return self.coefficients[d]

    def __len__(self):
        return len(self.coefficients)


@dataclass(frozen=True)
class GradedSubmodule:
    """Minimal generators, over the invariant ring, of a module of k-forms.

    The list is certified minimal-and-spanning for all pieces of total
    degree <= generator_bound; `basis_complete` records whether the
    invariant-ring generators themselves were certified at that bound.
    """

    form_degree: int
    generators: tuple
    generator_degrees: tuple
    generator_bound: int
    basis_complete: bool


def _module_piece_vectors(action, k, degree, horizontal, keys, positions):
    """Canonical basis vectors of the weight-zero module piece."""
    if horizontal and action.torus_rank > 0:
        forms = horizontal_piece(action, k, degree, zero_weight(action))
        return [form_to_vector(f, positions, len(keys)) for f in forms]
    vecs = []
    for i in range(len(keys)):
        v = [0] * len(keys)
        v[i] = 1
        vecs.append(v)
    return vecs


def invariant_form_generators(action, k, horizontal, bound):
    """Minimal invariant-ring generators of the invariant k-form module.

    With `horizontal` set the module is cut down to the common kernel
    of the torus contractions (no-op for finite-only actions).  Sweeps
    total degrees up to `bound`; within each piece, candidates are the
    canonical piece basis and a candidate is recorded exactly when it
    is not generated from lower degrees (graded Nakayama).
    """
    if bound < k:
        raise PreconditionError(f"bound {bound} below form degree {k}")
    basis = hilbert_basis(action, max(bound, 1))
    w0 = zero_weight(action)
    gens = []
    degrees = []
    for d in range(k, bound + 1):
        keys = piece_keys(action, k, d, w0)
        if not keys:
            continue
        positions = {key: i for i, key in enumerate(keys)}
        ech = Echelon(len(keys))
        for dg, g in zip(degrees, gens):
            mult = d - dg
            if mult <= 0:
                continue
            for exps in monomials_with_weight(action, mult, w0):
                scaled = g * Polynomial.monomial(action.n, exps)
                ech.insert(form_to_vector(scaled, positions, len(keys)))
        for v in _module_piece_vectors(action, k, d, horizontal, keys, positions):
            if ech.insert(v) is not None:
                gens.append(vector_to_form(action.n, k, v, keys))
                degrees.append(d)
    return GradedSubmodule(
        k, tuple(gens), tuple(degrees), bound, basis.complete
    )


def invariant_ring_series(action, truncation):
    """Direct count of weight-zero monomials per degree (the honest series)."""
    w0 = zero_weight(action)
    return HilbertSeries(
        tuple(
            len(monomials_with_weight(action, d, w0))
            for d in range(truncation + 1)
        )
    )


def hilbert_series_of(obj, action, truncation):
    """Per-degree weight-zero dimensions of the module spanned by `obj`.

    A MonoidBasis spans the subring generated by its monomials (closure
    under sums); a GradedSubmodule spans its invariant-ring span.
    """
    if isinstance(obj, MonoidBasis):
        reach = [set() for _ in range(truncation + 1)]
        reach[0].add((0,) * action.n)
        for d in range(1, truncation + 1):
            seen = reach[d]
            for g in obj.generators:
                dg = sum(g)
                if dg > d:
                    continue
                for s in reach[d - dg]:
                    seen.add(tuple(a + b for a, b in zip(s, g)))
        return HilbertSeries(tuple(len(r) for r in reach))

    w0 = zero_weight(action)
    k = obj.form_degree
    coeffs = []
    for d in range(truncation + 1):
        keys = piece_keys(action, k, d, w0)
        if not keys:
            coeffs.append(0)
            continue
        positions = {key: i for i, key in enumerate(keys)}
        ech = Echelon(len(keys))
        for dg, g in zip(obj.generator_degrees, obj.generators):
            mult = d - dg
            if mult < 0:
                continue
            for exps in monomials_with_weight(action, mult, w0):
                scaled = g * Polynomial.monomial(action.n, exps)
                ech.insert(form_to_vector(scaled, positions, len(keys)))
        coeffs.append(ech.rank)
    return HilbertSeries(tuple(coeffs))
