"""Exact rational linear algebra on small dense matrices.

Everything is done fraction-free over the integers: rows of Fractions
are scaled to primitive integer rows, and elimination keeps entries
gcd-stripped.  The inner row-reduction loop is provided by a compiled
extension when available, with a pure-Python twin selected otherwise
(set INVFORMS_PURE=1 to force the fallback).

All outputs are canonical: the reduced echelon form of a row space is
unique, kernels are returned in reduced form with ascending free
columns, so results are byte-stable across backends and runs.
"""

import os
from bisect import bisect_left
from math import gcd, lcm

if os.environ.get("INVFORMS_PURE"):
    from invforms import _echelon_py as _backend

    BACKEND = "pure"
else:
    try:
        from invforms import _echelon_c as _backend

        BACKEND = "compiled"
    except ImportError:
        from invforms import _echelon_py as _backend

        BACKEND = "pure"

normalize_row = _backend.normalize_row
combine_rows = _backend.combine_rows
reduce_row = _backend.reduce_row


def int_row(row):
    """Scale a row of Fractions/ints to a row of ints (common denominator)."""
    den = 1
    for x in row:
        d = x.denominator  # 1 for ints
        if d != 1:
            den = lcm(den, d)
    if den == 1:
        return [x if type(x) is int else int(x) for x in row]
    return [int(x * den) for x in row]


class Echelon:
    """Incremental reduced row echelon form of a growing row set.

    Rows are primitive integer vectors; pivot entries are positive and
    every pivot column is zero in all other rows, so `rows` is the
    canonical RREF (up to overall scaling of each row) of the span.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def residual(self, row):
        """Fully reduce `row` against the current rows (row: Fractions/ints)."""
        return reduce_row(int_row(row), self.rows, self.pivots)

    def insert(self, row):
        """Add `row` to the span; return its pivot column or None if dependent."""
        red = self.residual(row)
        lead = -1
        for j, x in enumerate(red):
            if x:
                lead = j
                break
        if lead < 0:
            return None
        pos = bisect_left(self.pivots, lead)
        self.rows.insert(pos, red)
        self.pivots.insert(pos, lead)
        # Restore full reduction: only rows with earlier pivots can be
        # nonzero in the new pivot column.
        for i in range(pos):
            r = self.rows[i]
            c = r[lead]
            if c:
                self.rows[i] = normalize_row(combine_rows(r, red, red[lead], c))
        return lead

    def contains(self, row):
        return not any(self.residual(row))

    def kernel_basis(self):
        """Primitive integer basis of {v : r . v = 0 for every row r}.

        One vector per free column, ascending, each normalized so the
        free coordinate is positive; canonical for the row space.
        """
        pivset = set(self.pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            # v[f] = 1, v[p] = -r[f]/r[p]; cleared to primitive integers
            touched = [
                (p, r[f], r[p]) for r, p in zip(self.rows, self.pivots) if r[f]
            ]
            scale = 1
            for _, rf, rp in touched:
                scale = lcm(scale, rp // gcd(rp, rf))
            vec = [0] * self.ncols
            vec[f] = scale
            g = scale
            for p, rf, rp in touched:
                vec[p] = -rf * scale // rp
                g = gcd(g, vec[p])
            if g > 1:
                vec = [x // g for x in vec]
            basis.append(vec)
        return basis


def echelon_of(rows, ncols):
    ech = Echelon(ncols)
    for row in rows:
        ech.insert(row)
    return ech


def rank_of_rows(rows, ncols):
    return echelon_of(rows, ncols).rank


def kernel_of_rows(rows, ncols):
    """Basis of the solution space of the homogeneous system rows . v = 0."""
    return echelon_of(rows, ncols).kernel_basis()
