"""Pure-Python fraction-free row kernels.

Same contract as the compiled twin in ``_echelon_c``; arithmetic is on
Python ints, so entries may grow arbitrarily large.  Every returned row
is gcd-stripped with a positive leading entry.
"""

from math import gcd


def normalize_row(row):
    """Divide by the content and make the leading nonzero entry positive."""
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
    if g == 0:
        return list(row)
    lead = 0
    for x in row:
        if x:
            lead = x
            break
    if lead < 0:
        g = -g
    return [x // g for x in row]


def combine_rows(a, b, p, q):
    """Return the row p*a - q*b."""
    return [p * x - q * y for x, y in zip(a, b)]


def reduce_row(row, rows, pivots):
    """Eliminate `row` against echelon `rows` (pivot columns `pivots`).

    Rows must be sorted by pivot column and each have a positive pivot
    entry.  The fully reduced row is returned normalized.
    """
    cur = list(row)
    for erow, p in zip(rows, pivots):
        c = cur[p]
        if c:
            lead = erow[p]
            cur = [lead * x - c * y for x, y in zip(cur, erow)]
            g = 0
            for x in cur:
                if x:
                    g = gcd(g, x)
            if g > 1:
                cur = [x // g for x in cur]
    return normalize_row(cur)
