# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled fraction-free row kernels.

Identical contract to ``_echelon_py``.  Rows whose entries (and the
intermediate products) fit in 63-bit integers run on C arithmetic; on
any overflow risk the whole call falls back to exact Python-int
arithmetic, so results never differ from the pure twin.
"""

from libc.stdlib cimport free, malloc

from math import gcd

DEF SAFE_BOUND = 4611686018427387904  # 2**62


cdef long long ll_abs(long long x) nogil:
    return -x if x < 0 else x


cdef long long ll_gcd(long long a, long long b) nogil:
    cdef long long t
    a = ll_abs(a)
    b = ll_abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef bint fill_ll(object row, long long* buf, Py_ssize_t n):
    """Copy a Python int row into an int64 buffer; False on overflow."""
    cdef Py_ssize_t i
    cdef object x
    for i in range(n):
        x = row[i]
        try:
            buf[i] = x
        except OverflowError:
            return False
        if ll_abs(buf[i]) >= SAFE_BOUND:
            return False
    return True


def normalize_row(row):
    """Divide by the content and make the leading nonzero entry positive."""
    cdef Py_ssize_t i, n = len(row)
    cdef long long* buf = <long long*> malloc(n * sizeof(long long))
    cdef long long g = 0, lead = 0
    if buf != NULL and fill_ll(row, buf, n):
        for i in range(n):
            if buf[i]:
                g = ll_gcd(g, buf[i])
        if g == 0:
            free(buf)
            return list(row)
        for i in range(n):
            if buf[i]:
                lead = buf[i]
                break
        if lead < 0:
            g = -g
        out = [0] * n
        for i in range(n):
            out[i] = buf[i] // g
        free(buf)
        return out
    if buf != NULL:
        free(buf)
    return _normalize_obj(row)


def _normalize_obj(row):
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
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = p * a[i] - q * b[i]
    return out


def reduce_row(row, rows, pivots):
    """Eliminate `row` against echelon `rows` (pivot columns `pivots`).

    Rows must be sorted by pivot column and each have a positive pivot
    entry.  The fully reduced row is returned normalized.
    """
    cdef Py_ssize_t n = len(row)
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, p
    cdef long long* cur = NULL
    cdef long long* erow = NULL
    cdef long long lead, c, g, maxcur, maxerow, v
    cdef bint ok

    cur = <long long*> malloc(n * sizeof(long long))
    erow = <long long*> malloc(n * sizeof(long long))
    if cur == NULL or erow == NULL or not fill_ll(row, cur, n):
        if cur != NULL:
            free(cur)
        if erow != NULL:
            free(erow)
        return _reduce_obj(row, rows, pivots)

    ok = True
    for j in range(nrows):
        p = pivots[j]
        c = cur[p]
        if c == 0:
            continue
        if not fill_ll(rows[j], erow, n):
            ok = False
            break
        lead = erow[p]
        maxcur = 0
        maxerow = 0
        for i in range(n):
            if ll_abs(cur[i]) > maxcur:
                maxcur = ll_abs(cur[i])
            if ll_abs(erow[i]) > maxerow:
                maxerow = ll_abs(erow[i])
        # lead*cur[i] - c*erow[i] must stay below the safe bound
        if maxcur and ll_abs(lead) >= SAFE_BOUND // (2 * maxcur):
            ok = False
            break
        if maxerow and ll_abs(c) >= SAFE_BOUND // (2 * maxerow):
            ok = False
            break
        g = 0
        for i in range(n):
            cur[i] = lead * cur[i] - c * erow[i]
            if cur[i]:
                g = ll_gcd(g, cur[i])
        if g > 1:
            for i in range(n):
                cur[i] = cur[i] // g
    if not ok:
        free(cur)
        free(erow)
        return _reduce_obj(row, rows, pivots)

    # normalize: content and leading sign
    g = 0
    lead = 0
    for i in range(n):
        if cur[i]:
            g = ll_gcd(g, cur[i])
    if g == 0:
        free(cur)
        free(erow)
        return [0] * n
    for i in range(n):
        if cur[i]:
            lead = cur[i]
            break
    if lead < 0:
        g = -g
    out = [0] * n
    for i in range(n):
        out[i] = cur[i] // g
    free(cur)
    free(erow)
    return out


def _reduce_obj(row, rows, pivots):
    """Arbitrary-precision path, identical to the pure backend."""
    cdef Py_ssize_t i, j, n = len(row)
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t p
    cur = list(row)
    for j in range(nrows):
        p = pivots[j]
        c = cur[p]
        if c:
            erow = rows[j]
            lead = erow[p]
            for i in range(n):
                cur[i] = lead * cur[i] - c * erow[i]
            g = 0
            for i in range(n):
                x = cur[i]
                if x:
                    g = gcd(g, x)
            if g > 1:
                for i in range(n):
                    cur[i] = cur[i] // g
    return _normalize_obj(cur)
