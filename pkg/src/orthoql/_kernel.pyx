# cython: language_level=3
"""Integer Gauss-Jordan elimination, compiled twin of ``_kernel_py``.

Entries are arbitrary-precision Python ints; the win over the pure
version comes from typed loop indices and direct list indexing.  The
two implementations must stay behaviourally identical; the test suite
compares them on random input.
"""

from math import gcd

__all__ = ["rref_gauss"]


def rref_gauss(list rows, Py_ssize_t ncols):
    """Row-reduce ``rows`` in place; return ``(rows, pivot_columns)``.

    Same contract as the pure twin: integral entries throughout,
    per-row gcd reduction, pivots left unscaled for the caller.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef list pivots = []
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t c, k, j, p, twoc
    cdef list row, piv
    cdef object pr, pi, ar, ai, xr, xi, yr, yi, g, v

    for c in range(ncols):
        twoc = 2 * c
        p = -1
        for k in range(r, nrows):
            row = <list>rows[k]
            if row[twoc] or row[twoc + 1]:
                p = k
                break
        if p < 0:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = <list>rows[r]
        pr = piv[twoc]
        pi = piv[twoc + 1]
        for k in range(nrows):
            if k == r:
                continue
            row = <list>rows[k]
            ar = row[twoc]
            ai = row[twoc + 1]
            if not ar and not ai:
                continue
            for j in range(0, 2 * ncols, 2):
                xr = row[j]
                xi = row[j + 1]
                yr = piv[j]
                yi = piv[j + 1]
                row[j] = pr * xr - pi * xi - (ar * yr - ai * yi)
                row[j + 1] = pr * xi + pi * xr - (ar * yi + ai * yr)
            g = 0
            for j in range(2 * ncols):
                v = row[j]
                if v:
                    g = gcd(g, v)
            if g > 1:
                for j in range(2 * ncols):
                    row[j] //= g
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots
