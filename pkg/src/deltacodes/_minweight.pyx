# cython: language_level=3
"""Compiled search for the smallest number of linearly dependent columns.

Works over any finite field given as flat arithmetic tables.  The search is an
iterative-deepening DFS over column subsets in increasing index order, keeping
the chosen columns as a normalized echelon basis so each candidate column is
reduced incrementally.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef inline bint _reduce(int* v, int* basis, int* pivots, int nbasis, int r,
                         int q, const int[::1] mul, const int[::1] sub) noexcept:
    """Reduce v against the basis in place; return True if v became zero."""
    cdef int s, p, f, k
    for s in range(nbasis):
        p = pivots[s]
        f = v[p]
        if f != 0:
            for k in range(p, r):
                v[k] = sub[v[k] * q + mul[f * q + basis[s * r + k]]]
    for k in range(r):
        if v[k] != 0:
            return False
    return True


cdef int _dfs(const int[::1] cols, int* basis, int* pivots, int nbasis,
              int start, int depth_left, int r, int n, int q,
              const int[::1] mul, const int[::1] sub, const int[::1] inv,
              int* scratch) noexcept:
    cdef int j, k, p, f
    cdef int* v = scratch + nbasis * r
    for j in range(start, n - depth_left + 1):
        for k in range(r):
            v[k] = cols[j * r + k]
        if _reduce(v, basis, pivots, nbasis, r, q, mul, sub):
            return 1
        if depth_left == 1:
            continue
        p = 0
        while v[p] == 0:
            p += 1
        f = inv[v[p]]
        for k in range(p, r):
            basis[nbasis * r + k] = mul[f * q + v[k]]
        for k in range(p):
            basis[nbasis * r + k] = 0
        pivots[nbasis] = p
        if _dfs(cols, basis, pivots, nbasis + 1, j + 1, depth_left - 1,
                r, n, q, mul, sub, inv, scratch):
            return 1
    return 0


def min_dependent_columns(const int[::1] cols, int r, int n, int q,
                          const int[::1] mul, const int[::1] sub,
                          const int[::1] inv, int wmax):
    """Smallest w such that some w columns are linearly dependent, or 0.

    ``cols`` is column-major (entry (i, j) at ``cols[j * r + i]``); ``mul`` and
    ``sub`` are flat q*q tables, ``inv`` a length-q table.  Returns 0 when no
    dependency of size <= wmax exists.
    """
    if r == 0:
        return 1 if n >= 1 else 0
    cdef int* basis = <int*> PyMem_Malloc(sizeof(int) * (wmax + 1) * r)
    cdef int* pivots = <int*> PyMem_Malloc(sizeof(int) * (wmax + 1))
    cdef int* scratch = <int*> PyMem_Malloc(sizeof(int) * (wmax + 2) * r)
    if basis == NULL or pivots == NULL or scratch == NULL:
        PyMem_Free(basis)
        PyMem_Free(pivots)
        PyMem_Free(scratch)
        raise MemoryError
    cdef int w, found
    try:
        for w in range(1, wmax + 1):
            if w > n:
                break
            found = _dfs(cols, basis, pivots, 0, 0, w, r, n, q,
                         mul, sub, inv, scratch)
            if found:
                return w
        return 0
    finally:
        PyMem_Free(basis)
        PyMem_Free(pivots)
        PyMem_Free(scratch)
