# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled Bareiss elimination kernel.

Coefficient arithmetic stays on Python ints (the entries are
arbitrary-precision), but the O(n^3) loop shell, indexing and row
bookkeeping run as C.  Must stay behaviourally identical to
``_kernel_py.bareiss_determinant``.
"""


def bareiss_determinant(rows):
    """Exact determinant of a square list-of-lists of Python ints."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list m = [list(r) for r in rows]
    cdef list row_k, row_i
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    prev = 1
    for k in range(n - 1):
        row_k = <list> m[k]
        if row_k[k] == 0:
            for i in range(k + 1, n):
                if (<list> m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    row_k = <list> m[k]
                    break
            else:
                return 0
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list> m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * (<list> m[n - 1])[n - 1]
