# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``finkan._pykernels``."""
from libc.stdlib cimport malloc, free


def enumerate_families(sizes, constraints):
    cdef Py_ssize_t n = len(sizes)
    cdef Py_ssize_t m = len(constraints)
    cdef Py_ssize_t total = 0, j, pos, c, start, stop
    cdef int *sz
    cdef int *values
    cdef int *ci
    cdef int *ck
    cdef int *coff
    cdef int *ctab
    cdef int *order
    cdef int *start_of
    cdef bint ok
    out = []
    for _, _, table in constraints:
        total += len(table)
    sz = <int *> malloc((n + 1) * sizeof(int))
    values = <int *> malloc((n + 1) * sizeof(int))
    ci = <int *> malloc((m + 1) * sizeof(int))
    ck = <int *> malloc((m + 1) * sizeof(int))
    coff = <int *> malloc((m + 1) * sizeof(int))
    ctab = <int *> malloc((total + 1) * sizeof(int))
    order = <int *> malloc((m + 1) * sizeof(int))
    start_of = <int *> malloc((n + 2) * sizeof(int))
    try:
        for j in range(n):
            sz[j] = sizes[j]
            values[j] = -1
        # bucket constraints by the later of their two variables (CSR layout)
        for j in range(n + 2):
            start_of[j] = 0
        pos = 0
        for j, (i, k, table) in enumerate(constraints):
            ci[j] = i
            ck[j] = k
            coff[j] = pos
            for v in table:
                ctab[pos] = v
                pos += 1
            start_of[max(i, k) + 1] += 1
        for j in range(n):
            start_of[j + 1] += start_of[j]
        fill = [start_of[j] for j in range(n)]
        for j in range(m):
            c = max(ci[j], ck[j])
            order[fill[c]] = j
            fill[c] += 1

        pos = 0
        while pos >= 0:
            if pos == n:
                out.append(tuple([values[j] for j in range(n)]))
                pos -= 1
                continue
            values[pos] += 1
            if values[pos] >= sz[pos]:
                values[pos] = -1
                pos -= 1
                continue
            ok = True
            start = start_of[pos]
            stop = start_of[pos + 1]
            for c in range(start, stop):
                j = order[c]
                if ctab[coff[j] + values[ci[j]]] != values[ck[j]]:
                    ok = False
                    break
            if ok:
                pos += 1
    finally:
        free(sz)
        free(values)
        free(ci)
        free(ck)
        free(coff)
        free(ctab)
        free(order)
        free(start_of)
    return out


cdef inline int _find(int *parent, int x) nogil:
    cdef int root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def partition(int n, left, right):
    cdef int *parent = <int *> malloc((n + 1) * sizeof(int))
    cdef int x, ra, rb
    try:
        for x in range(n):
            parent[x] = x
        for a, b in zip(left, right):
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra < rb:
                parent[rb] = ra
            elif rb < ra:
                parent[ra] = rb
        return [_find(parent, x) for x in range(n)]
    finally:
        free(parent)
