# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled flag-graph kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def perm_cycles(perm):
    cdef i64[::1] p = np.ascontiguousarray(perm, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0]
    labels_arr = np.full(n, -1, dtype=np.int64)
    pos_arr = np.zeros(n, dtype=np.int64)
    cdef i64[::1] labels = labels_arr
    cdef i64[::1] pos = pos_arr
    cdef Py_ssize_t start
    cdef i64 x, k, c = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        x = start
        k = 0
        while labels[x] == -1:
            labels[x] = c
            pos[x] = k
            k += 1
            x = p[x]
        c += 1
    return labels_arr, pos_arr, int(c)


cdef inline i64 _find(i64[::1] parent, i64 x) nogil:
    cdef i64 r = x
    while parent[r] != r:
        r = parent[r]
    cdef i64 nxt
    while parent[x] != r:
        nxt = parent[x]
        parent[x] = r
        x = nxt
    return r


def residue_labels(gens, colors):
    cdef i64[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef Py_ssize_t n = g.shape[1]
    cdef i64[::1] cols = np.ascontiguousarray(list(colors), dtype=np.int64)
    cdef Py_ssize_t nc = cols.shape[0]
    parent_arr = np.arange(n, dtype=np.int64)
    cdef i64[::1] parent = parent_arr
    cdef Py_ssize_t x, j
    cdef i64 ra, rb
    with nogil:
        for j in range(nc):
            for x in range(n):
                ra = _find(parent, x)
                rb = _find(parent, g[cols[j], x])
                if ra != rb:
                    # smaller root wins so roots are component minima
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
    labels_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] labels = labels_arr
    cdef i64 c = 0
    cdef i64 r
    with nogil:
        for x in range(n):
            r = _find(parent, x)
            if r == x:
                labels[x] = c
                c += 1
            else:
                labels[x] = labels[r]
    return labels_arr, int(c)


def bfs_parity(gens, Py_ssize_t start):
    cdef i64[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef Py_ssize_t k = g.shape[0]
    cdef Py_ssize_t n = g.shape[1]
    parity_arr = np.full(n, -1, dtype=np.int8)
    cdef cnp.int8_t[::1] parity = parity_arr
    queue_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, j
    cdef i64 x, y
    cdef bint bipartite = True
    parity[start] = 0
    queue[tail] = start
    tail += 1
    with nogil:
        while head < tail:
            x = queue[head]
            head += 1
            for j in range(k):
                y = g[j, x]
                if parity[y] == -1:
                    parity[y] = 1 - parity[x]
                    queue[tail] = y
                    tail += 1
                elif parity[y] == parity[x]:
                    bipartite = False
    return parity_arr, bool(bipartite)


def extend_map(gens_a, gens_b, Py_ssize_t base, Py_ssize_t image):
    cdef i64[:, ::1] a = np.ascontiguousarray(gens_a, dtype=np.int64)
    cdef i64[:, ::1] b = np.ascontiguousarray(gens_b, dtype=np.int64)
    cdef Py_ssize_t k = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    if b.shape[0] != k or b.shape[1] != n:
        return None
    phi_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] phi = phi_arr
    used_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] used = used_arr
    queue_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, j
    cdef i64 x, y, fx, fy, cur
    cdef bint ok = True
    phi[base] = image
    used[image] = 1
    queue[tail] = base
    tail += 1
    with nogil:
        while head < tail and ok:
            x = queue[head]
            head += 1
            fx = phi[x]
            for j in range(k):
                y = a[j, x]
                fy = b[j, fx]
                cur = phi[y]
                if cur == -1:
                    if used[fy]:
                        ok = False
                        break
                    phi[y] = fy
                    used[fy] = 1
                    queue[tail] = y
                    tail += 1
                elif cur != fy:
                    ok = False
                    break
    if not ok or tail != n:
        return None
    return phi_arr
