"""Pure-Python implementations of the flag-graph kernels.

Selected automatically when the compiled extension is unavailable, or when
``ZIGZAG_PURE=1`` is set.  Semantics are identical to ``_ckernels.pyx``.
"""
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def perm_cycles(perm):
    """Cycle decomposition of a permutation array.

    Returns ``(labels, positions, ncycles)``.  Cycles are numbered by their
    smallest element; ``positions[x]`` is the step count from that smallest
    element to ``x`` along the cycle.
    """
    p = np.asarray(perm, dtype=np.int64).tolist()
    n = len(p)
    labels = [-1] * n
    positions = [0] * n
    c = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        x = start
        k = 0
        while labels[x] == -1:
            labels[x] = c
            positions[x] = k
            k += 1
            x = p[x]
        c += 1
    return np.array(labels, dtype=np.int64), np.array(positions, dtype=np.int64), c


def residue_labels(gens, colors):
    """Connected components of the graph on ``range(n)`` spanned by ``gens[colors]``.

    Components are numbered in order of their smallest element.
    """
    gens = np.asarray(gens)
    n = gens.shape[1]
    colors = list(colors)
    if n == 0:
        return np.zeros(0, dtype=np.int64), 0
    if not colors:
        return np.arange(n, dtype=np.int64), n
    rows = np.concatenate([np.arange(n)] * len(colors))
    cols = np.concatenate([gens[c] for c in colors]).astype(np.int64)
    g = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    ncomp, raw = connected_components(g, directed=False)
    # renumber by smallest member
    first = np.full(ncomp, n, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(n))
    order = np.argsort(first, kind="stable")
    rank = np.empty(ncomp, dtype=np.int64)
    rank[order] = np.arange(ncomp)
    return rank[raw], int(ncomp)


def bfs_parity(gens, start):
    """Two-colouring by BFS depth parity from ``start``.

    Returns ``(parity, bipartite)`` where unreachable nodes get parity -1.
    """
    gens = np.asarray(gens, dtype=np.int64)
    k, n = gens.shape
    g = gens.tolist()
    parity = [-1] * n
    parity[start] = 0
    queue = [start]
    bipartite = True
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        px = parity[x]
        for j in range(k):
            y = g[j][x]
            if parity[y] == -1:
                parity[y] = 1 - px
                queue.append(y)
            elif parity[y] == px:
                bipartite = False
    return np.array(parity, dtype=np.int8), bipartite


def extend_map(gens_a, gens_b, base, image):
    """Extend ``base -> image`` to a map commuting with every generator.

    ``gens_a`` (k x n) and ``gens_b`` (k x m) are colour-aligned permutation
    tables.  Returns the map as an int64 array, or ``None`` when the
    extension is inconsistent, not injective or does not reach every node.
    """
    ga = np.asarray(gens_a, dtype=np.int64)
    gb = np.asarray(gens_b, dtype=np.int64)
    k, n = ga.shape
    if gb.shape != (k, n):
        return None
    a = ga.tolist()
    b = gb.tolist()
    phi = [-1] * n
    used = [False] * n
    phi[base] = image
    used[image] = True
    queue = [base]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        fx = phi[x]
        for j in range(k):
            y = a[j][x]
            fy = b[j][fx]
            cur = phi[y]
            if cur == -1:
                if used[fy]:
                    return None
                phi[y] = fy
                used[fy] = True
                queue.append(y)
            elif cur != fy:
                return None
    if len(queue) != n:
        return None
    return np.array(phi, dtype=np.int64)
