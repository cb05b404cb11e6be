"""Property checks shared by the property suite and the acceptance runner.

Each check takes a corpus name and returns a list of failure strings (empty
when the property holds).
"""
from collections import Counter
from math import factorial

import numpy as np

from zigzag.complex import dual
from zigzag.symmetry import automorphisms
from zigzag.zigzags import zigzag_graph_connected, zigzags

import corpus


def sigma_laws(name):
    fi = corpus.index(name)
    s, n = fi.sigma, fi.n_flags
    ident = np.arange(n)
    out = []
    for i in range(len(s)):
        if not np.array_equal(s[i][s[i]], ident):
            out.append(f"sigma_{i + 1} is not an involution")
        if np.any(s[i] == ident):
            out.append(f"sigma_{i + 1} has a fixed flag")
        for j in range(i + 2, len(s)):
            if not np.array_equal(s[i][s[j]], s[j][s[i]]):
                out.append(f"sigma_{i + 1} and sigma_{j + 1} do not commute")
    return out


def length_identity(name):
    D = corpus.decomposition(name)
    out = [f"zigzag {z.id}: l={z.length}" for z in D.zigzags if not z.length_identity_holds()]
    if not D.bookkeeping_holds():
        out.append("lengths do not sum to the flag count")
    return out


def _simplicial(K):
    return all(len(K.covers[x]) == k + 1 for k in range(1, K.dim + 1) for x in K.faces(k))


def flag_counts(name):
    K, fi = corpus.get(name), corpus.index(name)
    out = []
    if _simplicial(K) and fi.n_flags != factorial(K.dim + 1) * K.counts[-1]:
        out.append(f"simplicial count {fi.n_flags} != (d+1)! f")
    G = automorphisms(K, fi)
    if G.order * G.n_flag_orbits != fi.n_flags:
        out.append(f"p*|Aut| = {G.n_flag_orbits}*{G.order} != {fi.n_flags}")
    return out


def duality(name):
    K = corpus.get(name)
    D, E = corpus.decomposition(name), zigzags(dual(K))
    out = []
    if sorted(D.lengths()) != sorted(E.lengths()):
        out.append("zigzag lengths differ from the dual")
    if K.dim == 2:
        swapped = Counter({(l, b, a): m for (l, a, b), m in D.z_vector().items()})
        if swapped != E.z_vector():
            out.append("map dual does not swap the signature types")
    return out


def evenness(name):
    K, fi = corpus.get(name), corpus.index(name)
    if K.dim % 2 or not fi.is_orientable():
        return []
    return [f"odd length {l}" for l in set(corpus.decomposition(name).lengths()) if l % 2]


def zigzag_graph(name):
    if corpus.get(name).dim != 2:
        return []
    return [] if zigzag_graph_connected(corpus.decomposition(name)) else ["Z(K) disconnected"]


def odd_signature(name):
    """Monitor only: signatures in odd dimension (1-complexes reported separately)."""
    K = corpus.get(name)
    if K.dim % 2 == 0:
        return []
    return [f"{name}: {z.length}_{{{z.n_I},{z.n_II}}}" for z in corpus.decomposition(name).zigzags if not z.simple]


CHECKS = {
    "sigma laws": sigma_laws,
    "length identity": length_identity,
    "flag counts": flag_counts,
    "duality": duality,
    "evenness": evenness,
    "zigzag graph": zigzag_graph,
}


def platonic_h():
    out = []
    for name in corpus.PLATONIC:
        G = automorphisms(corpus.get(name), corpus.index(name))
        hs = set(corpus.decomposition(name).lengths())
        if len(hs) != 1 or G.order != (h := hs.pop()) * (h + 2):
            out.append(f"{name}: |Aut|={G.order}, lengths={sorted(corpus.decomposition(name).lengths())[:3]}")
    return out
