"""Wythoff kaleidoscope construction K(V)."""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .complex import Complex, ComplexError, dual, require_valid
from .flags import FlagIndex


def normalize_subset(V, d: int) -> tuple:
    V = tuple(sorted(set(int(v) for v in V)))
    if not V:
        raise ValueError("ringed subset must be nonempty")
    if V[0] < 0 or V[-1] > d:
        raise ValueError(f"ringed subset {V} outside 0..{d}")
    return V


def parse_subset(text: str) -> tuple:
    """``"0,1,3"`` -> ``(0, 1, 3)``."""
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValueError(f"bad subset {text!r}") from None


def _runs(S):
    runs, cur = [], []
    for i in sorted(S):
        if cur and i != cur[-1] + 1:
            runs.append(cur)
            cur = []
        cur.append(i)
    if cur:
        runs.append(cur)
    return runs


def admissible(S, V) -> bool:
    """Every path-component of ``S`` meets ``V``."""
    Vs = set(V)
    return all(Vs.intersection(r) for r in _runs(S))


def passive(S, V, d: int) -> tuple:
    S, Vs = set(S), set(V)
    return tuple(i for i in range(d + 1) if i not in S and i not in Vs and i - 1 not in S and i + 1 not in S)


def wythoff(K: Complex, V, index: FlagIndex | None = None) -> Complex:
    """Faces are pairs (S, residue) ordered by inclusion of S and meeting residues."""
    d = K.dim
    V = normalize_subset(V, d)
    fi = index if index is not None else FlagIndex(K)
    if not fi.is_connected():
        raise ComplexError("flag graph is not connected")
    by_size = [[S for S in combinations(range(d + 1), k) if admissible(S, V)] for k in range(d + 1)]
    comp = {}
    offset = {}
    sizes = []
    for k in range(d + 1):
        pos = 0
        for S in by_size[k]:
            colors = sorted(set(S) | set(passive(S, V, d)))
            lab, nc = fi.residue_labels(colors)
            comp[S] = lab
            offset[S] = pos
            pos += nc
        sizes.append(pos)
    levels = [[()] * sizes[0]]
    labels = []
    for S in by_size[0]:
        labels.extend(_face_labels(S, comp[S]))
    for k in range(1, d + 1):
        cov: list[set] = [set() for _ in range(sizes[k])]
        for S in by_size[k]:
            for drop in S:
                T = tuple(x for x in S if x != drop)
                if T not in comp:
                    continue
                pairs = np.unique(np.stack([comp[S], comp[T]], axis=1), axis=0)
                for a, b in pairs.tolist():
                    cov[offset[S] + a].add(offset[T] + b)
            labels.extend(_face_labels(S, comp[S]))
        levels.append([tuple(sorted(c)) for c in cov])
    out = Complex(levels, labels=labels)
    return require_valid(out, f"Wythoff construction with V={V}")


def _face_labels(S, lab):
    n = int(lab.max()) + 1
    first = np.full(n, len(lab), dtype=np.int64)
    np.minimum.at(first, lab, np.arange(len(lab)))
    return [(S, int(f)) for f in first]


def medial(K: Complex) -> Complex:
    return wythoff(K, {1})


def order_complex(K: Complex) -> Complex:
    """Dual of the full Wythoff construction; simplicial."""
    out = dual(wythoff(K, range(K.dim + 1)))
    for x in out.faces(out.dim):
        if len(out.covers[x]) != out.dim + 1:
            raise ComplexError("order complex is not simplicial")
    return out


def wythoff_dual_subset(V, d: int) -> tuple:
    """``d - V``, the subset giving the same construction on the dual."""
    return tuple(sorted(d - v for v in V))
