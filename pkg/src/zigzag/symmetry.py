"""Automorphisms and isomorphisms via flag-map extension."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .complex import Complex, ComplexError
from .flags import FlagIndex
from .zigzags import ZigzagDecomposition


def flag_invariants(fi: FlagIndex) -> np.ndarray:
    """Per-flag isomorphism invariant as a small integer code.

    Columns: T-orbit length and the cycle lengths of sigma_i sigma_{i+1}.
    Codes are comparable between complexes through :func:`_invariant_rows`.
    """
    return _invariant_rows(fi)


def _cycle_lengths(perm):
    lab, _, nc = _kernels.perm_cycles(perm)
    return np.bincount(lab, minlength=nc)[lab]


def _invariant_rows(fi: FlagIndex) -> np.ndarray:
    cols = [_cycle_lengths(fi.translate)]
    s = fi.sigma
    for i in range(fi.dim):
        cols.append(_cycle_lengths(s[i][s[i + 1]]))
    return np.stack(cols, axis=1)


def _row_codes(rows_a, rows_b=None):
    allrows = rows_a if rows_b is None else np.concatenate([rows_a, rows_b])
    _, inv = np.unique(allrows, axis=0, return_inverse=True)
    inv = inv.reshape(-1)
    if rows_b is None:
        return inv
    return inv[: len(rows_a)], inv[len(rows_a):]


def _closure(gens, start, n):
    """Orbit of ``start`` (a boolean mask) under the group generated by ``gens``."""
    mask = np.zeros(n, dtype=bool)
    frontier = np.atleast_1d(np.asarray(start, dtype=np.int64))
    mask[frontier] = True
    while len(frontier):
        nxt = np.concatenate([g[frontier] for g in gens]) if gens else frontier[:0]
        nxt = np.unique(nxt[~mask[nxt]])
        mask[nxt] = True
        frontier = nxt
    return mask


class AutomorphismGroup:
    """Automorphisms as flag permutations commuting with every sigma.

    The action on flags is free, so an automorphism is fixed by the image of
    the base flag.  ``images`` lists those images (sorted); :meth:`element`
    rebuilds the full permutation on demand.
    """

    def __init__(self, index: FlagIndex, base: int, generators: list, images: np.ndarray):
        self.index = index
        self.complex = index.complex
        self.base = base
        self.generators = generators
        self.images = images
        self.order = len(images)
        self._sigma64 = None
        if generators:
            labels, n = _kernels.residue_labels(np.stack(generators), range(len(generators)))
        else:
            labels, n = np.arange(index.n_flags), index.n_flags
        self.flag_orbit = labels
        self.n_flag_orbits = n

    def element(self, i: int) -> np.ndarray:
        if self._sigma64 is None:
            self._sigma64 = np.ascontiguousarray(self.index.sigma, dtype=np.int64)
        s = self._sigma64
        return _kernels.extend_map(s, s, self.base, int(self.images[i]))

    def elements(self):
        for i in range(self.order):
            yield self.element(i)

    def face_permutation(self, perm) -> np.ndarray:
        """Element permutation induced by a flag automorphism."""
        fl = self.index.flags
        K = self.complex
        out = np.empty(K.n, dtype=np.int64)
        img = fl[np.asarray(perm)]
        for k in range(K.dim + 1):
            out[fl[:, k]] = img[:, k]
        return out

    def vertex_permutations(self, limit: int = 200_000) -> np.ndarray:
        """All element permutations restricted to vertices, closed from the generators."""
        nv = self.complex.counts[0]
        gens = [self.face_permutation(g)[:nv] for g in self.generators]
        seen = {tuple(range(nv))}
        frontier = [np.arange(nv)]
        out = [np.arange(nv)]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = g[p]
                    t = tuple(q.tolist())
                    if t not in seen:
                        seen.add(t)
                        nxt.append(q)
                        out.append(q)
                        if len(out) > limit:
                            raise ComplexError("vertex action too large to materialize")
            frontier = nxt
        return np.array(out)

    def zigzag_permutation(self, perm, decomp: ZigzagDecomposition) -> np.ndarray:
        starts = np.array([z.start for z in decomp.zigzags], dtype=np.int64)
        return decomp.zigzag_of[np.asarray(perm)[starts]]

    def zigzag_orbit_labels(self, decomp: ZigzagDecomposition) -> tuple:
        """``(labels, count)`` for the induced action on zigzags."""
        n = len(decomp)
        if n == 0 or not self.generators:
            return np.arange(n), n
        gens = np.stack([self.zigzag_permutation(g, decomp) for g in self.generators])
        return _kernels.residue_labels(gens, range(len(gens)))

    def zigzag_orbits(self, decomp: ZigzagDecomposition) -> int:
        return self.zigzag_orbit_labels(decomp)[1]

    def zigzag_orbit_sizes(self, decomp: ZigzagDecomposition) -> list:
        labels, n = self.zigzag_orbit_labels(decomp)
        return sorted(np.bincount(labels, minlength=n).tolist())

    def is_regular(self) -> bool:
        return self.n_flag_orbits == 1


def automorphisms(K: Complex, index: FlagIndex | None = None) -> AutomorphismGroup:
    fi = index if index is not None else FlagIndex(K)
    if fi.disconnected_residue() is not None:
        raise ComplexError("a residue is disconnected; automorphisms would not act on faces")
    s = np.ascontiguousarray(fi.sigma, dtype=np.int64)  # converted once for the kernel calls
    n = fi.n_flags
    codes = _row_codes(_invariant_rows(fi))
    # the rarest invariant class gives the fewest candidates
    counts = np.bincount(codes)
    base_code = int(np.argmin(np.where(counts > 0, counts, n + 1)))
    base = int(np.nonzero(codes == base_code)[0][0])
    candidates = np.nonzero(codes == base_code)[0]
    gens: list = []
    orbit = _closure(gens, base, n)
    failed = np.zeros(n, dtype=bool)
    for g in candidates.tolist():
        if orbit[g] or failed[g]:
            continue
        p = _kernels.extend_map(s, s, base, g)
        if p is None:
            # every flag H-equivalent to g fails too
            failed |= _closure(gens, g, n)
            continue
        gens.append(p)
        orbit = _closure(gens, base, n)
    images = np.nonzero(orbit)[0]
    return AutomorphismGroup(fi, base, gens, images)


def is_isomorphic(K1: Complex, K2: Complex) -> bool:
    if K1.dim != K2.dim or K1.counts != K2.counts:
        return False
    f1, f2 = FlagIndex(K1), FlagIndex(K2)
    return find_isomorphism(f1, f2) is not None


def find_isomorphism(f1: FlagIndex, f2: FlagIndex):
    """A flag bijection commuting with the sigmas, or ``None``."""
    if f1.dim != f2.dim or f1.n_flags != f2.n_flags:
        return None
    r1, r2 = _invariant_rows(f1), _invariant_rows(f2)
    c1, c2 = _row_codes(r1, r2)
    if not np.array_equal(np.sort(c1), np.sort(c2)):
        return None
    counts = np.bincount(c1)
    code = int(np.argmin(np.where(counts > 0, counts, f1.n_flags + 1)))
    base = int(np.nonzero(c1 == code)[0][0])
    s1 = np.ascontiguousarray(f1.sigma, dtype=np.int64)
    s2 = np.ascontiguousarray(f2.sigma, dtype=np.int64)
    for g in np.nonzero(c2 == code)[0].tolist():
        p = _kernels.extend_map(s1, s2, base, g)
        if p is not None:
            return p
    return None


# -- zigzag predicates ------------------------------------------------------------


def is_z_transitive(group: AutomorphismGroup, decomp: ZigzagDecomposition) -> bool:
    return group.zigzag_orbits(decomp) <= 1


def is_z_uniform(decomp: ZigzagDecomposition) -> bool:
    """Structural proxy: all zigzags share length, signature and Int multiset."""
    keys = {(z.length, z.signature, z.int_vector) for z in decomp.zigzags}
    return len(keys) <= 1


def orbit_report(group: AutomorphismGroup, decomp: ZigzagDecomposition) -> dict:
    return {
        "order": group.order,
        "flag_orbits": group.n_flag_orbits,
        "zigzag_orbits": group.zigzag_orbits(decomp),
        "z_transitive": is_z_transitive(group, decomp),
        "z_uniform": is_z_uniform(decomp),
        "z_knotted": len(decomp) == 1,
    }


def central_involutions(group: AutomorphismGroup, limit: int = 20_000) -> list:
    """Element permutations of central involutions fixing no element."""
    if group.order > limit:
        raise ComplexError(f"group of order {group.order} exceeds the search limit {limit}")
    out = []
    ident = np.arange(group.index.n_flags)
    for i in range(group.order):
        p = group.element(i)
        if np.array_equal(p, ident) or not np.array_equal(p[p], ident):
            continue
        if any(not np.array_equal(p[g], g[p]) for g in group.generators):
            continue
        fp = group.face_permutation(p)
        if np.any(fp == np.arange(len(fp))):
            continue
        out.append(fp)
    return out


# -- special cuts of the 600-cell -----------------------------------------------


def _canonical(sets: np.ndarray, vperms: np.ndarray) -> np.ndarray:
    """Lexicographically least image of each vertex set under the group."""
    out = []
    for s in sets:
        imgs = np.sort(vperms[:, s], axis=1)
        order = np.lexsort(imgs.T[::-1])
        out.append(imgs[order[0]])
    return np.array(out)


def special_cut_orbits(k: int, vperms: np.ndarray, adj) -> list:
    """Orbit representatives of independent k-sets of 600-cell vertices."""
    if k < 1:
        raise ValueError("k must be positive")
    reps = [np.array([0])]
    for _ in range(1, k):
        cand = set()
        for r in reps:
            blocked = set(r.tolist())
            for v in r.tolist():
                blocked |= adj[v]
            for w in range(len(adj)):
                if w not in blocked:
                    cand.add(tuple(sorted(r.tolist() + [w])))
        arr = np.array(sorted(cand))
        canon = _canonical(arr, vperms) if len(arr) else arr
        reps = [np.array(c) for c in sorted({tuple(c.tolist()) for c in canon})]
    return reps


def _independent_count(k: int, allowed: int, nbr: list) -> int:
    if k == 1:
        return allowed.bit_count()
    total = 0
    while allowed:
        low = allowed & -allowed
        v = low.bit_length() - 1
        allowed ^= low
        total += _independent_count(k - 1, allowed & ~nbr[v], nbr)
    return total


def count_special_cut_orbits(k: int, vperms: np.ndarray, adj) -> int:
    """Number of group orbits of independent k-sets, by Burnside's lemma.

    Independent of :func:`special_cut_orbits`: no set is ever canonicalized,
    each group element only contributes the invariant sets it fixes.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = len(adj)
    nbr = [sum(1 << w for w in adj[v]) for v in range(n)]
    total = 0
    for p in np.asarray(vperms).tolist():
        if all(p[v] == v for v in range(n)):
            total += _independent_count(k, (1 << n) - 1, nbr)
            continue
        seen, cyc = 0, []
        for s in range(n):
            if seen >> s & 1:
                continue
            mask, x = 0, s
            while not mask >> x & 1:
                mask |= 1 << x
                x = p[x]
            seen |= mask
            size = mask.bit_count()
            block = 0
            for v in range(n):
                if mask >> v & 1:
                    block |= nbr[v]
            if size <= k and not block & mask:
                cyc.append((size, mask, block))
        # fixed sets are unions of whole cycles, pairwise non-adjacent
        def fixed(i, left, block):
            if left == 0:
                return 1
            return sum(
                fixed(j + 1, left - size, block | b)
                for j in range(i, len(cyc))
                for size, mask, b in (cyc[j],)
                if size <= left and not mask & block
            )
        total += fixed(0, k, 0)
    if total % len(vperms):
        raise ArithmeticError("Burnside sum is not divisible by the group order")
    return total // len(vperms)


def enumerate_special_cut_classes(k: int, max_k: int = 3, dedupe: bool = True):
    """Count non-isomorphic special cuts with ``k`` removed vertices.

    Returns ``(count, representatives)`` where representatives are vertex sets.
    """
    from .constructors import cell600, cell600_skeleton, special_cut
    from .zigzags import zigzags

    if not 1 <= k <= max_k:
        raise ValueError(f"k must be in 1..{max_k}")
    K = cell600()
    group = automorphisms(K)
    vperms = group.vertex_permutations()
    reps = special_cut_orbits(k, vperms, cell600_skeleton())
    if not dedupe:
        return len(reps), reps
    classes: dict = {}
    kept = []
    for r in reps:
        C = special_cut(K, r.tolist())
        fi = FlagIndex(C)
        key = (C.counts, tuple(sorted(zigzags(C, fi).z_vector().items())))
        found = False
        for other_fi in classes.get(key, []):
            if find_isomorphism(fi, other_fi) is not None:
                found = True
                break
        if not found:
            classes.setdefault(key, []).append(fi)
            kept.append(r)
    return len(kept), kept


__all__ = [
    "AutomorphismGroup", "automorphisms", "is_isomorphic", "find_isomorphism",
    "is_z_transitive", "is_z_uniform", "orbit_report", "central_involutions",
    "enumerate_special_cut_classes", "special_cut_orbits", "count_special_cut_orbits", "flag_invariants",
]
