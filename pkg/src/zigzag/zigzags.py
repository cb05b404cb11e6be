"""Zigzags: T-orbits paired with their reverses, signatures and intersections."""
from __future__ import annotations

import csv
import io
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .complex import Complex, ComplexError
from .flags import FlagIndex


@dataclass(frozen=True)
class Zigzag:
    """One zigzag, identified with its reverse.

    ``forward`` and ``reverse`` are T-orbit ids (equal when the orbit is its
    own reverse).  ``int_vector`` lists ``((c_I, c_II), multiplicity)``.
    """

    id: int
    length: int
    n_I: int
    n_II: int
    forward: int
    reverse: int
    start: int
    int_vector: tuple

    @property
    def self_reverse(self) -> bool:
        return self.forward == self.reverse

    @property
    def signature(self) -> tuple:
        return (self.n_I, self.n_II)

    @property
    def simple(self) -> bool:
        return self.n_I == 0 and self.n_II == 0

    def int_sum(self) -> int:
        return sum((a + b) * m for (a, b), m in self.int_vector)

    def length_identity_holds(self) -> bool:
        return self.length == 2 * (self.n_I + self.n_II) + self.int_sum()


class ZigzagDecomposition:
    """All zigzags of a complex.

    Per-flag arrays: ``zigzag_of[f]`` (zigzag id), ``orientation[f]``
    (+1 in the forward orbit, -1 in the reverse one) and ``position[f]``
    (index along its T-orbit, counted from the orbit's smallest flag).
    ``pairs[(i, j)]`` for ``i < j`` holds the normalized intersection pair.
    """

    def __init__(self, K: Complex, index: FlagIndex | None = None):
        if K.dim < 2:
            # there the reverse of a flag is its sigma_1 image, so signatures are undefined
            raise ComplexError(f"zigzags need a complex of dimension at least 2, got {K.dim}")
        self.complex = K
        self.index = fi = index if index is not None else FlagIndex(K)
        T = fi.translate
        orbit, position, n_orbits = _kernels.perm_cycles(T)
        # per-flag arrays dominate memory on large instances
        orbit = orbit.astype(fi.id_dtype, copy=False)
        position = position.astype(fi.id_dtype, copy=False)
        R = fi.reverse
        first = np.full(n_orbits, fi.n_flags, dtype=np.int64)
        np.minimum.at(first, orbit, np.arange(fi.n_flags))
        partner = orbit[R[first]]
        if np.any(partner[orbit] != orbit[R]):
            raise ComplexError("reverse flags do not map T-orbits onto T-orbits")
        self.orbit_of = orbit
        self.position = position
        self.n_orbits = n_orbits
        self.partner = partner

        forward_orbits = np.nonzero(np.arange(n_orbits) <= partner)[0].tolist()
        self.self_reverse_count = int(np.sum(partner == np.arange(n_orbits)))

        # provisional ids, fixed after canonical sorting
        fw = np.asarray(forward_orbits, dtype=np.int64)
        prov = np.empty(n_orbits, dtype=fi.id_dtype)
        prov[fw] = np.arange(len(fw))
        prov[partner[fw]] = np.arange(len(fw))
        zz = prov[orbit]
        orient = np.where(orbit == fw[zz], 1, -1).astype(np.int8)
        selfrev = partner[orbit] == orbit
        if np.any(selfrev):
            # an orbit equal to its own reverse: split by position parity
            orient[selfrev] = np.where(position[selfrev] % 2 == 0, 1, -1)
        del selfrev

        n = len(forward_orbits)
        f = np.nonzero(orient == 1)[0]
        g = fi.sigma[0][f]
        key = (zz[f].astype(np.int64) * n + zz[g]) * 2 + (orient[g] != 1)
        del f, g
        uniq, cnt = np.unique(key, return_counts=True)
        del key
        typ = uniq % 2
        src, dst = np.divmod(uniq // 2, n)

        # self-intersections: every one is seen from both of its flags
        diag = src == dst
        selfcnt = np.zeros((n, 2), dtype=np.int64)
        np.add.at(selfcnt, (src[diag], typ[diag]), cnt[diag])
        if np.any(selfcnt % 2):
            i = int(np.nonzero(np.any(selfcnt % 2, axis=1))[0][0])
            raise ComplexError(f"odd self-intersection count on zigzag {i}")
        sig = selfcnt // 2

        # ordered pairs (src, dst) with the counts seen from src
        off = ~diag
        pid, inv = np.unique(src[off] * n + dst[off], return_inverse=True)
        ab = np.zeros((len(pid), 2), dtype=np.int64)
        np.add.at(ab, (inv, typ[off]), cnt[off])
        pi, pj = np.divmod(pid, n)
        lo, hi = np.minimum(ab[:, 0], ab[:, 1]), np.maximum(ab[:, 0], ab[:, 1])
        # compare each pair with its transpose
        back = np.searchsorted(pid, pj * n + pi)
        back = np.minimum(back, len(pid) - 1)
        found = pid[back] == pj * n + pi if len(pid) else np.zeros(0, dtype=bool)
        asym = ~found | (lo != lo[back]) | (hi != hi[back]) if len(pid) else found
        self.asymmetric_pairs = sorted({(int(min(a, b)), int(max(a, b))) for a, b in zip(pi[asym], pj[asym])})
        # keep one orientation; unmatched transposes keep the side that saw them
        keep = (pi < pj) | ~found

        orbit_len = np.bincount(orbit, minlength=n_orbits)
        lengths = orbit_len[fw] if n else np.zeros(0, dtype=np.int64)
        order = np.lexsort((first[fw], sig[:, 1], sig[:, 0], lengths)) if n else np.zeros(0, dtype=np.int64)
        new_id = np.empty(n, dtype=fi.id_dtype)
        new_id[order] = np.arange(n)
        self.zigzag_of = new_id[zz] if n else zz
        del zz, orbit_len
        self.orientation = orient
        a, b = new_id[pi[keep]].astype(np.int64), new_id[pj[keep]].astype(np.int64)
        self.pair_i, self.pair_j = np.minimum(a, b), np.maximum(a, b)
        self.pair_value = np.stack([lo[keep], hi[keep]], axis=1)
        self._pairs = None

        # Int vectors: count (zigzag, c_I, c_II) over both ends of every pair
        ends = np.concatenate([self.pair_i, self.pair_j])
        vals = np.concatenate([self.pair_value, self.pair_value])
        width = int(vals.max()) + 1 if len(vals) else 1
        ikey, icnt = np.unique((ends * width + vals[:, 0]) * width + vals[:, 1], return_counts=True)
        zid, rest = np.divmod(ikey, width * width)
        ca, cb = np.divmod(rest, width)
        bounds = np.searchsorted(zid, np.arange(n + 1))
        shared = {}
        self.zigzags = []
        for rank, i in enumerate(order.tolist()):
            o = forward_orbits[i]
            lo_, hi_ = bounds[rank], bounds[rank + 1]
            items = tuple(sorted(
                (((int(x), int(y)), int(m)) for x, y, m in zip(ca[lo_:hi_], cb[lo_:hi_], icnt[lo_:hi_])),
                key=lambda kv: (sum(kv[0]), kv[0]),
            ))
            iv = shared.setdefault(items, items)
            self.zigzags.append(
                Zigzag(
                    id=rank,
                    length=int(lengths[i]),
                    n_I=int(sig[i, 0]),
                    n_II=int(sig[i, 1]),
                    forward=int(o),
                    reverse=int(partner[o]),
                    start=int(first[o]),
                    int_vector=iv,
                )
            )

    @property
    def pairs(self) -> dict:
        """``{(i, j): (c_I, c_II)}`` for intersecting zigzags, ``i < j`` (built on first use)."""
        if self._pairs is None:
            self._pairs = {
                (int(i), int(j)): (int(a), int(b))
                for i, j, (a, b) in zip(self.pair_i, self.pair_j, self.pair_value)
            }
        return self._pairs

    # -- queries ------------------------------------------------------------

    def __len__(self):
        return len(self.zigzags)

    def __iter__(self):
        return iter(self.zigzags)

    def __getitem__(self, i) -> Zigzag:
        return self.zigzags[i]

    def flags_of(self, zid: int) -> np.ndarray:
        """Flags of the forward orbit in traversal order."""
        z = self.zigzags[zid]
        T = self.index.translate
        out = np.empty(z.length, dtype=np.int64)
        f = z.start
        for k in range(z.length):
            out[k] = f
            f = T[f]
        return out

    def z_vector(self) -> Counter:
        """Multiset of (length, n_I, n_II)."""
        return Counter((z.length, z.n_I, z.n_II) for z in self.zigzags)

    def lengths(self) -> list:
        return sorted(z.length for z in self.zigzags)

    def bookkeeping_holds(self) -> bool:
        total = sum(z.length if z.self_reverse else 2 * z.length for z in self.zigzags)
        return total == self.index.n_flags

    def z_vector_string(self) -> str:
        return z_vector_string(self)

    def int_strings(self) -> Counter:
        """Multiset of Int strings over all zigzags."""
        return Counter(int_vector_string(z) for z in self.zigzags)

    def signature_violations(self) -> list:
        """Zigzags with non-zero signature (the odd-dimension monitor)."""
        return [z for z in self.zigzags if not z.simple]

    def report(self, fmt: str = "text") -> str:
        return decomposition_report(self, fmt)


def zigzags(K: Complex, index: FlagIndex | None = None) -> ZigzagDecomposition:
    return ZigzagDecomposition(K, index)


# -- formatting -------------------------------------------------------------


def _exp(m: int) -> str:
    if m == 1:
        return ""
    s = str(m)
    return "^" + (s if len(s) == 1 else "{" + s + "}")


def _sub(a: int, b: int) -> str:
    return "_{" + f"{a},{b}" + "}"


def format_z_vector(counts) -> str:
    """Render a multiset of (length, n_I, n_II) in the usual notation."""
    items = sorted(Counter(counts).items())
    simple = [f"{l}{_exp(m)}" for (l, a, b), m in items if a == 0 and b == 0]
    selfint = [f"{l}{_sub(a, b)}{_exp(m)}" for (l, a, b), m in items if (a, b) != (0, 0)]
    parts = [", ".join(p) for p in (simple, selfint) if p]
    return "; ".join(parts)


def z_vector_string(decomp: ZigzagDecomposition) -> str:
    return format_z_vector(decomp.z_vector())


def format_int_vector(items) -> str:
    items = sorted(items, key=lambda kv: (sum(kv[0]), kv[0]))
    return ", ".join(f"({a},{b}){_exp(m)}" for (a, b), m in items)


def int_vector_string(z: Zigzag) -> str:
    return format_int_vector(z.int_vector)


def decomposition_report(decomp: ZigzagDecomposition, fmt: str = "text") -> str:
    rows = [
        (z.id, z.length, z.n_I, z.n_II, int(z.self_reverse), int_vector_string(z))
        for z in decomp.zigzags
    ]
    head = ("id", "length", "n_I", "n_II", "self_reverse", "int")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(rows)
        w.writerow(("z", "", "", "", "", decomp.z_vector_string()))
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"z = {decomp.z_vector_string()}"]
    lines += [f"{i:>5}  l={l:<6} sig=({a},{b}){'  self-reverse' if s else ''}  Int: {iv}" for i, l, a, b, s, iv in rows]
    return "\n".join(lines) + "\n"


# -- zigzag graph -------------------------------------------------------------


def zigzag_graph(decomp: ZigzagDecomposition) -> dict:
    """Adjacency sets: zigzags joined when they intersect."""
    adj = {z.id: set() for z in decomp.zigzags}
    for i, j in zip(decomp.pair_i.tolist(), decomp.pair_j.tolist()):
        adj[i].add(j)
        adj[j].add(i)
    return adj


def zigzag_graph_connected(decomp: ZigzagDecomposition) -> bool:
    n = len(decomp)
    if n <= 1:
        return True
    if not len(decomp.pair_i):
        return False
    r, c = decomp.pair_i, decomp.pair_j
    g = coo_matrix((np.ones(len(r)), (r, c)), shape=(n, n))
    return connected_components(g, directed=False)[0] == 1


def is_z_knotted(decomp: ZigzagDecomposition) -> bool:
    return len(decomp) == 1


def is_orientable(K: Complex) -> bool:
    return FlagIndex(K).is_orientable()


def parse_z_vector(text: str) -> Counter:
    """Inverse of :func:`format_z_vector` (accepts braces or bare exponents)."""
    out = Counter()
    text = text.replace(";", ",").replace(" ", "")
    pat = re.compile(r"(\d+)(?:_\{?(\d+),(\d+)\}?)?(?:\^\{?(\d+)\}?)?")
    for chunk in filter(None, _split_top(text)):
        m = pat.fullmatch(chunk)
        if not m:
            raise ValueError(f"cannot parse z-vector item {chunk!r}")
        l, a, b, e = m.groups()
        out[(int(l), int(a or 0), int(b or 0))] += int(e or 1)
    return out


def parse_int_vector(text: str) -> Counter:
    out = Counter()
    for a, b, e in re.findall(r"\((\d+),(\d+)\)(?:\^\{?(\d+)\}?)?", text.replace(" ", "")):
        a, b = int(a), int(b)
        out[(min(a, b), max(a, b))] += int(e or 1)
    return out


def _split_top(text: str):
    """Split on commas outside braces."""
    depth, cur = 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            yield "".join(cur)
            cur = []
        else:
            cur.append(ch)
    yield "".join(cur)
