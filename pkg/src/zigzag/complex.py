"""Ranked posets with implicit bottom and top: the complex data model.

A :class:`Complex` of dimension ``d`` stores its proper elements (dimensions
``0..d``) as an explicit Hasse diagram.  Element ids are dense integers,
grouped by dimension: all vertices first, then all edges, and so on.  The
bottom and top elements are implicit and addressed as :data:`BOTTOM` and
:data:`TOP` where a lookup needs them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

BOTTOM = -1
TOP = -2


class ComplexError(ValueError):
    """Raised when an input or constructed poset violates the complex axioms."""


class Complex:
    """A finite d-dimensional complex given by its cover relation.

    Parameters
    ----------
    levels
        ``levels[k]`` lists, for every element of dimension ``k``, the local
        indices (within level ``k-1``) of the elements it covers.  Entries
        of ``levels[0]`` are ignored except for their count.
    labels
        Optional hashable label per element, in global id order.
    """

    def __init__(self, levels: Sequence[Sequence[Sequence[int]]], labels=None):
        if len(levels) == 0:
            raise ComplexError("a complex needs at least one level")
        self.dim = len(levels) - 1
        counts = [len(lev) for lev in levels]
        self.counts = tuple(counts)
        offsets = np.zeros(len(counts) + 1, dtype=np.int64)
        offsets[1:] = np.cumsum(counts)
        self.offsets = offsets
        self.n = int(offsets[-1])
        self.dims = np.repeat(np.arange(len(counts)), counts)
        covers = []
        for k, lev in enumerate(levels):
            base = int(offsets[k - 1]) if k > 0 else 0
            for cov in lev:
                if k == 0:
                    covers.append(())
                    continue
                loc = sorted(set(int(c) for c in cov))
                for c in loc:
                    if not 0 <= c < counts[k - 1]:
                        raise ComplexError(f"cover index {c} out of range at dimension {k}")
                covers.append(tuple(base + c for c in loc))
        self.covers = tuple(covers)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != self.n:
                raise ComplexError("one label per element required")
        self.labels = labels
        self._cache = {}

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_vertex_sets(cls, dim: int, faces: Sequence[Iterable[frozenset]], vertex_labels=None):
        """Build a lattice from faces given by vertex sets.

        ``faces[k]`` lists the faces of dimension ``k`` for ``k >= 1`` as
        frozensets of vertex indices; ``faces[0]`` may be the vertex count
        or a list.  Covers follow inclusion between consecutive dimensions.
        """
        f0 = faces[0]
        nv = f0 if isinstance(f0, int) else len(list(f0))
        levels = [[()] * nv]
        vlabels = list(vertex_labels) if vertex_labels is not None else list(range(nv))
        labels = [frozenset([v]) for v in range(nv)]
        prev = [frozenset([v]) for v in range(nv)]
        for k in range(1, dim + 1):
            cur = sorted((frozenset(f) for f in faces[k]), key=lambda s: sorted(s))
            if k == 1:
                index = {next(iter(p)): i for i, p in enumerate(prev)}
                lev = [tuple(sorted(index[v] for v in f)) for f in cur]
            else:
                by_vertex = {}
                for i, p in enumerate(prev):
                    for v in p:
                        by_vertex.setdefault(v, []).append(i)
                lev = []
                for f in cur:
                    cand = set()
                    for v in f:
                        cand.update(by_vertex.get(v, ()))
                    lev.append(tuple(sorted(i for i in cand if prev[i] < f)))
            levels.append(lev)
            labels.extend(cur)
            prev = cur
        out = cls(levels, labels=labels)
        out._cache["vertex_labels"] = vlabels
        return out

    @classmethod
    def from_polygons(cls, polygons: Sequence[Sequence[int]], vertex_labels=None):
        """Build a 2-complex (map) from faces given as cyclic vertex sequences."""
        nv = 1 + max(v for p in polygons for v in p)
        edge_index: dict[frozenset, int] = {}
        edges = []
        faces = []
        for poly in polygons:
            fe = []
            m = len(poly)
            for i in range(m):
                e = frozenset((poly[i], poly[(i + 1) % m]))
                if len(e) != 2:
                    raise ComplexError("degenerate polygon edge")
                if e not in edge_index:
                    edge_index[e] = len(edges)
                    edges.append(tuple(sorted(e)))
                fe.append(edge_index[e])
            faces.append(tuple(sorted(fe)))
        labels = [frozenset([v]) for v in range(nv)]
        labels += [frozenset(e) for e in edges]
        labels += [frozenset(p) for p in polygons]
        out = cls([[()] * nv, edges, faces], labels=labels)
        if vertex_labels is not None:
            out._cache["vertex_labels"] = list(vertex_labels)
        return out

    # -- basic queries ----------------------------------------------------

    @property
    def f_vector(self) -> tuple:
        return self.counts

    def faces(self, k: int) -> range:
        """Global ids of the elements of dimension ``k``."""
        return range(int(self.offsets[k]), int(self.offsets[k + 1]))

    def dim_of(self, x: int) -> int:
        if x == BOTTOM:
            return -1
        if x == TOP:
            return self.dim + 1
        return int(self.dims[x])

    def local(self, x: int) -> int:
        return x - int(self.offsets[self.dims[x]])

    @property
    def up(self) -> tuple:
        """Upward covers of every element (the elements covering it)."""
        if "up" not in self._cache:
            up = [[] for _ in range(self.n)]
            for x, cov in enumerate(self.covers):
                for y in cov:
                    up[y].append(x)
            self._cache["up"] = tuple(tuple(u) for u in up)
        return self._cache["up"]

    def down_of(self, x: int) -> tuple:
        """Covers of ``x`` with the implicit bottom/top resolved."""
        if x == TOP:
            return tuple(self.faces(self.dim))
        if x == BOTTOM:
            return ()
        if self.dims[x] == 0:
            return (BOTTOM,)
        return self.covers[x]

    def up_of(self, x: int) -> tuple:
        if x == BOTTOM:
            return tuple(self.faces(0))
        if x == TOP:
            return ()
        if self.dims[x] == self.dim:
            return (TOP,)
        return self.up[x]

    def up_csr(self, k: int):
        """CSR arrays (indptr, global targets) of the upward covers of level ``k``."""
        key = ("up_csr", k)
        if key not in self._cache:
            up = self.up
            ids = self.faces(k)
            lens = np.fromiter((len(up[x]) for x in ids), dtype=np.int64, count=len(ids))
            indptr = np.zeros(len(ids) + 1, dtype=np.int64)
            indptr[1:] = np.cumsum(lens)
            flat = np.fromiter((y for x in ids for y in up[x]), dtype=np.int64, count=int(indptr[-1]))
            self._cache[key] = (indptr, flat)
        return self._cache[key]

    def vertex_set(self, x: int) -> frozenset:
        """Vertices below ``x``."""
        vs = self._cache.setdefault("vertex_sets", {})
        if x in vs:
            return vs[x]
        if x == TOP:
            out = frozenset(self.faces(0))
        elif self.dims[x] == 0:
            out = frozenset([x])
        else:
            out = frozenset().union(*(self.vertex_set(y) for y in self.covers[x]))
        vs[x] = out
        return out

    def below(self, x: int) -> set:
        """All proper elements ``<= x`` (including ``x``)."""
        out = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in self.covers[y]:
                if z not in out:
                    out.add(z)
                    stack.append(z)
        return out

    def above(self, x: int) -> set:
        out = {x}
        stack = [x]
        up = self.up
        while stack:
            y = stack.pop()
            for z in up[y]:
                if z not in out:
                    out.add(z)
                    stack.append(z)
        return out

    @property
    def diamonds(self) -> "DiamondTable":
        if "diamonds" not in self._cache:
            self._cache["diamonds"] = DiamondTable.build(self)
        return self._cache["diamonds"]

    def cover_pairs(self) -> set:
        return {(x, y) for x, cov in enumerate(self.covers) for y in cov}

    def same_covers(self, other: "Complex") -> bool:
        return self.dim == other.dim and self.counts == other.counts and self.covers == other.covers

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.same_covers(other)

    def __hash__(self):
        return hash((self.dim, self.counts, self.covers))

    def __repr__(self):
        return f"Complex(dim={self.dim}, f={self.counts})"

    def levels(self) -> list:
        """Level-wise local cover lists, suitable for the constructor."""
        out = []
        for k in range(self.dim + 1):
            base = int(self.offsets[k - 1]) if k > 0 else 0
            out.append([tuple(c - base for c in self.covers[x]) for x in self.faces(k)])
        return out


@dataclass
class DiamondTable:
    """Middle elements of every rank-2 interval, including those at bottom/top."""

    middles: dict
    bad: list = field(default_factory=list)

    @classmethod
    def build(cls, K: Complex) -> "DiamondTable":
        acc: dict = {}
        for c in list(range(K.n)) + [TOP]:
            for b in K.down_of(c):
                if b == BOTTOM:
                    continue
                for a in K.down_of(b):
                    acc.setdefault((a, c), []).append(b)
        if K.dim == 0:
            acc[(BOTTOM, TOP)] = list(K.faces(0))
        middles = {}
        bad = []
        for key, mids in acc.items():
            if len(mids) == 2:
                middles[key] = (mids[0], mids[1])
            else:
                bad.append((key, tuple(mids)))
        bad.sort()
        return cls(middles, bad)

    def other(self, a: int, c: int, b: int) -> int:
        """The middle of ``[a, c]`` different from ``b``."""
        try:
            m0, m1 = self.middles[(a, c)]
        except KeyError:
            raise ComplexError(f"no diamond over ({a}, {c})") from None
        if b == m0:
            return m1
        if b == m1:
            return m0
        raise ComplexError(f"{b} is not a middle of ({a}, {c})")


@dataclass
class ValidationReport:
    ranked: bool
    diamond: bool
    flag_connected: bool | None
    residues_connected: bool | None
    counts: tuple
    is_lattice: bool | None = None
    orientable: bool | None = None
    n_flags: int | None = None
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return bool(self.ranked and self.diamond and self.flag_connected and self.residues_connected)

    def summary(self) -> str:
        parts = [
            f"ranked={self.ranked}",
            f"diamond={self.diamond}",
            f"flag_connected={self.flag_connected}",
            f"residues_connected={self.residues_connected}",
            f"lattice={self.is_lattice}",
            f"orientable={self.orientable}",
            f"f={self.counts}",
        ]
        if self.witness:
            parts.append(f"witness: {self.witness}")
        return ", ".join(parts)


LATTICE_CHECK_LIMIT = 3000


def validate(K: Complex, lattice: bool | None = None) -> ValidationReport:
    """Check the complex axioms; failures are reported, never raised.

    ``lattice`` forces (True) or skips (False) the join/meet uniqueness test;
    by default it runs when the complex has at most ``LATTICE_CHECK_LIMIT``
    elements.
    """
    from .flags import FlagIndex, FlagCapExceeded

    report = ValidationReport(False, False, None, None, K.counts)
    # rankedness: every element lies on a chain from bottom to top
    up = K.up
    for x in range(K.n):
        k = int(K.dims[x])
        if k > 0 and not K.covers[x]:
            report.witness = f"element {x} of dimension {k} covers nothing"
            return report
        if k < K.dim and not up[x]:
            report.witness = f"element {x} of dimension {k} is maximal below top"
            return report
    if any(c == 0 for c in K.counts):
        report.witness = "empty dimension"
        return report
    report.ranked = True

    table = K.diamonds
    if table.bad:
        (a, c), mids = table.bad[0]
        report.witness = f"interval ({_name(a)}, {_name(c)}) has {len(mids)} middles {list(mids)}"
        return report
    report.diamond = True

    try:
        idx = FlagIndex(K)
    except FlagCapExceeded:
        raise
    report.n_flags = idx.n_flags
    report.flag_connected = idx.is_connected()
    bad = idx.disconnected_residue()
    report.residues_connected = bad is None
    if bad is not None:
        report.witness = f"flags through element {bad} are not connected by moves fixing it"
    elif not report.flag_connected:
        report.witness = "flag graph is disconnected"
    report.orientable = idx.is_orientable()
    if lattice or (lattice is None and K.n <= LATTICE_CHECK_LIMIT):
        report.is_lattice = is_lattice(K)
    return report


def _name(x):
    return {BOTTOM: "bottom", TOP: "top"}.get(x, str(x))


def is_lattice(K: Complex) -> bool:
    """True iff every pair of elements has a unique least upper bound.

    In a finite bounded poset this also gives unique greatest lower bounds.
    Ids are ordered by dimension, so the lowest set bit of a set of common
    upper bounds is an element of minimal dimension in it.
    """
    n = K.n
    upsets = [0] * n
    top_bit = 1 << n
    # process from the top dimension downwards
    for x in reversed(range(n)):
        m = (1 << x) | top_bit
        for y in K.up[x]:
            m |= upsets[y]
        upsets[x] = m
    for x in range(n):
        ux = upsets[x]
        for y in range(x + 1, n):
            common = ux & upsets[y]
            low = common & -common
            s = low.bit_length() - 1
            if s == n:
                continue  # only the top is common
            if upsets[s] != common:
                return False
    return True


def require_valid(K: Complex, what: str = "complex") -> Complex:
    rep = validate(K, lattice=False)
    if not rep.ok:
        raise ComplexError(f"{what} violates the complex axioms: {rep.witness}")
    return K


def sigma(K: Complex, flag: Sequence[int], i: int) -> tuple:
    """Replace the dimension ``i-1`` entry of ``flag`` by the other middle."""
    d = K.dim
    if not 1 <= i <= d + 1:
        raise IndexError(f"sigma index {i} outside 1..{d + 1}")
    f = tuple(flag)
    lo = f[i - 2] if i >= 2 else BOTTOM
    hi = f[i] if i <= d else TOP
    new = K.diamonds.other(lo, hi, f[i - 1])
    return f[: i - 1] + (new,) + f[i:]


# -- structural constructions ---------------------------------------------


def dual(K: Complex) -> Complex:
    """Reverse the order: dimension ``i`` becomes ``d - i``."""
    d = K.dim
    up = K.up
    levels = []
    labels = [] if K.labels is not None else None
    for k in range(d + 1):
        old = d - k
        base = int(K.offsets[old + 1]) if old < d else 0
        ids = K.faces(old)
        if k == 0:
            levels.append([()] * len(ids))
        else:
            levels.append([tuple(y - base for y in up[x]) for x in ids])
        if labels is not None:
            labels.extend(K.labels[x] for x in ids)
    return Complex(levels, labels=labels)


def element_map_of_dual(K: Complex) -> np.ndarray:
    """Global id in ``dual(K)`` of every element of ``K``."""
    d = K.dim
    out = np.empty(K.n, dtype=np.int64)
    pos = 0
    for k in range(d + 1):
        ids = K.faces(d - k)
        out[ids.start : ids.stop] = np.arange(pos, pos + len(ids))
        pos += len(ids)
    return out


def segment() -> Complex:
    """The 0-dimensional complex with two vertices (boundary of a segment)."""
    return Complex([[(), ()]], labels=[frozenset([0]), frozenset([1])])


def _extended_faces(K: Complex):
    """Proper elements plus the top, with dimensions, for product bookkeeping."""
    elems = list(range(K.n)) + [TOP]
    dims = {x: K.dim_of(x) for x in elems}
    down = {x: tuple(y for y in K.down_of(x) if y != BOTTOM) for x in elems}
    return elems, dims, down


def product(K1: Complex, K2: Complex) -> Complex:
    """Face lattice of the product of the two underlying polytopes."""
    e1, dim1, down1 = _extended_faces(K1)
    e2, dim2, down2 = _extended_faces(K2)
    d = K1.dim + K2.dim + 1
    by_dim: list[list] = [[] for _ in range(d + 1)]
    for F in e1:
        for G in e2:
            if F == TOP and G == TOP:
                continue
            by_dim[dim1[F] + dim2[G]].append((F, G))
    for lev in by_dim:
        lev.sort(key=lambda p: (p[0] if p[0] != TOP else 1 << 60, p[1] if p[1] != TOP else 1 << 60))
    index = [{p: i for i, p in enumerate(lev)} for lev in by_dim]
    levels = []
    labels = []
    for k, lev in enumerate(by_dim):
        cur = []
        for F, G in lev:
            cov = [index[k - 1][(Fp, G)] for Fp in down1[F]] if k > 0 else []
            cov += [index[k - 1][(F, Gp)] for Gp in down2[G]] if k > 0 else []
            cur.append(tuple(cov))
            labels.append((F, G))
        levels.append(cur)
    return Complex(levels, labels=labels)


def pyramid(K: Complex) -> Complex:
    """Cone over ``K`` with a single apex; the base ``K`` becomes a facet."""
    return _cone(K, apexes=1, base=True)


def bipyramid(K: Complex) -> Complex:
    """Two apexes joined to ``K``; no face contains both apexes."""
    return _cone(K, apexes=2, base=False)


def _cone(K: Complex, apexes: int, base: bool) -> Complex:
    d = K.dim
    counts = K.counts
    levels = []
    labels = []
    # level k: K's faces of dim k (k <= d), then cones over level k-1 per apex
    for k in range(d + 2):
        lev = []
        if k <= d:
            kb = int(K.offsets[k - 1]) if k > 0 else 0
            for x in K.faces(k):
                lev.append(tuple(c - kb for c in K.covers[x]))
                labels.append(("K", x))
        for a in range(apexes):
            if k == 0:
                lev.append(())
                labels.append(("apex", a))
                continue
            prev_plain = counts[k - 1]
            prev_apex_base = prev_plain + (a * counts[k - 2] if k >= 2 else a)
            for i, x in enumerate(K.faces(k - 1)):
                cov = [i]
                if k - 1 == 0:
                    cov.append(prev_plain + a)  # apex vertex
                else:
                    kb = int(K.offsets[k - 2]) if k >= 2 else 0
                    cov.extend(prev_apex_base + (c - kb) for c in K.covers[x])
                lev.append(tuple(cov))
                labels.append(("cone", a, x))
        if k == d + 1 and base:
            lev.append(tuple(range(counts[d])))
            labels.append(("base",))
        levels.append(lev)
    return Complex(levels, labels=labels)


def augment(K: Complex, facet: int) -> Complex:
    """Replace ``facet`` by a pyramid over it with a new apex vertex."""
    d = K.dim
    if not 0 <= facet < K.n or K.dim_of(facet) != d:
        raise ComplexError(f"element {facet} is not a facet (dimension {d})")
    inside = K.below(facet) - {facet}
    keep = [[x for x in K.faces(k) if x != facet] for k in range(d + 1)]
    cones = [[] for _ in range(d + 1)]  # cones[k]: faces G of dim k-1 giving a cone of dim k
    cones[0] = [BOTTOM]
    for k in range(1, d + 1):
        cones[k] = sorted(x for x in inside if K.dims[x] == k - 1)
    index = []
    for k in range(d + 1):
        idx = {("K", x): i for i, x in enumerate(keep[k])}
        idx.update({("cone", g): len(keep[k]) + i for i, g in enumerate(cones[k])})
        index.append(idx)
    levels = []
    labels = []
    for k in range(d + 1):
        lev = []
        for x in keep[k]:
            lev.append(tuple(index[k - 1][("K", y)] for y in K.covers[x]) if k > 0 else ())
            labels.append(("K", x))
        for g in cones[k]:
            if k == 0:
                lev.append(())
            else:
                cov = [index[k - 1][("K", g)]]
                below_g = K.down_of(g)
                cov.extend(index[k - 1][("cone", y)] for y in below_g)
                lev.append(tuple(cov))
            labels.append(("cone", g))
        levels.append(lev)
    return require_valid(Complex(levels, labels=labels), "augmentation")


def quotient(K: Complex, inv) -> Complex:
    """Fold ``K`` by a fixed-point-free involutive automorphism on elements."""
    inv = np.asarray(inv, dtype=np.int64)
    if inv.shape != (K.n,):
        raise ComplexError("involution must map every element")
    if np.any(inv[inv] != np.arange(K.n)):
        raise ComplexError("map is not an involution")
    if np.any(inv == np.arange(K.n)):
        x = int(np.nonzero(inv == np.arange(K.n))[0][0])
        raise ComplexError(f"involution fixes element {x}")
    if np.any(K.dims[inv] != K.dims):
        raise ComplexError("involution does not preserve dimension")
    for x in range(K.n):
        if set(inv[list(K.covers[x])].tolist()) != set(K.covers[int(inv[x])]):
            raise ComplexError(f"involution is not an automorphism at element {x}")
    levels = []
    labels = []
    rep_index = {}
    for k in range(K.dim + 1):
        reps = sorted(x for x in K.faces(k) if x < inv[x])
        for i, x in enumerate(reps):
            rep_index[x] = i
            rep_index[int(inv[x])] = i
        if k == 0:
            levels.append([()] * len(reps))
        else:
            levels.append([tuple(sorted({rep_index[y] for y in K.covers[x]})) for x in reps])
        labels.extend((x, int(inv[x])) for x in reps)
    return require_valid(Complex(levels, labels=labels), "quotient")


def involution_from_labels(K: Complex, relabel: Callable[[Hashable], Hashable]) -> np.ndarray:
    """Element involution induced by a map on labels (e.g. a point reflection)."""
    if K.labels is None:
        raise ComplexError("complex has no labels")
    where = {lab: i for i, lab in enumerate(K.labels)}
    try:
        return np.array([where[relabel(lab)] for lab in K.labels], dtype=np.int64)
    except KeyError as exc:
        raise ComplexError(f"relabelled element {exc} not present") from None


# -- Hasse file format ------------------------------------------------------


def write_hasse(K: Complex, path_or_file) -> None:
    lines = [f"dim {K.dim}"]
    for x in range(K.n):
        lines.append(" ".join(str(v) for v in (x, int(K.dims[x]), *K.covers[x])))
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as fh:
            fh.write(text)


class FormatError(ValueError):
    """Malformed input file; the message carries the line number."""


def read_hasse(path_or_file) -> Complex:
    if hasattr(path_or_file, "read"):
        text = path_or_file.read()
    else:
        with open(path_or_file) as fh:
            text = fh.read()
    return parse_hasse(text)


def parse_hasse(text: str) -> Complex:
    dim = None
    rows = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if dim is None:
            if tok[0] != "dim" or len(tok) != 2:
                raise FormatError(f"line {lineno}: expected 'dim d'")
            try:
                dim = int(tok[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad dimension {tok[1]!r}") from None
            if dim < 0:
                raise FormatError(f"line {lineno}: negative dimension")
            continue
        try:
            vals = [int(t) for t in tok]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token") from None
        if len(vals) < 2 or vals[0] < 0:
            raise FormatError(f"line {lineno}: expected 'id dim covers...'")
        eid, edim, covs = vals[0], vals[1], vals[2:]
        if eid in rows:
            raise FormatError(f"line {lineno}: duplicate id {eid}")
        if not 0 <= edim <= dim:
            raise FormatError(f"line {lineno}: dimension {edim} outside 0..{dim}")
        if edim == 0 and covs:
            raise FormatError(f"line {lineno}: vertices cover nothing")
        rows[eid] = (edim, covs, lineno)
    if dim is None:
        raise FormatError("line 1: missing 'dim d' header")
    order = sorted(rows, key=lambda e: (rows[e][0], e))
    local = {}
    per_dim = [[] for _ in range(dim + 1)]
    for e in order:
        k = rows[e][0]
        local[e] = len(per_dim[k])
        per_dim[k].append(e)
    levels = []
    for k in range(dim + 1):
        lev = []
        for e in per_dim[k]:
            _, covs, lineno = rows[e]
            cur = []
            for c in covs:
                if c not in rows:
                    raise FormatError(f"line {lineno}: unknown cover id {c}")
                if rows[c][0] != k - 1:
                    raise FormatError(f"line {lineno}: cover {c} is not of dimension {k - 1}")
                cur.append(local[c])
            lev.append(tuple(cur))
        levels.append(lev)
    return Complex(levels)
