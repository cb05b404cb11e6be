"""Maps as flag systems (a, b, c) and the Lins operations."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .complex import Complex, ComplexError, FormatError, require_valid
from .flags import FlagIndex

LINS_OPS = ("identity", "dual", "phial", "phial_dual", "skew", "skew_dual")


class FlagSystem:
    """Three involutions on ``range(n)`` with ``a c = c a``."""

    def __init__(self, a, b, c, check: bool = True):
        self.a = np.asarray(a, dtype=np.int64)
        self.b = np.asarray(b, dtype=np.int64)
        self.c = np.asarray(c, dtype=np.int64)
        self.n = len(self.a)
        if check:
            self.check()

    def check(self) -> None:
        ident = np.arange(self.n)
        for name in "abc":
            p = getattr(self, name)
            if p.shape != (self.n,) or not np.array_equal(np.sort(p), ident):
                raise ComplexError(f"{name} is not a permutation of {self.n} flags")
            if not np.array_equal(p[p], ident):
                raise ComplexError(f"{name} is not an involution")
        ac = self.a[self.c]
        if not np.array_equal(ac[ac], ident):
            raise ComplexError("(ac)^2 is not the identity")
        if _kernels.residue_labels(self.gens, range(3))[1] != 1:
            raise ComplexError("flag system is not connected")

    @property
    def gens(self) -> np.ndarray:
        return np.stack([self.a, self.b, self.c])

    @property
    def ac(self) -> np.ndarray:
        return self.a[self.c]

    def orbits(self, *perms) -> tuple:
        return _kernels.residue_labels(np.stack(perms), range(len(perms)))

    def vertex_labels(self) -> np.ndarray:
        return self.orbits(self.b, self.c)[0]

    def is_orientable(self) -> bool:
        _, bip = _kernels.bfs_parity(self.gens, 0)
        return bool(bip)

    def __eq__(self, other):
        return (
            isinstance(other, FlagSystem)
            and np.array_equal(self.a, other.a)
            and np.array_equal(self.b, other.b)
            and np.array_equal(self.c, other.c)
        )

    def __repr__(self):
        return f"FlagSystem(n={self.n})"


def from_complex2(K: Complex) -> FlagSystem:
    if K.dim != 2:
        raise ComplexError("a map is a 2-dimensional complex")
    s = FlagIndex(K).sigma
    return FlagSystem(s[0], s[1], s[2])


def to_complex(fs: FlagSystem) -> Complex:
    """Faces as orbits: vertices <b,c>, edges <a,c>, faces <a,b>."""
    v, nv = fs.orbits(fs.b, fs.c)
    e, ne = fs.orbits(fs.a, fs.c)
    f, nf = fs.orbits(fs.a, fs.b)
    ev = np.unique(np.stack([e, v], axis=1), axis=0)
    fe = np.unique(np.stack([f, e], axis=1), axis=0)
    edges = [[] for _ in range(ne)]
    for x, y in ev.tolist():
        edges[x].append(y)
    faces = [[] for _ in range(nf)]
    for x, y in fe.tolist():
        faces[x].append(y)
    return require_valid(Complex([[()] * nv, edges, faces]), "map")


def lins(op: str, fs: FlagSystem) -> FlagSystem:
    a, b, c = fs.a, fs.b, fs.c
    ac = a[c]
    table = {
        "identity": (a, b, c),
        "dual": (c, b, a),
        "phial": (a, b, ac),
        "phial_dual": (ac, b, a),
        "skew": (ac, b, c),
        "skew_dual": (c, b, ac),
    }
    if op not in table:
        raise ValueError(f"unknown operation {op!r}; choose from {', '.join(LINS_OPS)}")
    return FlagSystem(*table[op])


@dataclass(frozen=True)
class MapCensus:
    v: Counter
    p: Counter
    z: Counter
    vertices: int
    edges: int
    faces: int
    chi: int
    orientable: bool

    @property
    def genus(self) -> int | None:
        return (2 - self.chi) // 2 if self.orientable else None

    @property
    def crosscaps(self) -> int | None:
        return None if self.orientable else 2 - self.chi

    def edge_identity_holds(self) -> bool:
        twice = 2 * self.edges
        return all(sum(k * m for k, m in vec.items()) == twice for vec in (self.v, self.p, self.z))


def _orbit_sizes(labels, n_orb) -> Counter:
    sizes = np.bincount(labels, minlength=n_orb) // 2
    return Counter(sizes.tolist())


def census(fs: FlagSystem) -> MapCensus:
    v, nv = fs.orbits(fs.b, fs.c)
    f, nf = fs.orbits(fs.a, fs.b)
    z, nz = fs.orbits(fs.ac, fs.b)
    ne = fs.n // 4
    return MapCensus(
        v=_orbit_sizes(v, nv),
        p=_orbit_sizes(f, nf),
        z=_orbit_sizes(z, nz),
        vertices=nv,
        edges=ne,
        faces=nf,
        chi=nv - ne + nf,
        orientable=fs.is_orientable(),
    )


def euler_characteristic(fs: FlagSystem) -> int:
    return census(fs).chi


def skeleton_bipartition(fs: FlagSystem):
    """The two colour classes of the vertex-edge graph, or ``None`` if not bipartite."""
    v, nv = fs.orbits(fs.b, fs.c)
    side = np.full(nv, -1)
    adj = [set() for _ in range(nv)]
    for x in range(fs.n):
        adj[v[x]].add(int(v[fs.a[x]]))
    side[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if side[y] == -1:
                side[y] = 1 - side[x]
                stack.append(y)
            elif side[y] == side[x]:
                return None
    return set(np.nonzero(side == 0)[0].tolist()), set(np.nonzero(side == 1)[0].tolist())


def twist(fs: FlagSystem, W) -> FlagSystem:
    """Reverse the rotation at every vertex of ``W`` (vertex ids as in :meth:`vertex_labels`)."""
    parity, bip = _kernels.bfs_parity(fs.gens, 0)
    if not bip:
        raise ComplexError("twisting needs an orientable map")
    W = set(int(w) for w in W)
    darts = np.nonzero(parity == parity[0])[0]
    did = np.full(fs.n, -1, dtype=np.int64)
    did[darts] = np.arange(len(darts))
    rho = did[fs.b[fs.c[darts]]]
    alpha = did[fs.c[fs.a[darts]]]
    vert = fs.vertex_labels()[darts]
    rho_inv = np.empty_like(rho)
    rho_inv[rho] = np.arange(len(rho))
    flip = np.isin(vert, list(W))
    rho2 = np.where(flip, rho_inv, rho)
    rho2_inv = np.empty_like(rho2)
    rho2_inv[rho2] = np.arange(len(rho2))
    m = len(darts)
    x = np.arange(m)
    plus, minus = x, x + m
    a = np.empty(2 * m, dtype=np.int64)
    b = np.empty(2 * m, dtype=np.int64)
    c = np.empty(2 * m, dtype=np.int64)
    c[plus], c[minus] = minus, plus
    b[minus] = rho2
    b[plus] = rho2_inv + m
    a[plus] = alpha + m
    a[minus] = alpha
    return FlagSystem(a, b, c)


def fs_isomorphic(fs1: FlagSystem, fs2: FlagSystem) -> bool:
    if fs1.n != fs2.n:
        return False
    c1, c2 = census(fs1), census(fs2)
    if (c1.v, c1.p, c1.z, c1.orientable) != (c2.v, c2.p, c2.z, c2.orientable):
        return False
    g1, g2 = fs1.gens, fs2.gens
    for y in range(fs2.n):
        if _kernels.extend_map(g1, g2, 0, y) is not None:
            return True
    return False


# -- file format ---------------------------------------------------------------


def write_fs(fs: FlagSystem, path_or_file) -> None:
    lines = [f"flags {fs.n}"]
    for name in "abc":
        lines.append(f"{name}: " + " ".join(str(int(x)) for x in getattr(fs, name)))
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w") as fh:
            fh.write(text)


def parse_fs(text: str) -> FlagSystem:
    rows = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    rows = [(i, ln) for i, ln in rows if ln]
    if not rows:
        raise FormatError("line 1: empty flag-system file")
    i, head = rows[0]
    tok = head.split()
    if len(tok) != 2 or tok[0] != "flags" or not tok[1].isdigit():
        raise FormatError(f"line {i}: expected 'flags n'")
    n = int(tok[1])
    perms = {}
    for i, ln in rows[1:]:
        name, sep, rest = ln.partition(":")
        name = name.strip()
        if not sep or name not in "abc" or len(name) != 1:
            raise FormatError(f"line {i}: expected 'a:', 'b:' or 'c:'")
        if name in perms:
            raise FormatError(f"line {i}: duplicate '{name}' line")
        try:
            vals = [int(t) for t in rest.split()]
        except ValueError:
            raise FormatError(f"line {i}: non-integer entry") from None
        if len(vals) != n:
            raise FormatError(f"line {i}: expected {n} entries, got {len(vals)}")
        if any(v < 0 or v >= n for v in vals):
            raise FormatError(f"line {i}: entry out of range 0..{n - 1}")
        perms[name] = vals
    missing = [k for k in "abc" if k not in perms]
    if missing:
        raise FormatError(f"line {rows[-1][0]}: missing '{missing[0]}' line")
    try:
        return FlagSystem(perms["a"], perms["b"], perms["c"])
    except ComplexError as exc:
        raise FormatError(f"invalid flag system: {exc}") from None


def read_fs(path_or_file) -> FlagSystem:
    if hasattr(path_or_file, "read"):
        return parse_fs(path_or_file.read())
    with open(path_or_file) as fh:
        return parse_fs(fh.read())
