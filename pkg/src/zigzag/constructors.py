"""Named complexes: classical families, the 600-cell and its cuts, and maps."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations, product as iproduct

import numpy as np

from .complex import (
    Complex,
    ComplexError,
    dual,
    element_map_of_dual,
    involution_from_labels,
    parse_hasse,
    product,
    quotient,
    require_valid,
    segment,
)

FAMILIES = (
    "alpha", "beta", "gamma", "half_cube", "polygon", "prism_map", "antiprism_map",
    "icosahedron", "dodecahedron", "snub_cube", "snub_dodecahedron", "great_dodecahedron",
    "cell600", "cell120", "cell24", "petersen", "type34",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with its integer parameters."""

    family: str
    d: int | None = None
    m: int | None = None
    partition: tuple = field(default=())

    def __post_init__(self):
        if self.family not in FAMILIES and self.family not in EXTRA_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def build(self) -> Complex:
        return build(self.family, d=self.d, m=self.m, partition=self.partition)


# -- exact arithmetic in Q(sqrt 5) -------------------------------------------


class Q5:
    """Number ``a + b*sqrt(5)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        o = _q5(o)
        return Q5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = _q5(o)
        return Q5(self.a - o.a, self.b - o.b)

    def __neg__(self):
        return Q5(-self.a, -self.b)

    def __mul__(self, o):
        o = _q5(o)
        return Q5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = _q5(o)
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"Q5({self.a}, {self.b})"


def _q5(x):
    return x if isinstance(x, Q5) else Q5(x)


PHI = Q5(Fraction(1, 2), Fraction(1, 2))
INV_PHI = PHI - 1


def _dot(u, v):
    s = Q5()
    for a, b in zip(u, v):
        s = s + a * b
    return s


def _graph_cliques(adj: list[set], max_size: int) -> list[list[tuple]]:
    """All cliques by size (index k holds cliques of k+1 vertices)."""
    out = [[(v,) for v in range(len(adj))]]
    for _ in range(1, max_size):
        nxt = []
        for c in out[-1]:
            common = set.intersection(*(adj[v] for v in c))
            for w in sorted(common):
                if w > c[-1]:
                    nxt.append(c + (w,))
        if not nxt:
            break
        out.append(nxt)
    return out


# -- regular families ----------------------------------------------------------


def _simplex(n: int) -> Complex:
    if n == 1:
        return segment()
    faces = [n + 1] + [list(combinations(range(n + 1), k + 1)) for k in range(1, n)]
    return Complex.from_vertex_sets(n - 1, faces)


def simplex(d: int) -> Complex:
    """alpha_d: faces are the proper nonempty subsets of ``{0..d}``."""
    if d < 2:
        raise ValueError("simplex needs d >= 2")
    return _simplex(d)


def _signed_vertices(d):
    # vertex 2i is +e_i, vertex 2i+1 is -e_i
    return [(i, s) for i in range(d) for s in (1, -1)]


def cross_polytope(d: int) -> Complex:
    """beta_d: faces are sets of signed unit vectors with no opposite pair."""
    if d < 2:
        raise ValueError("cross_polytope needs d >= 2")
    faces = [2 * d]
    for k in range(1, d):
        cur = []
        for axes in combinations(range(d), k + 1):
            for signs in iproduct((0, 1), repeat=k + 1):
                cur.append(tuple(2 * a + s for a, s in zip(axes, signs)))
        faces.append(cur)
    return Complex.from_vertex_sets(d - 1, faces, vertex_labels=_signed_vertices(d))


def cube(d: int) -> Complex:
    """gamma_d, the dual of the cross-polytope."""
    return dual(cross_polytope(d))


def antipode(K: Complex) -> np.ndarray:
    """Central inversion of a cross-polytope or cube built here."""
    return involution_from_labels(K, lambda s: frozenset(v ^ 1 for v in s))


def half_cube(d: int) -> Complex:
    """Half-cube: even subsets of ``{1..d}`` with clique and section faces."""
    if d < 3:
        raise ValueError("half_cube needs d >= 3")
    verts = [m for m in range(1 << d) if bin(m).count("1") % 2 == 0]
    index = {m: i for i, m in enumerate(verts)}
    adj = [set() for _ in verts]
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if i != j and bin(u ^ v).count("1") == 2:
                adj[i].add(j)
    cliques = _graph_cliques(adj, d)
    faces: list = [len(verts)]
    for k in range(1, d):
        cur = [frozenset(c) for c in cliques[k]] if k < len(cliques) else []
        if 4 <= k <= d - 1:
            # coordinate sections isomorphic to the k-dimensional half-cube
            for fixed in combinations(range(d), d - k):
                for vals in iproduct((0, 1), repeat=d - k):
                    sec = frozenset(
                        index[m] for m in verts
                        if all(((m >> c) & 1) == b for c, b in zip(fixed, vals))
                    )
                    cur.append(sec)
        faces.append(cur)
    return Complex.from_vertex_sets(d - 1, faces, vertex_labels=verts)


# -- polygons and maps -----------------------------------------------------------


def polygon(m: int) -> Complex:
    """The m-gon as a 1-complex (m >= 2; m = 2 is the digon)."""
    if m < 2:
        raise ValueError("polygon needs m >= 2")
    return Complex([[()] * m, [(i, (i + 1) % m) for i in range(m)]])


def prism_map(m: int) -> Complex:
    if m < 3:
        raise ValueError("prism_map needs m >= 3")
    return product(polygon(m), segment())


def antiprism_map(m: int) -> Complex:
    """m-gonal antiprism: two m-gons and 2m triangles."""
    if m < 3:
        raise ValueError("antiprism_map needs m >= 3")
    top = list(range(m))
    bottom = list(range(m, 2 * m))
    polys = [top, bottom[::-1]]
    for i in range(m):
        j = (i + 1) % m
        polys.append([i, j, m + i])
        polys.append([m + i, j, m + j])
    return Complex.from_polygons(polys)


def _icosahedron_coords():
    pts = []
    for s1, s2 in iproduct((1, -1), repeat=2):
        base = (Q5(0), Q5(s1), PHI * s2)
        for r in range(3):
            pts.append(tuple(base[(i - r) % 3] for i in range(3)))
    return pts


def _coords_graph(pts, target):
    n = len(pts)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            diff = [a - b for a, b in zip(pts[i], pts[j])]
            if _dot(diff, diff) == target:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def icosahedron() -> Complex:
    pts = _icosahedron_coords()
    adj = _coords_graph(pts, Q5(4))
    cl = _graph_cliques(adj, 3)
    K = Complex.from_vertex_sets(2, [len(pts), cl[1], cl[2]], vertex_labels=pts)
    return K


def _point_antipode(K: Complex, pts) -> np.ndarray:
    where = {p: i for i, p in enumerate(pts)}
    vmap = [where[tuple(-c for c in p)] for p in pts]
    return involution_from_labels(K, lambda s: frozenset(vmap[v] for v in s))


def dodecahedron() -> Complex:
    return dual(icosahedron())


def great_dodecahedron() -> Complex:
    """Icosahedron skeleton with one pentagon through the neighbours of each vertex."""
    pts = _icosahedron_coords()
    adj = _coords_graph(pts, Q5(4))
    polys = []
    for v in range(len(pts)):
        nb = sorted(adj[v])
        cyc = [nb[0]]
        while len(cyc) < len(nb):
            nxt = [w for w in adj[cyc[-1]] & adj[v] if w not in cyc]
            cyc.append(min(nxt))
        polys.append(cyc)
    return Complex.from_polygons(polys, vertex_labels=pts)


def petersen_map() -> Complex:
    """Dodecahedron folded by its central inversion (the hemi-dodecahedron)."""
    ico = icosahedron()
    inv = _point_antipode(ico, _icosahedron_coords())
    dod = dual(ico)
    emap = element_map_of_dual(ico)
    inv_d = np.empty_like(inv)
    inv_d[emap] = emap[inv]
    return quotient(dod, inv_d)


def folded_cube(d: int) -> Complex:
    """gamma_d with opposite faces identified."""
    if d < 3:
        raise ValueError("folded_cube needs d >= 3")
    C = cube(d)
    return quotient(C, antipode(C))


def _load(name: str) -> Complex:
    text = resources.files("zigzag.data").joinpath(name).read_text()
    return require_valid(parse_hasse(text), name)


def snub_cube() -> Complex:
    return _load("snub_cube.hasse")


def snub_dodecahedron() -> Complex:
    return _load("snub_dodecahedron.hasse")


# -- 600-cell family ------------------------------------------------------------


def _even_perms4():
    out = []
    for p in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        if inv % 2 == 0:
            out.append(p)
    return out


@lru_cache(maxsize=1)
def icosians() -> tuple:
    """The 120 unit icosians, exactly, in a fixed order (Hurwitz units first)."""
    half = Fraction(1, 2)
    pts = []
    for i in range(4):
        for s in (1, -1):
            v = [Q5(0)] * 4
            v[i] = Q5(s)
            pts.append(tuple(v))
    for signs in iproduct((1, -1), repeat=4):
        pts.append(tuple(Q5(half * s) for s in signs))
    base = (PHI * half, Q5(half), INV_PHI * half, Q5(0))
    seen = set(pts)
    for perm in _even_perms4():
        for signs in iproduct((1, -1), repeat=3):
            vals = [base[0] * signs[0], base[1] * signs[1], base[2] * signs[2], base[3]]
            v = [None] * 4
            for src, dst in enumerate(perm):
                v[dst] = vals[src]
            v = tuple(v)
            if v not in seen:
                seen.add(v)
                pts.append(v)
    if len(pts) != 120:
        raise AssertionError("icosian enumeration")
    return tuple(pts)


@lru_cache(maxsize=1)
def _cell600_graph():
    pts = icosians()
    target = PHI * Fraction(1, 2)
    n = len(pts)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _dot(pts[i], pts[j]) == target:
                adj[i].add(j)
                adj[j].add(i)
    return tuple(frozenset(a) for a in adj)


def cell600() -> Complex:
    """600-cell on the icosians; edges join points with inner product phi/2."""
    adj = [set(a) for a in _cell600_graph()]
    cl = _graph_cliques(adj, 4)
    return Complex.from_vertex_sets(3, [120, cl[1], cl[2], cl[3]], vertex_labels=icosians())


def cell120() -> Complex:
    return dual(cell600())


def cell24() -> Complex:
    from .wythoff import wythoff

    return wythoff(cross_polytope(4), {1})


HURWITZ_UNITS = tuple(range(24))


def cell600_skeleton() -> list:
    return [set(a) for a in _cell600_graph()]


def special_cut(K600: Complex, E) -> Complex:
    """Remove an independent vertex set, capping each hole with an icosahedral cell."""
    E = sorted(set(int(v) for v in E))
    vset = set(E)
    if K600.dim != 3 or K600.counts != (120, 720, 1200, 600):
        raise ComplexError("special_cut expects the 600-cell")
    if any(v < 0 or v >= 120 for v in E):
        raise ComplexError("cut vertex out of range")
    for x in K600.faces(1):
        a, b = K600.covers[x]
        if a in vset and b in vset:
            raise ComplexError(f"cut vertices {a} and {b} are adjacent")
    keep = [[x for x in K600.faces(k) if not (K600.vertex_set(x) & vset)] for k in range(4)]
    caps = []
    for v in E:
        link = set()
        for t in K600.faces(3):
            if v in K600.vertex_set(t):
                link.update(y for y in K600.covers[t] if v not in K600.vertex_set(y))
        caps.append(sorted(link))
    index = [{x: i for i, x in enumerate(lev)} for lev in keep]
    levels = [[()] * len(keep[0])]
    labels = [K600.labels[x] for x in keep[0]]
    for k in range(1, 4):
        lev = [tuple(index[k - 1][y] for y in K600.covers[x]) for x in keep[k]]
        labels.extend(K600.labels[x] for x in keep[k])
        if k == 3:
            for v, link in zip(E, caps):
                lev.append(tuple(index[2][t] for t in link))
                labels.append(("cap", v))
        levels.append(lev)
    return require_valid(Complex(levels, labels=labels), "special cut")


def snub_24cell() -> Complex:
    """Special cut of the 600-cell at the 24 Hurwitz unit quaternions."""
    return special_cut(cell600(), HURWITZ_UNITS)


# -- complexes of type {3,4} ----------------------------------------------------


def type34(partition) -> Complex:
    """Dual of the product of simplices of dimensions given by the part sizes."""
    parts = [frozenset(p) for p in partition]
    if not parts or any(not p for p in parts):
        raise ValueError("partition parts must be nonempty")
    union = frozenset().union(*parts)
    d = len(union)
    if sum(len(p) for p in parts) != d or union != frozenset(range(1, d + 1)):
        raise ValueError("parts must partition {1..d}")
    sizes = sorted((len(p) for p in parts), reverse=True)
    P = _simplex(sizes[0]) if sizes[0] > 1 else segment()
    for s in sizes[1:]:
        P = product(P, _simplex(s) if s > 1 else segment())
    return dual(P)


# -- prisms ---------------------------------------------------------------------


def prism(K: Complex) -> Complex:
    """Prism over ``K``: the product with a segment."""
    return product(K, segment())


EXTRA_FAMILIES = ("snub_24cell", "folded_cube", "segment")


def build(family: str, d: int | None = None, m: int | None = None, partition=()) -> Complex:
    """Construct a named complex (used by the CLI ``generate`` command)."""
    def need(val, name):
        if val is None:
            raise ValueError(f"family {family!r} needs --{name}")
        return val

    if family == "alpha":
        return simplex(need(d, "d"))
    if family == "beta":
        return cross_polytope(need(d, "d"))
    if family == "gamma":
        return cube(need(d, "d"))
    if family == "half_cube":
        return half_cube(need(d, "d"))
    if family == "polygon":
        return polygon(need(m, "m"))
    if family == "prism_map":
        return prism_map(need(m, "m"))
    if family == "antiprism_map":
        return antiprism_map(need(m, "m"))
    if family == "type34":
        if not partition:
            raise ValueError("family 'type34' needs --partition")
        return type34(partition)
    if family == "folded_cube":
        return folded_cube(need(d, "d"))
    simple = {
        "icosahedron": icosahedron,
        "dodecahedron": dodecahedron,
        "snub_cube": snub_cube,
        "snub_dodecahedron": snub_dodecahedron,
        "great_dodecahedron": great_dodecahedron,
        "cell600": cell600,
        "cell120": cell120,
        "cell24": cell24,
        "petersen": petersen_map,
        "snub_24cell": snub_24cell,
        "segment": segment,
    }
    if family in simple:
        return simple[family]()
    raise ValueError(f"unknown family {family!r}")


__all__ = [
    "FamilySpec", "build", "simplex", "cross_polytope", "cube", "half_cube", "polygon",
    "prism_map", "antiprism_map", "icosahedron", "dodecahedron", "great_dodecahedron",
    "snub_cube", "snub_dodecahedron", "cell600", "cell120", "cell24", "special_cut",
    "snub_24cell", "type34", "petersen_map", "folded_cube", "antipode", "prism", "icosians",
    "cell600_skeleton", "HURWITZ_UNITS", "FAMILIES",
]
