"""Slow reference zigzag computation on flag tuples.

Shares nothing with the engine beyond the poset: orbits use ``complex.sigma``
on tuples, reverses use the triangular-array construction, and intersections
are counted straight from the definition with dictionaries.
"""
from collections import Counter

from zigzag.complex import sigma
from zigzag.flags import FlagIndex, reverse_flag


def all_flags(K):
    fi = FlagIndex(K)
    return [fi.flag(f) for f in range(fi.n_flags)]


def translate(K, f):
    for i in range(1, K.dim + 2):
        f = sigma(K, f, i)
    return f


def oracle_zigzags(K):
    """Return a list of (length, n_I, n_II, Int Counter) and the flag count."""
    flags = all_flags(K)
    orbit_of = {}
    orbits = []
    for f in flags:
        if f in orbit_of:
            continue
        cyc, g = [], f
        while g not in orbit_of:
            orbit_of[g] = len(orbits)
            cyc.append(g)
            g = translate(K, g)
        orbits.append(cyc)
    # pair each orbit with the orbit of its reverses
    zz_of_orbit, side = {}, {}
    zz = []
    for o, cyc in enumerate(orbits):
        if o in zz_of_orbit:
            continue
        r = orbit_of[reverse_flag(K, cyc[0])]
        zid = len(zz)
        zz.append((o, r))
        zz_of_orbit[o] = zid
        zz_of_orbit[r] = zid
        side[o] = 1
        side.setdefault(r, -1)
    raw = Counter()
    for zid, (o, _) in enumerate(zz):
        for f in orbits[o]:
            g = sigma(K, f, 1)
            go = orbit_of[g]
            raw[(zid, zz_of_orbit[go], 0 if side[go] == 1 else 1)] += 1
    out = []
    for zid, (o, r) in enumerate(zz):
        a, b = raw[(zid, zid, 0)], raw[(zid, zid, 1)]
        iv = Counter()
        for other in range(len(zz)):
            if other == zid:
                continue
            c1, c2 = raw[(zid, other, 0)], raw[(zid, other, 1)]
            if c1 or c2:
                iv[(min(c1, c2), max(c1, c2))] += 1
        out.append((len(orbits[o]), a // 2, b // 2, iv))
    return out, len(flags)


def oracle_structure(K) -> Counter:
    zs, _ = oracle_zigzags(K)
    return Counter((l, a, b, tuple(sorted(iv.items()))) for l, a, b, iv in zs)


def engine_structure(D) -> Counter:
    return Counter(
        (z.length, z.n_I, z.n_II, tuple(sorted(dict(z.int_vector).items()))) for z in D.zigzags
    )
