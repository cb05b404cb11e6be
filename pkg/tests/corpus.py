"""The generated corpus used by the property suite (cached per process)."""
from functools import lru_cache

from zigzag import constructors as C
from zigzag.complex import augment, bipyramid, product, pyramid, segment
from zigzag.wythoff import medial, wythoff


def _augmented():
    M = medial(C.simplex(4))
    return augment(M, next(x for x in M.faces(3) if len(M.covers[x]) == 8))


BUILDERS = {
    **{f"alpha_{d}": (lambda d=d: C.simplex(d)) for d in range(3, 7)},
    **{f"beta_{d}": (lambda d=d: C.cross_polytope(d)) for d in range(3, 7)},
    **{f"gamma_{d}": (lambda d=d: C.cube(d)) for d in range(3, 6)},
    **{f"half_cube_{d}": (lambda d=d: C.half_cube(d)) for d in range(5, 7)},
    **{f"folded_cube_{d}": (lambda d=d: C.folded_cube(d)) for d in range(3, 6)},
    **{f"prism_{m}": (lambda m=m: C.prism_map(m)) for m in (3, 5, 6)},
    **{f"antiprism_{m}": (lambda m=m: C.antiprism_map(m)) for m in (3, 4, 7)},
    "icosahedron": C.icosahedron,
    "dodecahedron": C.dodecahedron,
    "great_dodecahedron": C.great_dodecahedron,
    "petersen": C.petersen_map,
    "snub_cube": C.snub_cube,
    "snub_dodecahedron": C.snub_dodecahedron,
    "cell24": C.cell24,
    "cell600": C.cell600,
    "cell120": C.cell120,
    "snub_24cell": C.snub_24cell,
    "cuboctahedron": lambda: wythoff(C.cube(3), (1,)),
    "truncated_icosahedron": lambda: wythoff(C.dodecahedron(), (1, 2)),
    "med_alpha_4": lambda: medial(C.simplex(4)),
    "alpha4_0_1_3": lambda: wythoff(C.simplex(4), (0, 1, 3)),
    "beta4_1_2": lambda: wythoff(C.cross_polytope(4), (1, 2)),
    "cell24_0_2": lambda: wythoff(C.cell24(), (0, 2)),
    "pyr_icosahedron": lambda: pyramid(C.icosahedron()),
    "bpyr_icosahedron": lambda: bipyramid(C.icosahedron()),
    "pyr_beta_3": lambda: pyramid(C.cross_polytope(3)),
    "pyr_beta_4": lambda: pyramid(C.cross_polytope(4)),
    "bpyr_alpha_3": lambda: bipyramid(C.simplex(3)),
    "augmented_021": _augmented,
    "C3xC4": lambda: product(C.polygon(3), C.polygon(4)),
    "C5xC5": lambda: product(C.polygon(5), C.polygon(5)),
    "prism_aprism_4": lambda: product(C.antiprism_map(4), segment()),
    "prism_dodecahedron": lambda: product(C.dodecahedron(), segment()),
    "type34_1_23": lambda: C.type34([(1,), (2, 3)]),
    "type34_12_345": lambda: C.type34([(1, 2), (3, 4, 5)]),
    "type34_1_2_3_45": lambda: C.type34([(1,), (2,), (3,), (4, 5)]),
}

NAMES = tuple(BUILDERS)

PLATONIC = ("alpha_3", "beta_3", "gamma_3", "icosahedron", "dodecahedron")


@lru_cache(maxsize=None)
def get(name):
    return BUILDERS[name]()


@lru_cache(maxsize=None)
def index(name):
    from zigzag.flags import FlagIndex

    return FlagIndex(get(name))


@lru_cache(maxsize=None)
def decomposition(name):
    from zigzag.zigzags import zigzags

    return zigzags(get(name), index(name))
