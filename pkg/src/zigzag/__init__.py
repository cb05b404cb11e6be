"""Zigzags (Petrie polygons) of combinatorial complexes and maps.

Typical use::

    from zigzag import cell600, wythoff, zigzags
    D = zigzags(wythoff(cell600(), {1}))
    D.z_vector_string()        # '45^{480}'
"""
from ._kernels import BACKEND
from .complex import (
    Complex,
    ComplexError,
    FormatError,
    augment,
    bipyramid,
    dual,
    parse_hasse,
    product,
    pyramid,
    quotient,
    read_hasse,
    segment,
    validate,
    write_hasse,
)
from .constructors import (
    antiprism_map,
    build,
    cell24,
    cell120,
    cell600,
    cross_polytope,
    cube,
    dodecahedron,
    folded_cube,
    great_dodecahedron,
    half_cube,
    icosahedron,
    petersen_map,
    polygon,
    prism,
    prism_map,
    simplex,
    snub_24cell,
    snub_cube,
    snub_dodecahedron,
    special_cut,
    type34,
)
from .flags import FlagCapExceeded, FlagIndex
from .maps import FlagSystem, census, from_complex2, lins, to_complex, twist
from .symmetry import automorphisms, is_isomorphic
from .wythoff import medial, order_complex, wythoff
from .zigzags import ZigzagDecomposition, format_z_vector, parse_z_vector, zigzags

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Complex", "ComplexError", "FormatError", "FlagCapExceeded", "FlagIndex",
    "augment", "bipyramid", "dual", "parse_hasse", "product", "pyramid", "quotient",
    "read_hasse", "segment", "validate", "write_hasse",
    "antiprism_map", "build", "cell24", "cell120", "cell600", "cross_polytope", "cube",
    "dodecahedron", "folded_cube", "great_dodecahedron", "half_cube", "icosahedron",
    "petersen_map", "polygon", "prism", "prism_map", "simplex", "snub_24cell", "snub_cube",
    "snub_dodecahedron", "special_cut", "type34",
    "FlagSystem", "census", "from_complex2", "lins", "to_complex", "twist",
    "automorphisms", "is_isomorphic", "medial", "order_complex", "wythoff",
    "ZigzagDecomposition", "format_z_vector", "parse_z_vector", "zigzags",
]
