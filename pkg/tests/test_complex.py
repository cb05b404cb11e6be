import io
from math import factorial

import numpy as np
import pytest

from zigzag import constructors as C
from zigzag.complex import (
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
    sigma,
    validate,
    write_hasse,
)
from zigzag.flags import FlagIndex
from zigzag.symmetry import is_isomorphic
from zigzag.zigzags import zigzags


def test_cube_validates_as_lattice():
    rep = validate(C.cube(3))
    assert rep.ok and rep.is_lattice
    assert rep.counts == (8, 12, 6)


def test_folded_cube_is_not_a_lattice():
    rep = validate(C.folded_cube(4), lattice=True)
    assert rep.ok
    assert rep.is_lattice is False


def test_three_middles_fail_with_witness():
    K = Complex([[()] * 2, [(0, 1), (0, 1), (0, 1)]])
    rep = validate(K)
    assert not rep.diamond and not rep.ok
    assert "3 middles" in rep.witness


def test_dual_is_an_involution():
    K = C.simplex(4)
    assert dual(dual(K)).same_covers(K)


def test_dual_octahedron_is_cube():
    D = dual(C.cross_polytope(3))
    assert D.counts == (8, 12, 6)
    assert is_isomorphic(D, C.cube(3))


def test_duality_keeps_dodecahedron_z_vector():
    K = C.dodecahedron()
    assert zigzags(K).z_vector_string() == zigzags(dual(K)).z_vector_string() == "10^6"


def test_sigma_on_tetrahedron_swaps_edge_endpoint():
    K = C.simplex(3)
    f = FlagIndex(K).flag(0)
    g = sigma(K, f, 1)
    assert g[1:] == f[1:] and g[0] != f[0]


def test_sigma_commutation_on_cube():
    K = C.cube(3)
    fi = FlagIndex(K)
    s = fi.sigma
    r = len(s)
    for i in range(r):
        assert np.array_equal(s[i][s[i]], np.arange(fi.n_flags))
        for j in range(i + 2, r):
            assert np.array_equal(s[i][s[j]], s[j][s[i]])


def test_sigma_2_matches_brute_force_search():
    K = C.simplex(3)
    fi = FlagIndex(K)
    flags = [fi.flag(f) for f in range(fi.n_flags)]
    for f in flags[:6]:
        cands = [g for g in flags if g[0] == f[0] and g[2] == f[2] and g[1] != f[1]]
        assert cands == [sigma(K, f, 2)]


def test_sigma_index_range():
    K = C.simplex(3)
    with pytest.raises(IndexError):
        sigma(K, FlagIndex(K).flag(0), 0)


def test_square_times_segment_is_cube():
    P = product(C.polygon(4), segment())
    assert P.counts == (8, 12, 6)
    assert is_isomorphic(P, C.cube(3))


def test_triangle_times_triangle_counts():
    P = product(C.polygon(3), C.polygon(3))
    assert P.counts == (9, 18, 15, 6)
    f0, f1, f2, f3 = P.counts
    assert f0 - f1 + f2 - f3 == 0


def test_prism_dodecahedron():
    assert zigzags(product(C.dodecahedron(), segment())).z_vector_string() == "40^{12}"


def test_pyramid_of_square():
    P = pyramid(C.polygon(4))
    assert P.counts == (5, 8, 5)


def test_bipyramid_of_triangle_is_dual_prism():
    assert is_isomorphic(bipyramid(C.simplex(2)), dual(C.prism_map(3)))


def test_pyramid_icosahedron():
    assert zigzags(pyramid(C.icosahedron())).z_vector_string() == "25^{12}"


def test_augment_cube_square():
    K = C.cube(3)
    A = augment(K, next(iter(K.faces(2))))
    assert A.counts == (9, 16, 9)
    assert validate(A).ok


def test_augment_rejects_non_facet():
    K = C.cube(3)
    with pytest.raises(ComplexError):
        augment(K, 0)


def test_quotient_rejects_fixed_points():
    K = C.cube(3)
    with pytest.raises(ComplexError):
        quotient(K, np.arange(K.n))


def test_petersen_from_dodecahedron():
    P = C.petersen_map()
    assert P.counts == (10, 15, 6)
    assert zigzags(P).z_vector_string() == "5^6"


def test_hasse_round_trip():
    K = C.cell24()
    buf = io.StringIO()
    write_hasse(K, buf)
    buf.seek(0)
    assert read_hasse(buf).same_covers(K)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("dim x\n", 1),
        ("dim 1\n0 0\n1 0\n2 1 0 7\n", 4),
        ("dim 1\n0 0\n0 0\n", 3),
        ("dim 1\n0 0\n1 2\n", 3),
        ("dim 1\n0 0\n1 0 0\n", 3),
        ("dim 2\n0 0\nq\n", 3),
    ],
)
def test_hasse_format_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError, match=f"line {line}"):
        parse_hasse(text)


def test_simplicial_flag_formula():
    for d in range(2, 6):
        K = C.simplex(d)
        # boundary complex: every facet is a simplex of rank dim
        assert FlagIndex(K).n_flags == factorial(K.dim + 1) * K.counts[-1]
