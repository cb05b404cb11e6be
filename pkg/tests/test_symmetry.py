import numpy as np
import pytest

from zigzag import constructors as C
from zigzag.complex import dual
from zigzag.flags import FlagIndex
from zigzag.symmetry import (
    automorphisms,
    find_isomorphism,
    is_isomorphic,
    is_z_transitive,
    orbit_report,
)
from zigzag.zigzags import zigzags


@pytest.mark.parametrize(
    "build, order",
    [
        (lambda: C.simplex(3), 24),
        (lambda: C.cube(3), 48),
        (lambda: C.icosahedron(), 120),
        (lambda: C.cell24(), 1152),
        (lambda: C.snub_cube(), 24),
        (lambda: C.snub_24cell(), 576),
        (lambda: C.petersen_map(), 60),
    ],
)
def test_group_orders(build, order):
    assert automorphisms(build()).order == order


def test_group_elements_commute_with_sigma():
    K = C.cube(3)
    G = automorphisms(K)
    s = G.index.sigma
    for g in list(G.elements())[:10]:
        for i in range(len(s)):
            assert np.array_equal(g[s[i]], s[i][g])


def test_half_cube_5_has_three_flag_orbits():
    G = automorphisms(C.half_cube(5))
    assert G.n_flag_orbits == 3 and not G.is_regular()


def test_regular_polytopes_are_z_transitive():
    for K in (C.cube(4), C.cell24(), C.dodecahedron()):
        G = automorphisms(K)
        assert G.is_regular()
        assert is_z_transitive(G, zigzags(K, G.index))


def test_isomorphism_examples():
    assert is_isomorphic(dual(C.cube(3)), C.cross_polytope(3))
    assert not is_isomorphic(C.cube(3), C.prism_map(5))
    assert not is_isomorphic(C.icosahedron(), C.great_dodecahedron())


def test_find_isomorphism_maps_sigma():
    A = FlagIndex(C.cube(3))
    B = FlagIndex(dual(C.cross_polytope(3)))
    phi = find_isomorphism(A, B)
    assert phi is not None
    for i in range(len(A.sigma)):
        assert np.array_equal(phi[A.sigma[i]], B.sigma[i][phi])


def test_orbit_report_fields():
    K = C.snub_cube()
    G = automorphisms(K)
    r = orbit_report(G, zigzags(K, G.index))
    assert r["order"] == 24
    assert r["flag_orbits"] == 10
    assert r["zigzag_orbits"] == 1 and r["z_transitive"]
    assert not r["z_knotted"]


@pytest.mark.parametrize(
    "build", [C.icosahedron, C.dodecahedron, lambda: C.simplex(3), lambda: C.cube(3), lambda: C.cross_polytope(3)]
)
def test_group_order_is_h_times_h_plus_2(build):
    K = build()
    G = automorphisms(K)
    (h,) = set(zigzags(K, G.index).lengths())
    assert G.order == h * (h + 2)


def test_burnside_count_matches_orbit_enumeration():
    from zigzag.symmetry import count_special_cut_orbits, special_cut_orbits

    vperms = np.asarray(automorphisms(C.cell600()).vertex_permutations())
    adj = C.cell600_skeleton()
    for k in (1, 2, 3):
        assert count_special_cut_orbits(k, vperms, adj) == len(special_cut_orbits(k, vperms, adj))
