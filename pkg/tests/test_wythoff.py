from itertools import combinations

import pytest

from zigzag import constructors as C
from zigzag.complex import ComplexError, dual
from zigzag.symmetry import is_isomorphic
from zigzag.wythoff import (
    admissible,
    medial,
    normalize_subset,
    order_complex,
    parse_subset,
    passive,
    wythoff,
    wythoff_dual_subset,
)
from zigzag.zigzags import zigzags


def _classes(K):
    reps = []
    d = K.dim
    for k in range(1, d + 2):
        for V in combinations(range(d + 1), k):
            W = wythoff(K, V)
            if not any(W.counts == R.counts and is_isomorphic(W, R) for R in reps):
                reps.append(W)
    return reps


def test_vertex_ring_recovers_the_complex():
    K = C.cube(3)
    assert is_isomorphic(wythoff(K, (0,)), K)


def test_top_ring_gives_the_dual():
    K = C.simplex(4)
    assert is_isomorphic(wythoff(K, (K.dim,)), dual(K))
    assert is_isomorphic(wythoff(C.cube(3), (2,)), C.cross_polytope(3))


@pytest.mark.parametrize("V", [(0,), (0, 1), (1, 3), (0, 2, 3)])
def test_wythoff_of_dual_uses_reflected_subset(V):
    K = C.cross_polytope(4)
    assert is_isomorphic(wythoff(K, V), wythoff(dual(K), wythoff_dual_subset(V, K.dim)))


def test_medial_cube_is_cuboctahedron():
    M = medial(C.cube(3))
    assert M.counts == (12, 24, 14)
    assert zigzags(M).z_vector_string() == "8^6"


def test_truncated_icosahedron():
    K = wythoff(C.dodecahedron(), (1, 2))
    assert K.counts == (60, 90, 32)


@pytest.mark.parametrize("build, n", [(lambda: C.simplex(4), 9), (lambda: C.cross_polytope(4), 15), (lambda: C.cube(3), 7)])
def test_class_counts(build, n):
    K = build()
    reps = _classes(K)
    assert len(reps) == n <= 2 ** (K.dim + 1) - 1


def test_order_complex_of_cube():
    O = order_complex(C.cube(3))
    assert O.counts[-1] == 48
    assert O.counts[0] == 8 + 12 + 6


def test_med_beta5_differs_from_half_cube():
    M = medial(C.cross_polytope(5))
    H = C.half_cube(5)
    assert M.counts == (40, 240, 400, 240, 42)
    assert zigzags(M).z_vector_string() == "48^{160}"
    assert not is_isomorphic(M, H)


def test_subset_helpers():
    assert parse_subset("0,1,3") == (0, 1, 3)
    with pytest.raises(ValueError):
        parse_subset("0,a")
    assert normalize_subset({2, 0, 2}, 3) == (0, 2)
    with pytest.raises(ValueError):
        normalize_subset((), 3)
    with pytest.raises(ValueError):
        normalize_subset((4,), 3)
    assert admissible((0, 1), (1,))
    assert not admissible((0, 2), (0,))
    assert passive((0,), (0,), 3) == (2, 3)


def test_disconnected_flag_graph_is_rejected():
    from zigzag.complex import Complex

    two_edges = Complex([[()] * 4, [(0, 1), (2, 3)]])
    with pytest.raises(ComplexError):
        wythoff(two_edges, (0,))
