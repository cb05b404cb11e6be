from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zigzag import constructors as C
from zigzag.complex import ComplexError, quotient
from zigzag.symmetry import automorphisms, central_involutions
from zigzag.zigzags import (
    format_int_vector,
    format_z_vector,
    parse_int_vector,
    parse_z_vector,
    zigzag_graph_connected,
    zigzags,
)

import corpus
from oracle import engine_structure, oracle_structure

# small enough for the tuple-level oracle
ORACLE_CASES = [
    "alpha_3", "alpha_4", "beta_3", "beta_4", "gamma_3",
    "icosahedron", "great_dodecahedron", "petersen", "snub_cube", "folded_cube_4",
    "prism_5", "antiprism_4", "C3xC4", "pyr_beta_3", "bpyr_alpha_3", "cuboctahedron",
    "med_alpha_4", "type34_1_23", "half_cube_5", "augmented_021", "prism_aprism_4",
]


@pytest.mark.parametrize("name", sorted(set(ORACLE_CASES)))
def test_engine_agrees_with_oracle(name):
    assert engine_structure(corpus.decomposition(name)) == oracle_structure(corpus.get(name))


@pytest.mark.parametrize(
    "build, z",
    [
        (lambda: C.simplex(3), "4^3"),
        (lambda: C.cube(3), "6^4"),
        (lambda: C.cross_polytope(3), "6^4"),
        (lambda: C.icosahedron(), "10^6"),
        (lambda: C.dodecahedron(), "10^6"),
        (lambda: C.cell24(), "12^{48}"),
        (lambda: C.cell120(), "30^{240}"),
        (lambda: C.snub_cube(), "30_{3,0}^4"),
        (lambda: C.snub_dodecahedron(), "50_{5,0}^6"),
        (lambda: C.snub_24cell(), "20^{144}"),
        (lambda: C.half_cube(5), "12^{240}"),
        (lambda: C.great_dodecahedron(), "6^{10}"),
    ],
)
def test_known_z_vectors(build, z):
    assert zigzags(build()).z_vector_string() == z


def test_one_dimensional_complexes_are_rejected():
    # reverse(f) = sigma_1(f) for a polygon, so signatures are not defined
    with pytest.raises(ComplexError, match="dimension at least 2"):
        zigzags(C.polygon(8))


def test_format_examples():
    assert format_z_vector([(10, 0, 0)] * 12 + [(30, 0, 0)] * 12) == "10^{12}, 30^{12}"
    assert format_z_vector([(50, 5, 0)] * 6) == "50_{5,0}^6"
    assert format_z_vector([(8, 0, 0)]) == "8"
    assert format_z_vector([(6, 0, 0)] * 2 + [(12, 1, 2)]) == "6^2; 12_{1,2}"
    assert format_int_vector([((0, 2), 4), ((0, 4), 1)]) == "(0,2)^4, (0,4)"


def test_parse_accepts_bare_and_braced_exponents():
    assert parse_z_vector("45^{480}") == Counter({(45, 0, 0): 480})
    assert parse_z_vector("16_{4,4}^2") == parse_z_vector("16_{4,4}^{2}") == Counter({(16, 4, 4): 2})
    assert parse_int_vector("(2,0)^{3}, (1,1)") == Counter({(0, 2): 3, (1, 1): 1})
    with pytest.raises(ValueError):
        parse_z_vector("x^2")


lengths = st.integers(min_value=1, max_value=400)
sigs = st.tuples(st.integers(0, 9), st.integers(0, 9))
items = st.lists(st.tuples(lengths, sigs, st.integers(1, 50)), max_size=6)


@given(items)
def test_z_vector_round_trip(rows):
    counts = Counter()
    for l, (a, b), m in rows:
        counts[(l, a, b)] += m
    text = format_z_vector(counts)
    if counts:
        assert parse_z_vector(text) == counts


def test_intersections_are_symmetric_and_normalized():
    D = corpus.decomposition("cuboctahedron")
    for (i, j), (a, b) in D.pairs.items():
        assert i < j and a <= b


def test_zigzag_graph_of_cube_is_connected():
    assert zigzag_graph_connected(zigzags(C.cube(3)))


def test_report_formats():
    D = zigzags(C.cube(3))
    text = D.report()
    assert text.startswith("z = 6^4")
    csv = D.report("csv").splitlines()
    assert csv[0] == "id,length,n_I,n_II,self_reverse,int"
    assert len(csv) == 1 + 4 + 1
    with pytest.raises(ValueError):
        D.report("xml")


def test_folding_halves_the_cube_zigzags():
    K = C.cube(4)
    G = automorphisms(K)
    inv = central_involutions(G)
    assert inv
    Q = quotient(K, inv[0])
    assert zigzags(K).z_vector_string() == "8^{24}"
    assert zigzags(Q).z_vector_string() == "4^{24}"
