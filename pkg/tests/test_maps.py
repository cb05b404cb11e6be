import io

import pytest

from zigzag import constructors as C
from zigzag.complex import ComplexError, FormatError
from zigzag.maps import (
    LINS_OPS,
    FlagSystem,
    census,
    from_complex2,
    fs_isomorphic,
    lins,
    parse_fs,
    read_fs,
    skeleton_bipartition,
    to_complex,
    twist,
    write_fs,
)
from zigzag.symmetry import is_isomorphic
from zigzag.zigzags import zigzags


def test_cube_census():
    c = census(from_complex2(C.cube(3)))
    assert (c.vertices, c.edges, c.faces, c.chi) == (8, 12, 6, 2)
    assert c.v == {3: 8} and c.p == {4: 6} and c.z == {6: 4}
    assert c.orientable and c.genus == 0 and c.crosscaps is None
    assert c.edge_identity_holds()


def test_petrie_dual_of_cube_is_a_hexagonal_torus():
    c = census(lins("skew", from_complex2(C.cube(3))))
    assert c.p == {6: 4} and c.z == {4: 6}
    assert c.chi == 0 and c.genus == 1


def test_phial_of_tetrahedron_is_projective():
    c = census(lins("phial", from_complex2(C.simplex(3))))
    assert not c.orientable and c.crosscaps == 1
    assert (c.vertices, c.edges, c.faces) == (3, 6, 4)


def test_lins_operations_form_sym3():
    fs = from_complex2(C.prism_map(5))
    ops = {op: (lambda x, op=op: lins(op, x)) for op in LINS_OPS}
    # the three transpositions are involutions
    for op in ("dual", "phial", "skew"):
        assert ops[op](ops[op](fs)) == fs
    # the 3-cycles are mutually inverse
    assert ops["phial_dual"](ops["skew_dual"](fs)) == fs
    assert ops["skew_dual"](ops["phial_dual"](fs)) == fs
    # closure: composing two transpositions yields a 3-cycle
    results = {op: ops[op](fs) for op in LINS_OPS}
    composite = ops["dual"](ops["phial"](fs))
    assert any(composite == r for r in results.values())
    with pytest.raises(ValueError):
        lins("rotate", fs)


def test_round_trip_through_complex():
    K = C.icosahedron()
    assert is_isomorphic(to_complex(from_complex2(K)), K)


def test_twist_by_nothing_is_identity():
    fs = from_complex2(C.cube(3))
    assert fs_isomorphic(twist(fs, set()), fs)


def test_twisting_one_side_of_the_cube():
    fs = from_complex2(C.cube(3))
    black, white = skeleton_bipartition(fs)
    t = twist(fs, black)
    # twisting every vertex of one colour class is the Petrie dual
    assert fs_isomorphic(t, lins("skew", fs))


def test_twist_needs_orientable():
    fs = lins("phial", from_complex2(C.simplex(3)))
    with pytest.raises(ComplexError):
        twist(fs, {0})


def test_map_zigzags_match_complex_zigzags():
    K = C.snub_cube()
    c = census(from_complex2(K))
    z = zigzags(K).z_vector()
    assert sum(c.z.values()) == sum(z.values())
    assert set(c.z) == {l for (l, _, _) in z}


def test_fs_round_trip(tmp_path):
    fs = from_complex2(C.antiprism_map(4))
    path = tmp_path / "m.fs"
    write_fs(fs, path)
    assert read_fs(path) == fs
    buf = io.StringIO()
    write_fs(fs, buf)
    assert parse_fs(buf.getvalue()) == fs


@pytest.mark.parametrize(
    "text, msg",
    [
        ("", "line 1"),
        ("flag 4\n", "line 1"),
        ("flags 2\nd: 1 0\n", "line 2"),
        ("flags 2\na: 1 0\na: 1 0\n", "line 3"),
        ("flags 2\na: 1 x\n", "line 2"),
        ("flags 2\na: 1\n", "line 2"),
        ("flags 2\na: 1 5\n", "line 2"),
        ("flags 2\na: 1 0\nb: 1 0\n", "missing 'c'"),
        ("flags 2\na: 1 1\nb: 1 0\nc: 1 0\n", "invalid flag system"),
    ],
)
def test_fs_format_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        parse_fs(text)


def test_flag_system_checks():
    with pytest.raises(ComplexError):
        FlagSystem([1, 0, 2, 3], [1, 0, 3, 2], [0, 1, 2, 3])
