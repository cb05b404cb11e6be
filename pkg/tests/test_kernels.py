import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zigzag import _kernels
from zigzag._kernels import _pykernels as py

import corpus

ck = pytest.importorskip("zigzag._kernels._ckernels")


@st.composite
def permutations(draw, max_n=60):
    n = draw(st.integers(1, max_n))
    return np.array(draw(st.permutations(range(n))), dtype=np.int64)


@st.composite
def involutions(draw, n):
    perm = draw(st.permutations(range(n)))
    k = draw(st.integers(0, n // 2))
    out = np.arange(n)
    for i in range(k):
        a, b = perm[2 * i], perm[2 * i + 1]
        out[a], out[b] = b, a
    return out


@st.composite
def generator_sets(draw):
    n = draw(st.integers(1, 40))
    r = draw(st.integers(1, 4))
    return np.stack([draw(involutions(n)) for _ in range(r)])


def test_backend_is_reported():
    assert _kernels.BACKEND in ("cython", "python")


@given(permutations())
def test_perm_cycles_agree(p):
    a, b = py.perm_cycles(p), ck.perm_cycles(p)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]) and a[2] == b[2]


@given(generator_sets(), st.data())
def test_residue_labels_agree(gens, data):
    colors = data.draw(st.lists(st.integers(0, len(gens) - 1), unique=True))
    a, b = py.residue_labels(gens, colors), ck.residue_labels(gens, colors)
    assert np.array_equal(a[0], b[0]) and a[1] == b[1]


@given(generator_sets(), st.data())
def test_bfs_parity_agree(gens, data):
    start = data.draw(st.integers(0, gens.shape[1] - 1))
    a, b = py.bfs_parity(gens, start), ck.bfs_parity(gens, start)
    assert a[1] == b[1]
    if a[1]:
        assert np.array_equal(a[0], b[0])


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["gamma_3", "icosahedron", "snub_cube", "prism_5", "C3xC4"]), st.data())
def test_extend_map_agree(name, data):
    s = corpus.index(name).sigma
    n = s.shape[1]
    base, image = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
    a, b = py.extend_map(s, s, base, image), ck.extend_map(s, s, base, image)
    assert (a is None) == (b is None)
    if a is not None:
        assert np.array_equal(a, b)
        for i in range(len(s)):
            assert np.array_equal(a[s[i]], s[i][a])


@pytest.mark.parametrize("impl", [py, ck])
def test_extensions_count_the_group(impl):
    s = corpus.index("snub_cube").sigma
    ok = sum(impl.extend_map(s, s, 0, y) is not None for y in range(s.shape[1]))
    assert ok == 24
