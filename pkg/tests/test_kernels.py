import importlib.util

import pytest

from toromaps import _kernels_py, kernels
from toromaps.oracle import naive_rooted

HAVE_COMPILED = importlib.util.find_spec("toromaps._kernels") is not None


def codes(impl, n_edges, genus=-1, faces=None):
    return {impl.canonical_code(s, a, 0) for s, a in impl.rooted_maps(n_edges, genus, faces)}


@pytest.mark.parametrize("n_edges, expected", [(1, 2), (2, 10), (3, 74)])
def test_rooted_counts_match_naive(n_edges, expected):
    found = codes(kernels, n_edges)
    assert len(found) == expected
    assert found == naive_rooted(n_edges)


@pytest.mark.parametrize("n_edges", [1, 2, 3, 4])
def test_enumeration_has_no_duplicates(n_edges):
    maps = list(kernels.rooted_maps(n_edges))
    assert len(maps) == len(codes(kernels, n_edges))


def test_genus_split_of_rooted_maps():
    # rooted maps with 3 edges: 54 planar, 20 toroidal
    assert len(list(kernels.rooted_maps(3, 0))) == 54
    assert len(list(kernels.rooted_maps(3, 1))) == 20


def test_face_degree_filter():
    for s, a in kernels.rooted_maps(4, 1, {4}):
        n = len(s)
        phi = [s[a[d]] for d in range(n)]
        seen = [False] * n
        for d in range(n):
            if not seen[d]:
                k = 0
                x = d
                while not seen[x]:
                    seen[x] = True
                    x = phi[x]
                    k += 1
                assert k == 4


def test_count_cycles():
    assert kernels.count_cycles((0, 1, 2)) == 3
    assert kernels.count_cycles((1, 2, 0)) == 1
    assert kernels.count_cycles(()) == 0


def test_canonical_code_is_relabelling_invariant():
    s, a = (1, 2, 0, 4, 5, 3), (3, 4, 5, 0, 1, 2)
    perm = (5, 3, 1, 0, 2, 4)
    inv = [0] * 6
    for i, p in enumerate(perm):
        inv[p] = i
    s2 = [perm[s[inv[i]]] for i in range(6)]
    a2 = [perm[a[inv[i]]] for i in range(6)]
    assert kernels.canonical_code(s, a, 0) == kernels.canonical_code(s2, a2, perm[0])


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled extension not built")
def test_backends_agree():
    from toromaps import _kernels

    for n in range(1, 6):
        assert list(_kernels.rooted_maps(n)) == list(_kernels_py.rooted_maps(n))
    assert list(_kernels.rooted_maps(6, 1, {4, 6})) == list(_kernels_py.rooted_maps(6, 1, {4, 6}))
    for s, a in _kernels_py.rooted_maps(4, 1):
        for r in range(len(s)):
            assert _kernels.canonical_code(s, a, r) == _kernels_py.canonical_code(s, a, r)
        data = list(range(len(s)))
        assert _kernels.canonical_code(s, a, 0, data) == _kernels_py.canonical_code(s, a, 0, data)


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
    if HAVE_COMPILED:
        assert kernels.BACKEND == "cython"
