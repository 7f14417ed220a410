"""Property-based checks of structural invariants on random inputs."""

import functools

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from toromaps.bijection import close_all, open_map
from toromaps.cli import main
from toromaps.core import tmap
from toromaps.core.homology import homology
from toromaps.core.maps import CombMap, angular_map, dual, iso, primal_from_angular
from toromaps.core.regions import boundary_length, h_violation, hex_face, short_contractible_walks
from toromaps.decomposition import marked_d_violation, patch, split
from toromaps.errors import NotConnected
from toromaps.oracle import EnumSpec, enumerate_D_prime, enumerate_H, enumerate_rooted, white_corner_rootings
from toromaps.orientations import s_quad_violation, sigma_inverse, sigma_transfer, walk_counts
from toromaps.series import BivariateSeries, Series
from toromaps.unicellular import classify, core_kernel, is_balanced, random_ubal

leaf_counts = st.integers(0, 6).filter(lambda k: k != 1)
SLOW = settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
FAST = settings(max_examples=60, deadline=None)


@st.composite
def random_maps(draw, max_edges=6):
    e = draw(st.integers(1, max_edges))
    n = 2 * e
    sigma = draw(st.permutations(range(n)))
    order = draw(st.permutations(range(n)))
    alpha = [0] * n
    for i in range(0, n, 2):
        a, b = order[i], order[i + 1]
        alpha[a], alpha[b] = b, a
    try:
        return CombMap(alpha, sigma, root=0)
    except NotConnected:
        assume(False)


def random_relabel(draw_perm, m):
    return m.relabel(draw_perm)


# -- map core ----------------------------------------------------------------------

@FAST
@given(random_maps())
def test_euler_characteristic_is_even(m):
    chi = m.n_vertices - m.n_edges + m.n_faces
    assert chi % 2 == 0 and chi <= 2
    assert m.genus == (2 - chi) // 2


@FAST
@given(random_maps(), st.data())
def test_relabelling_keeps_the_code(m, data):
    perm = data.draw(st.permutations(range(m.n_darts)))
    r = m.relabel(perm)
    assert r.code() == m.code()
    assert r.unrooted_code() == m.unrooted_code()
    assert iso(r, m)


@FAST
@given(random_maps())
def test_dual_and_angular_round_trips(m):
    dd = dual(dual(m))
    assert iso(dd.with_root(m.alpha[m.root]), m)
    q = angular_map(m)
    assert q.genus == m.genus
    assert all(len(f) == 4 for f in q.faces)
    assert iso(primal_from_angular(q), m)


@FAST
@given(random_maps())
def test_tmap_round_trip(m):
    text = tmap.dumps(m)
    m2, orient = tmap.loads(text)
    assert orient is None
    assert m2 == m
    assert tmap.dumps(m2) == text


@FAST
@given(random_maps(max_edges=5))
def test_homology_labels(m):
    assume(m.genus == 1)
    lab = homology(m)
    nonzero = 0
    for d in range(m.n_darts):
        x, y = lab.label[d]
        assert lab.label[m.alpha[d]] == (-x, -y)
        nonzero += (x, y) != (0, 0)
    # only the two generator edges and cotree edges carry labels
    assert nonzero <= 2 * (m.n_edges - m.n_vertices + 1)
    for f in m.faces:
        assert lab.walk_sum(f) == (0, 0)


@FAST
@given(random_maps(max_edges=5), st.data())
def test_boundary_length_cut_identity(m, data):
    faces = range(m.n_faces)
    a = set(data.draw(st.sets(st.sampled_from(faces))))
    b = set(data.draw(st.sets(st.sampled_from(faces))))
    cross = sum(
        1 for f in a - b for d in m.faces[f] if m.face_of[m.alpha[d]] in b - a
    )
    lhs = boundary_length(m, a) + boundary_length(m, b)
    assert lhs == boundary_length(m, a | b) + boundary_length(m, a & b) + 2 * cross


# -- series ----------------------------------------------------------------------------

coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=8)


@FAST
@given(coeff_lists, coeff_lists, st.integers(1, 7))
def test_series_product_respects_truncation(a, b, order):
    full = Series(a, 20) * Series(b, 20)
    assert (Series(a, order) * Series(b, order)).c == full.c[: order + 1]


@FAST
@given(coeff_lists, st.sampled_from([1, -1]), st.integers(1, 7))
def test_series_inverse(a, c0, order):
    s = Series([c0] + a, order)
    one = s * s.inverse()
    assert one.c == [1] + [0] * order
    assert all(isinstance(x, int) for x in s.inverse().c)


@FAST
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-3, 3)),
       st.integers(1, 6))
def test_bivariate_inverse(coeffs, order):
    coeffs[(0, 0)] = 1
    s = BivariateSeries(coeffs, order)
    assert s * s.inverse() == BivariateSeries.const(1, order)
    assert s.swap().swap() == s


# -- unicellular maps and the closure ------------------------------------------------

@SLOW
@given(leaf_counts, st.integers(0, 10 ** 6))
def test_random_ubal_structure(leaves, seed):
    u = random_ubal(leaves, seed=seed)
    assert len(u.nodes) - u.n_leaves == 2
    assert len(u.plain) - u.n_leaves == 3
    assert is_balanced(u)
    kd = core_kernel(u)
    assert len(kd.kernel_vertices) == 2 and len(kd.chains) == 3


@SLOW
@given(leaf_counts, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_closure_invariants(leaves, seed, order_seed):
    u = random_ubal(leaves, seed=seed)
    h, x, trace = close_all(u, order="random", seed=order_seed)
    for w in trace.words:
        assert w.count("a") == 2 * w.count("b") + 6
        if "b" in w:
            assert "baaa" in w + w[:3]
    assert h_violation(h) is None
    assert s_quad_violation(x, hex_face(h)) is None
    assert iso(h, close_all(u)[0])
    assert sorted(h.color_counts()) == sorted(u.node_colors())


@SLOW
@given(leaf_counts.filter(lambda k: k <= 5), st.integers(0, 10 ** 6))
def test_open_inverts_close(leaves, seed):
    u = random_ubal(leaves, seed=seed)
    h, x, _ = close_all(u)
    back = open_map(h, seed=seed)
    assert back.carrier.unrooted_code() == u.carrier.unrooted_code()
    assert back.node_colors() == u.node_colors()


@SLOW
@given(leaf_counts.filter(lambda k: k <= 5), st.integers(0, 10 ** 6))
def test_sigma_transfer_and_walk_counts(leaves, seed):
    u = random_ubal(leaves, seed=seed)
    h, x, _ = close_all(u)
    y = sigma_transfer(x, check=False)
    assert sigma_inverse(y, h) == x
    for w, _ in short_contractible_walks(h, 6):
        cw, o = walk_counts(x, w)
        assert cw + o == 3 * (len(w) // 2 - 1)


@SLOW
@given(leaf_counts, st.integers(0, 1000))
def test_sample_cli_is_deterministic(leaves, seed):
    import contextlib
    import io

    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert main(["sample", "--leaves", str(leaves), "--seed", str(seed)]) == 0
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    m, _ = tmap.loads(outs[0])
    assert classify(m).n_leaves == leaves


# -- decomposition -------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _corner_rooted_h():
    return tuple(hr for h in enumerate_H(7) for hr in white_corner_rootings(h))


@functools.lru_cache(maxsize=None)
def _fillings():
    return tuple(enumerate_D_prime(11))


@functools.lru_cache(maxsize=None)
def _marked_q():
    return tuple(m for e in (4, 6, 8) for m in enumerate_rooted(EnumSpec(e, "Q", cap=8))[1])


@SLOW
@given(st.data())
def test_patch_then_split(data):
    h = data.draw(st.sampled_from(_corner_rooted_h()))
    d = data.draw(st.sampled_from(_fillings()))
    q = patch(h, d)
    parts = split(q)
    assert iso(parts.h, h) and iso(parts.d, d)
    assert marked_d_violation(parts.d) is None


@SLOW
@given(st.data())
def test_regions_around_marked_edge_have_long_boundary(data):
    q = data.draw(st.sampled_from(_marked_q()))
    edge = min(q.root, q.alpha[q.root])
    for w, reg in short_contractible_walks(q, 6):
        if edge in reg.edges:
            assert len(w) >= 6
