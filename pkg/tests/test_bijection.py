import pytest

from toromaps.bijection import (
    BoundaryWord,
    add_dummy,
    boundary_word,
    canonical_biorientation,
    close_all,
    local_closure,
    open_map,
    psi,
)
from toromaps.core import tmap
from toromaps.core.maps import iso, theta
from toromaps.core.regions import h_violation, hex_face
from toromaps.errors import NoPattern, NotBalanced, NotInClass
from toromaps.unicellular import RIGHT, Caterpillar, assemble_skeleton, classify


def test_theta_closes_to_itself():
    h, x, trace = close_all(theta())
    assert trace.steps == [] and trace.words == ["aaaaaa"]
    assert h_violation(h) is None
    assert all(x.out)


def test_boundary_word_of_fixture(fixtures_dir):
    m, _ = tmap.read(fixtures_dir / "u3.tmap")
    word = boundary_word(m)
    a, b = word.counts()
    assert (a, b) == (12, 3)
    assert a == 2 * b + 6


def test_fixture_closure(fixtures_dir):
    m, _ = tmap.read(fixtures_dir / "u3.tmap")
    h_ref, orient = tmap.read(fixtures_dir / "h3.tmap")
    h, x, trace = close_all(m)
    assert len(trace.steps) == 3
    assert [w.count("b") for w in trace.words] == [3, 2, 1, 0]
    assert iso(h, h_ref)
    assert tuple(x.out) == tuple(orient)


def test_word_invariant_along_closures(ubal3):
    for u in ubal3:
        _, _, trace = close_all(u)
        for w in trace.words:
            assert w.count("a") == 2 * w.count("b") + 6
        assert len(trace.steps) == u.n_leaves


def test_local_closure_needs_pattern():
    word = BoundaryWord([("a", 0), ("a", 1), ("b", 2), ("a", 3)])
    with pytest.raises(NoPattern):
        local_closure(word, 0, alpha=[0] * 4, sigma=[0] * 4)


def test_patterns_are_cyclic():
    word = BoundaryWord([("a", 0), ("a", 1), ("b", 2), ("a", 3)])
    assert word.patterns() == [2]
    assert word.letters() == "aaba"


def test_unbalanced_rejected():
    m = assemble_skeleton([Caterpillar((RIGHT, RIGHT)), Caterpillar(()), Caterpillar(())])
    with pytest.raises(NotBalanced):
        close_all(m)


@pytest.mark.parametrize("order", ["first", "last", "random"])
def test_closure_order_independent(ubal3, order):
    for u in ubal3:
        ref = psi(u)
        for seed in range(3):
            h, x, _ = close_all(u, order=order, seed=seed)
            assert iso(h, ref)


def test_psi_lands_in_H(ubal3):
    for u in ubal3:
        h = psi(u)
        assert h_violation(h) is None
        assert h.n_vertices == len(u.nodes)
        assert h.root in h.faces[hex_face(h)]


def test_phi_psi_round_trip(ubal3):
    for u in ubal3:
        back = open_map(psi(u))
        assert back.carrier.unrooted_code() == u.carrier.unrooted_code()
        assert back.node_colors() == u.node_colors()


def test_psi_phi_round_trip(hmaps):
    for h in hmaps:
        u = open_map(h)
        h2 = psi(u)
        assert iso(h2, h, rooted=False)
        assert sorted(h2.color_counts()) == sorted(h.color_counts())


def test_canonical_matches_closure(ubal3):
    for u in ubal3:
        h, x, _ = close_all(u)
        assert canonical_biorientation(h) == x


def test_canonical_independent_of_choices(hmaps):
    for h in hmaps:
        ref = canonical_biorientation(h)
        for rc in (1, 2):
            assert canonical_biorientation(h, root_choice=rc) == ref
        for seed in (1, 7):
            assert canonical_biorientation(h, seed=seed, stepwise=max) == ref


def test_canonical_rejects_non_members():
    from toromaps.core.maps import angular_map

    with pytest.raises(NotInClass):
        canonical_biorientation(angular_map(theta(colors=False)))


def test_add_dummy_needs_a_hexagon():
    from toromaps.core.maps import angular_map

    with pytest.raises(NotInClass):
        add_dummy(angular_map(theta(colors=False)))


def test_open_map_is_balanced_precubic(hmaps):
    from toromaps.unicellular import is_balanced

    for h in hmaps:
        u = classify(open_map(h).carrier)
        assert is_balanced(u)
        assert len(u.nodes) == h.n_vertices
