from collections import Counter

import pytest

from toromaps.core import tmap
from toromaps.core.maps import BLACK, WHITE, CombMap, dual, iso, single_edge, theta
from toromaps.errors import BadColoring, NotPrecubic, NotUnicellular, WrongGenus
from toromaps.oracle import EnumSpec, enumerate_rooted, ubal_rooted_counts
from toromaps.unicellular import (
    LEFT,
    RIGHT,
    Caterpillar,
    assemble_skeleton,
    caterpillar_gamma,
    classify,
    core_kernel,
    enumerate_Ubal,
    is_balanced,
    kernel_rootings,
    precubic_unicellular,
    random_ubal,
    side_counts,
    split_leaf,
)


def test_theta_is_balanced():
    u = classify(theta())
    assert u.n_leaves == 0
    assert u.node_colors() == (1, 1)
    assert is_balanced(u)


def test_classify_rejections():
    with pytest.raises(WrongGenus):
        classify(single_edge())
    with pytest.raises(NotUnicellular):
        classify(dual(theta(colors=False)))
    with pytest.raises(NotPrecubic):
        classify(CombMap((2, 3, 0, 1), (1, 2, 3, 0), 0))


def test_classify_rejects_degree_two():
    # theta with its edge {1, 4} subdivided by a new vertex (darts 6, 7)
    alpha = [3, 6, 5, 0, 7, 2, 1, 4]
    sigma = [1, 2, 0, 4, 5, 3, 7, 6]
    with pytest.raises(NotPrecubic):
        classify(CombMap(alpha, sigma, 0))


def test_fixture_u3(fixtures_dir):
    m, _ = tmap.read(fixtures_dir / "u3.tmap")
    u = classify(m)
    assert u.n_leaves == 3
    assert sorted(u.node_colors()) == [2, 3]
    assert is_balanced(u)
    assert len(u.pending) == 3


def test_core_kernel_of_theta():
    kd = core_kernel(theta())
    assert len(kd.kernel_vertices) == 2
    assert [len(c) for c in kd.chains] == [1, 1, 1]
    assert all(c.sides == () for c in kd.caterpillars)
    assert len(kd.cycles()) == 3


def test_side_counts_partition_non_core_edges():
    for u in enumerate_Ubal(4):
        kd = core_kernel(u)
        m = u.carrier
        for cyc in kd.cycles():
            left, right = side_counts(u, cyc)
            assert left == right
            assert left + right <= len(u.pending) + len(u.plain)
        # every non-core edge hangs off the core somewhere
        assert len(kd.core_darts) % 2 == 0
        assert len(kd.core_darts) // 2 <= m.n_edges


def test_caterpillar_gamma_and_mirror():
    cat = Caterpillar((RIGHT, RIGHT, LEFT))
    assert caterpillar_gamma(cat) == 1
    assert caterpillar_gamma(cat.mirror()) == -1
    assert cat.color2 == BLACK
    assert Caterpillar((RIGHT,)).color2 == BLACK
    assert Caterpillar((RIGHT, LEFT)).color2 == WHITE


def test_assemble_skeleton_balance_iff_equal_gammas():
    options = [
        Caterpillar(()),
        Caterpillar((RIGHT, LEFT)),
        Caterpillar((RIGHT, RIGHT)),
        Caterpillar((LEFT, LEFT)),
    ]
    for c1 in options:
        for c2 in options:
            for c3 in options:
                m = assemble_skeleton([c1, c2, c3])
                u = classify(m)
                equal = len({caterpillar_gamma(c) for c in (c1, c2, c3)}) == 1
                assert is_balanced(u) == equal
                assert [c.sides for c in core_kernel(u).caterpillars] == [c1.sides, c2.sides, c3.sides]


def test_assemble_skeleton_parity_mismatch():
    with pytest.raises(BadColoring):
        assemble_skeleton([Caterpillar(()), Caterpillar((RIGHT,)), Caterpillar(())])


def test_split_leaf_adds_one_leaf():
    m = assemble_skeleton([Caterpillar((RIGHT,))] * 3)
    u = classify(m)
    leaf = next(d for d in range(m.n_darts) if m.sigma[d] == d)
    u2 = classify(split_leaf(m, leaf))
    assert u2.n_leaves == u.n_leaves + 1
    # splitting a leaf keeps side counts along core cycles
    assert is_balanced(u2) == is_balanced(u)


def test_precubic_counts_small():
    counts = {k: len(v) for k, v in precubic_unicellular(2).items()}
    assert counts[0] == 1
    # one leaf: the leaf sits on one of the three (equivalent) edges
    assert counts[1] == 1


def test_enumerate_ubal_counts():
    by_leaves = Counter(u.n_leaves for u in enumerate_Ubal(4))
    assert by_leaves == {0: 1, 2: 2, 3: 6, 4: 22}
    # one leaf can never balance: every core cycle would see it on one side
    assert by_leaves[1] == 0


def test_ubal_against_brute_force():
    counts = ubal_rooted_counts(2)
    for leaves, edges in ((0, 3), (1, 5), (2, 7)):
        n, _ = enumerate_rooted(EnumSpec(edges, "Ubal", cap=7), emit=False)
        # the brute force colors the root vertex black
        assert 2 * n == counts.get(leaves, 0)


def test_enumerate_ubal_pairwise_distinct():
    maps = enumerate_Ubal(4)
    codes = {u.carrier.unrooted_code() for u in maps}
    assert len(codes) == len(maps)


def test_kernel_rootings_of_theta():
    roots = kernel_rootings(theta())
    assert len(roots) == 2
    assert not iso(roots[0], roots[1])


@pytest.mark.parametrize("leaves", [0, 2, 3, 5, 8])
def test_random_ubal(leaves):
    u = random_ubal(leaves, seed=leaves)
    assert u.n_leaves == leaves
    assert is_balanced(u)
    assert u.carrier.code() == random_ubal(leaves, seed=leaves).carrier.code()


def test_random_ubal_impossible():
    with pytest.raises(ValueError):
        random_ubal(-1)
    with pytest.raises(ValueError):
        random_ubal(1)
