from fractions import Fraction
from math import comb

import pytest

from toromaps.errors import ClosedFormMismatch
from toromaps import series
from toromaps.series import (
    BivariateSeries,
    D_series,
    N_closed,
    N_pipeline,
    S_ww_closed,
    Series,
    T_e,
    T_series,
    T_series_alt,
    bridges_B,
    caterpillar_sums,
    check_pipeline,
    compose_univariate,
    dyck_U,
    skeleton_series,
    solve_r,
    walk_series,
)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


# -- arithmetic -----------------------------------------------------------

def test_series_arithmetic():
    t = Series.var(6)
    geo = 1 / (1 - t)
    assert geo.c == [1] * 7
    assert (geo * (1 - t)).c == [1, 0, 0, 0, 0, 0, 0]
    assert ((1 + t) ** 3).c[:5] == [1, 3, 3, 1, 0]
    assert t.shift(2).c[:4] == [0, 0, 0, 1]
    half = geo / 2
    assert half.c[0] == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        t.inverse()


def test_bivariate_arithmetic():
    zb, zw = BivariateSeries.zb(5), BivariateSeries.zw(5)
    s = 1 / (1 - zb - zw)
    for i in range(6):
        for j in range(6 - i):
            assert s.coeff(i, j) == comb(i + j, i)
    assert s.coeff(3, 3) is None
    assert (s * (1 - zb - zw)) == BivariateSeries.const(1, 5)
    assert (zb * zb * zw).swap() == zw * zw * zb
    assert s.diagonal().c == [2 ** k for k in range(6)]


def test_compose_univariate():
    zb, zw = BivariateSeries.zb(4), BivariateSeries.zw(4)
    t = Series.var(4)
    f = 1 / (1 - t)
    assert compose_univariate(f, zb * zw) == 1 / (1 - zb * zw)
    with pytest.raises(ValueError):
        compose_univariate(f, 1 + zb)


# -- tree and walk series ---------------------------------------------------

def test_dyck_and_bridges():
    u = dyck_U(8)
    assert u.c == [0] + [catalan(n) for n in range(1, 9)]
    b = bridges_B(8)
    assert b.c == [comb(2 * n, n) for n in range(9)]


def walks_brute(i, n):
    """+-1 walks of length n from 0 to i, by direct counting."""
    if (n - i) % 2 or abs(i) > n:
        return 0
    return comb(n, (n + i) // 2)


def test_walk_series_against_binomials():
    order = 8
    for i in range(-4, 5):
        ws = walk_series(i, order)
        expect = [0] * (order + 1)
        for n in range(0, 2 * order + 2):
            if n // 2 <= order:
                expect[n // 2] += walks_brute(i, n)
        assert ws.c == expect
        # valuation floor(|i|/2)
        assert all(x == 0 for x in ws.c[: abs(i) // 2])
        assert ws.c[abs(i) // 2] != 0


def test_solve_r_equations():
    rb, rw = solve_r(7)
    zb, zw = BivariateSeries.zb(7), BivariateSeries.zw(7)
    assert rb == zb * (1 + rw) ** 2
    assert rw == zw * (1 + rb) ** 2
    assert rb.swap() == rw


def test_caterpillar_sums_start():
    f, g = caterpillar_sums(4)
    # i = 0 gives B^3 = 1 + 6t + ...; i = +-1 gives 2 B^3 (1+U)^3
    assert g.c[0] == 1 and f.c[0] == 2


def test_skeleton_ww_closed_form():
    _, _, s_ww = skeleton_series(9)
    assert s_ww == S_ww_closed(9)
    s_bb, s_bw, _ = skeleton_series(9)
    assert s_bb == s_ww.swap()
    assert s_bw == s_bw.swap()


# -- the generating functions ------------------------------------------------

def test_T_forms_agree():
    assert T_series(9) == T_series_alt(9)


def test_T_symmetry_and_edges():
    t = T_series(10)
    assert t == t.swap()
    # on the torus edges = vertices + faces
    assert T_e(10) == t.diagonal()


def test_N_pipeline_and_closed_form():
    n, parts = N_pipeline(9)
    assert n == N_closed(9)
    assert parts["bb"].swap() == parts["ww"]
    assert check_pipeline(9) == n


def test_D_series_is_R_product():
    rb, rw = solve_r(6)
    assert D_series(6) == (1 + rb) * (1 + rw)
    d = D_series(3)
    assert [d.coeff(0, 0), d.coeff(1, 0), d.coeff(0, 1), d.coeff(1, 1)] == [1, 1, 1, 5]


def test_check_pipeline_raises_on_mismatch(monkeypatch):
    monkeypatch.setattr(series, "N_closed", lambda order: N_closed(order) + 1)
    with pytest.raises(ClosedFormMismatch):
        check_pipeline(5)
