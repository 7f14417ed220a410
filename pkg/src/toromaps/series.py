"""Exact truncated power series and the generating functions of toroidal
essentially 3-connected maps.

Bivariate series are truncated by total degree; coefficients stay exact
(``int`` where possible, ``fractions.Fraction`` otherwise).  Variable order is
``(z_black, z_white)``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ClosedFormMismatch


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class Series:
    """Univariate series truncated after degree ``order``."""

    __slots__ = ("c", "order")

    def __init__(self, coeffs, order):
        c = [_norm(x) for x in list(coeffs)[: order + 1]]
        c += [0] * (order + 1 - len(c))
        self.c = c
        self.order = order

    @classmethod
    def const(cls, a, order):
        return cls([a], order)

    @classmethod
    def var(cls, order):
        return cls([0, 1], order)

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        return Series.const(other, self.order)

    def __add__(self, other):
        o = self._lift(other)
        n = min(self.order, o.order)
        return Series([self.c[i] + o.c[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series([-x for x in self.c], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([x * other for x in self.c], self.order)
        n = min(self.order, other.order)
        a, b = self.c, other.c
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return Series(out, n)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.c[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term")
        inv0 = 1 // c0 if c0 in (1, -1) else Fraction(1, 1) / c0
        out = [inv0]
        for k in range(1, self.order + 1):
            s = sum(self.c[i] * out[k - i] for i in range(1, k + 1))
            out.append(-s * inv0)
        return Series(out, self.order)

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return Series([Fraction(x) / other for x in self.c], self.order)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k):
        out = Series.const(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by ``t^k``."""
        return Series([0] * k + self.c, self.order)

    def coeffs(self, lo=0, hi=None):
        hi = self.order if hi is None else hi
        return [self.c[i] for i in range(lo, hi + 1)]

    def __getitem__(self, k):
        return self.c[k] if k <= self.order else None

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.c[: n + 1] == other.c[: n + 1]

    def __repr__(self):
        return f"Series({self.c})"


class BivariateSeries:
    """Series in ``(z_black, z_white)`` truncated after total degree ``order``."""

    __slots__ = ("c", "order")

    def __init__(self, coeffs, order):
        self.order = order
        self.c = [[0] * (order + 1 - i) for i in range(order + 1)]
        for (i, j), x in (coeffs.items() if isinstance(coeffs, dict) else ()):
            if i + j <= order:
                self.c[i][j] = _norm(x)

    @classmethod
    def const(cls, a, order):
        return cls({(0, 0): a}, order)

    @classmethod
    def zb(cls, order):
        return cls({(1, 0): 1}, order)

    @classmethod
    def zw(cls, order):
        return cls({(0, 1): 1}, order)

    def _lift(self, other):
        if isinstance(other, BivariateSeries):
            return other
        return BivariateSeries.const(other, self.order)

    def _new(self, n):
        return BivariateSeries({}, n)

    def __add__(self, other):
        o = self._lift(other)
        n = min(self.order, o.order)
        out = self._new(n)
        for i in range(n + 1):
            for j in range(n + 1 - i):
                out.c[i][j] = self.c[i][j] + o.c[i][j]
        return out

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivariateSeries):
            out = self._new(self.order)
            for i in range(self.order + 1):
                out.c[i] = [_norm(x * other) for x in self.c[i]]
            return out
        n = min(self.order, other.order)
        a, b = self.c, other.c
        out = self._new(n)
        oc = out.c
        for i1 in range(n + 1):
            for j1 in range(n + 1 - i1):
                x = a[i1][j1]
                if not x:
                    continue
                rem = n - i1 - j1
                for i2 in range(rem + 1):
                    row = b[i2]
                    orow = oc[i1 + i2]
                    for j2 in range(rem - i2 + 1):
                        y = row[j2]
                        if y:
                            orow[j1 + j2] += x * y
        for i in range(n + 1):
            oc[i] = [_norm(x) for x in oc[i]]
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        out = BivariateSeries.const(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        n = self.order
        c00 = self.c[0][0]
        if c00 == 0:
            raise ZeroDivisionError("series with zero constant term")
        inv0 = 1 // c00 if c00 in (1, -1) else Fraction(1, 1) / c00
        out = self._new(n)
        out.c[0][0] = inv0
        for tot in range(1, n + 1):
            for i in range(tot + 1):
                j = tot - i
                s = 0
                for k in range(i + 1):
                    for l in range(j + 1):
                        if k or l:
                            x = self.c[k][l]
                            if x:
                                s += x * out.c[i - k][j - l]
                out.c[i][j] = _norm(-s * inv0)
        return out

    def __truediv__(self, other):
        if not isinstance(other, BivariateSeries):
            return self * (Fraction(1) / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def swap(self):
        """Exchange the two variables."""
        out = self._new(self.order)
        for i in range(self.order + 1):
            for j in range(self.order + 1 - i):
                out.c[j][i] = self.c[i][j]
        return out

    def coeff(self, i, j):
        return self.c[i][j] if i + j <= self.order else None

    def items(self):
        for i in range(self.order + 1):
            for j in range(self.order + 1 - i):
                if self.c[i][j]:
                    yield (i, j), self.c[i][j]

    def diagonal(self):
        """Univariate series ``f(z, z)``."""
        out = [0] * (self.order + 1)
        for (i, j), x in self.items():
            out[i + j] += x
        return Series(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(
            self.c[i][j] == other.c[i][j] for i in range(n + 1) for j in range(n + 1 - i)
        )

    def __repr__(self):
        terms = [f"{x}*zb^{i}*zw^{j}" for (i, j), x in self.items()]
        return "BivariateSeries(" + " + ".join(terms) + ")"

    def table(self):
        """Rows by degree in ``z_black``, columns by degree in ``z_white``."""
        return [[self.c[i][j] if i + j <= self.order else 0 for j in range(self.order + 1)]
                for i in range(self.order + 1)]


def compose_univariate(f, w):
    """``f(w)`` for a univariate ``f`` and a bivariate ``w`` with no constant term."""
    if w.c[0][0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = w.order
    out = BivariateSeries.const(f.c[0], n)
    power = BivariateSeries.const(1, n)
    for k in range(1, min(f.order, n) + 1):
        power = power * w
        if f.c[k]:
            out = out + power * f.c[k]
    return out


# -- the tree series ------------------------------------------------------

def solve_r(order):
    """``(r_black, r_white)`` with ``r_b = z_b (1 + r_w)^2``, ``r_w = z_w (1 + r_b)^2``.

    Each round of the fixed-point iteration fixes at least one more total
    degree, so ``order`` rounds suffice.
    """
    zb = BivariateSeries.zb(order)
    zw = BivariateSeries.zw(order)
    rb = BivariateSeries({}, order)
    rw = BivariateSeries({}, order)
    for _ in range(order + 1):
        rb, rw = zb * (1 + rw) ** 2, zw * (1 + rb) ** 2
    return rb, rw


def T_series(order):
    """Rooted toroidal essentially 3-connected maps; ``z_black`` marks faces
    and ``z_white`` vertices."""
    rb, rw = solve_r(order)
    num = rb * rw * (rb * rb + rw * rw + rb * rw + 2 * rb + 2 * rw + 1)
    den = (rb + rw + 1) * (1 + rb + rw - 3 * rb * rw) ** 2
    return num / den


def T_series_alt(order):
    """The same series from ``p/(s-3p)^2 * (s - p/s)``."""
    rb, rw = solve_r(order)
    s = 1 + rb + rw
    p = rb * rw
    return p / (s - 3 * p) ** 2 * (s - p / s)


def _fixed_point(step, order):
    r = Series([], order)
    for _ in range(order + 1):
        r = step(r)
    return r


def T_e(order):
    """By edges: ``r^2 (1+r) / ((1+2r)(1-r)^2(1+3r))`` with ``r = z (1+r)^2``."""
    z = Series.var(order)
    r = _fixed_point(lambda r: z * (1 + r) ** 2, order)
    return r * r * (1 + r) / ((1 + 2 * r) * (1 - r) ** 2 * (1 + 3 * r))


def T_v(order):
    """By vertices: ``(r+1)(r^2+3r+4) r / ((3r^2+2r-2)^2 (r+2))`` with
    ``r = z (2 + 2r + r^2)^2``."""
    z = Series.var(order)
    r = _fixed_point(lambda r: z * (2 + 2 * r + r * r) ** 2, order)
    return (r + 1) * (r * r + 3 * r + 4) * r / ((3 * r * r + 2 * r - 2) ** 2 * (r + 2))


def T_t(order):
    """Essentially simple triangulations by vertices: ``r/(1-3r)^2`` with ``r = z (1+r)^4``."""
    z = Series.var(order)
    r = _fixed_point(lambda r: z * (1 + r) ** 4, order)
    return r / (1 - 3 * r) ** 2


# -- lattice walks and the kernel-rooted series -------------------------

def dyck_U(order):
    """Non-empty Dyck paths by half-length: ``U = t (1+U)^2``."""
    t = Series.var(order)
    return _fixed_point(lambda u: t * (1 + u) ** 2, order)


def bridges_B(order):
    u = dyck_U(order)
    return (1 + u) / (1 - u)


def walk_series(i, order):
    """``P^(i)(t)``: +-1 walks from 0 to ``i``, weight ``t^floor(n/2)`` for length n."""
    i = abs(i)
    u = dyck_U(order)
    b = (1 + u) / (1 - u)
    return (b * (1 + u) ** i).shift(i // 2)


def caterpillar_sums(order):
    """``(F, G)`` with ``F = sum over odd i of P^(i)^3`` and ``G`` the same over
    even ``i``, as series in ``t``.

    ``P^(i)`` has valuation ``floor(|i|/2)``, so its cube has valuation at
    least ``3 floor(|i|/2)``; only ``|i| <= 2 order / 3 + 1`` contribute.
    """
    f = Series([], order)
    g = Series([], order)
    i = 0
    while 3 * (i // 2) <= order:
        p3 = walk_series(i, order) ** 3
        mult = 1 if i == 0 else 2
        if i % 2:
            f = f + p3 * mult
        else:
            g = g + p3 * mult
        i += 1
    return f, g


def skeleton_series(order):
    """``(S_bb, S_bw, S_ww)`` as bivariate series in ``(t_black, t_white)``."""
    f, g = caterpillar_sums(order)
    tb = BivariateSeries.zb(order)
    tw = BivariateSeries.zw(order)
    prod = tb * tw
    fw = compose_univariate(f, prod)
    s_ww = tb ** 3 * fw
    s_bb = tw ** 3 * fw
    s_bw = compose_univariate(g, prod)
    return s_bb, s_bw, s_ww


def S_ww_closed(order):
    """``2 t_b^3 / ((1 - t_b t_w)(1 - 4 t_b t_w)^2)``."""
    tb = BivariateSeries.zb(order)
    tw = BivariateSeries.zw(order)
    x = tb * tw
    return 2 * tb ** 3 / ((1 - x) * (1 - 4 * x) ** 2)


def substitute(s, x, y):
    """``s(x, y)`` for bivariate ``x``, ``y`` without constant terms."""
    n = min(s.order, x.order)
    xp = [BivariateSeries.const(1, n)]
    yp = [BivariateSeries.const(1, n)]
    for _ in range(n):
        xp.append(xp[-1] * x)
        yp.append(yp[-1] * y)
    out = BivariateSeries({}, n)
    for (i, j), a in s.items():
        if i + j <= n:
            out = out + xp[i] * yp[j] * a
    return out


def N_pipeline(order):
    """Kernel-rooted balanced unicellular maps by (black, white) vertices,
    computed from caterpillars: ``(N, parts)`` where ``parts`` holds
    ``N_bb, N_bw, N_ww``."""
    rb, rw = solve_r(order)
    zb = BivariateSeries.zb(order)
    zw = BivariateSeries.zw(order)
    x = zb * (1 + rw)
    y = zw * (1 + rb)
    s_bb, s_bw, s_ww = skeleton_series(order)
    n_bb = zb * zb * substitute(s_bb, x, y)
    n_bw = zb * zw * substitute(s_bw, x, y)
    n_ww = zw * zw * substitute(s_ww, x, y)
    return n_bb + 2 * n_bw + n_ww, {"bb": n_bb, "bw": n_bw, "ww": n_ww}


def N_closed(order):
    rb, rw = solve_r(order)
    num = 2 * rb * rw * (1 + 2 * rb + 2 * rw + rb * rw + rb * rb + rw * rw)
    den = (1 + rb) * (1 + rw) * (1 + rb + rw) * (1 + rb + rw - 3 * rb * rw) ** 2
    return num / den


def H_series(order):
    n, _ = N_pipeline(order)
    return n * Fraction(1, 2)


def D_series(order):
    """``R_black R_white``: planar hexagon-bounded pieces by interior vertices."""
    rb, rw = solve_r(order)
    return (1 + rb) * (1 + rw)


def T_from_pipeline(order):
    rb, rw = solve_r(order)
    return (1 + rb) * (1 + rw) * H_series(order)


def check_pipeline(order):
    """Verify the caterpillar computation of ``N`` against its closed form
    and ``R_b R_w N / 2`` against ``T``; returns ``N``."""
    n, _ = N_pipeline(order)
    if n != N_closed(order):
        raise ClosedFormMismatch("caterpillar pipeline disagrees with the closed form of N")
    if T_from_pipeline(order) != T_series(order):
        raise ClosedFormMismatch("R_b R_w N / 2 disagrees with T")
    return n


FAMILIES = ("T", "Te", "Tv", "Tt", "N")
