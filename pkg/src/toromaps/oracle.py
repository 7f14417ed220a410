"""Brute-force ground truth: exhaustive rooted enumeration filtered by class
predicates, and exhaustive cross-checks of the bijections."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import tmap
from .bijection import canonical_biorientation, close_all, open_map
from .core.maps import CombMap, angular_map, bipartition, iso, sub_map
from .core.regions import hex_face, is_in_Q, is_in_T, h_violation
from .decomposition import (
    bookkeeping,
    interior_counts,
    is_in_T3,
    iota,
    iota_inverse,
    marked_d_violation,
    patch,
    split,
)
from .errors import CapExceeded, MapError
from .kernels import canonical_code, rooted_maps
from .unicellular import enumerate_Ubal, is_balanced, kernel_rootings

DEFAULT_CAP = 6
CLASSES = ("all", "T", "Q", "H", "Ubal", "T3", "D")


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate.  ``genus`` only applies to class ``all``;
    ``bipartite`` adds a bipartiteness filter; ``rooted=False`` counts
    unrooted classes instead of rooted maps."""

    edges: int
    cls: str = "all"
    genus: int | None = None
    bipartite: bool = False
    rooted: bool = True
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise MapError(f"unknown class {self.cls!r}; expected one of {', '.join(CLASSES)}")
        if self.edges > self.cap:
            raise CapExceeded(f"{self.edges} edges exceeds the cap of {self.cap}")


def _raw(spec):
    e = spec.edges
    if spec.cls == "all":
        return rooted_maps(e, -1 if spec.genus is None else spec.genus)
    if spec.cls == "T":
        return rooted_maps(e, 1)
    if spec.cls == "Q":
        return rooted_maps(e, 1, {4})
    if spec.cls == "H":
        return rooted_maps(e, 1, {4, 6})
    if spec.cls == "Ubal":
        return rooted_maps(e, 1, {2 * e})
    if spec.cls == "T3":
        return rooted_maps(e, 1, {3})
    return rooted_maps(e, 0, {4, 6})


def _colored(m):
    col = bipartition(m)
    return None if col is None else m.with_colors(col)


def _accept(spec, m):
    """The map to emit for raw rooted map ``m``, or ``None``.  Bipartite
    classes come colored with the root vertex black."""
    cls = spec.cls
    if cls in ("Q", "H", "Ubal", "D") or spec.bipartite:
        m = _colored(m)
        if m is None:
            return None
    if cls == "all":
        return m
    if cls == "T":
        return m if is_in_T(m) else None
    if cls == "Q":
        return m if is_in_Q(m) else None
    if cls == "H":
        return m if h_violation(m) is None else None
    if cls == "Ubal":
        if any(len(v) not in (1, 3) for v in m.vertices):
            return None
        return m if is_balanced(m) else None
    if cls == "T3":
        return m if is_in_T3(m) else None
    return m if marked_d_violation(m) is None else None


def _filter_chunk(args):
    spec, chunk = args
    out = []
    for s, a in chunk:
        m = _accept(spec, CombMap(a, s, 0, check=False))
        if m is not None:
            out.append(m)
    return out


def enumerate_rooted(spec, jobs=1, emit=True):
    """``(count, maps)`` for ``spec``.  With ``rooted=False`` the maps are
    one representative per unrooted class.  ``jobs > 1`` spreads the
    filtering over worker processes; the result does not depend on it."""
    raw = _raw(spec)
    if jobs > 1 and len(raw) > 1000:
        size = -(-len(raw) // (4 * jobs))
        chunks = [(spec, raw[i:i + size]) for i in range(0, len(raw), size)]
        with ProcessPoolExecutor(jobs) as ex:
            maps = [m for part in ex.map(_filter_chunk, chunks) for m in part]
    else:
        maps = _filter_chunk((spec, raw))
    if not spec.rooted:
        seen = {}
        for m in maps:
            seen.setdefault(m.unrooted_code(), m)
        maps = list(seen.values())
    return len(maps), (maps if emit else None)


def coefficient_table(spec, jobs=1):
    """Counts bucketed by ``(faces, vertices)``."""
    _, maps = enumerate_rooted(spec, jobs)
    return dict(sorted(Counter((m.n_faces, m.n_vertices) for m in maps).items()))


def naive_rooted(n_edges):
    """Rooted maps with ``n_edges`` edges by trying every pair of
    permutations and keeping one per canonical code.  Tiny sizes only."""
    n = 2 * n_edges
    codes = set()
    for alpha in _matchings(n):
        for sigma in itertools.permutations(range(n)):
            for r in range(n):
                c = canonical_code(sigma, alpha, r)
                if c is not None:
                    codes.add(c)
    return codes


def _matchings(n):
    """Fixed-point-free involutions of ``range(n)``."""
    out = [0] * n

    def rec(rest):
        if not rest:
            yield tuple(out)
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            out[a], out[b] = b, a
            yield from rec(rest[1:i] + rest[i + 1:])

    yield from rec(list(range(n)))


# -- hexagon-rooted maps and fillings -------------------------------------------

def enumerate_H(max_edges=9):
    """Members of the hexagon-rooted family with at most ``max_edges`` edges,
    colored, one per unrooted colored class, rooted on the hexagon."""
    if max_edges > 9:
        raise CapExceeded("hexagon-rooted enumeration is capped at 9 edges")
    out = []
    for e in range(3, max_edges + 1, 2):
        seen = set()
        for s, a in rooted_maps(e, 1, {4, 6}):
            m = CombMap(a, s, 0, check=False)
            if m.face_degrees().count(6) != 1 or bipartition(m) is None:
                continue
            code = m.unrooted_code()
            if code in seen:
                continue
            seen.add(code)
            if h_violation(m) is not None:
                continue
            col = bipartition(m)
            hexa = m.faces[hex_face(m)]
            ccodes = set()
            for colored in (m.with_colors(col), m.with_colors(col).swap_colors()):
                cc = colored.unrooted_code()
                if cc in ccodes:
                    continue
                ccodes.add(cc)
                out.append(colored.with_root(hexa[0]))
    return out


def white_corner_rootings(h):
    """Distinct rooted versions of ``h`` on a white corner of the hexagon."""
    codes = {}
    for x in h.faces[hex_face(h)]:
        if h.colors[x] == 1:
            codes.setdefault(h.code(root=x), x)
    return [h.with_root(x) for x in codes.values()]


def enumerate_D_prime(max_edges=11):
    """Marked fillings with at most ``max_edges`` edges.

    Each filling plus a black vertex joined to its white hexagon corners is
    the angular map of a planar map with a triangular face; so we run over
    rooted planar maps ``P`` and their triangular faces, and mark the
    angular edge of the root corner.  Returns the list of fillings.
    """
    out = []
    for ep in range(5, (max_edges + 3) // 2 + 1):
        for s, a in rooted_maps(ep, 0):
            if not _faces_vertex_simple(s, a):
                continue
            p = CombMap(a, s, 0, check=False)
            n = p.n_darts
            q = None
            for f in range(p.n_faces):
                if len(p.faces[f]) != 3:
                    continue
                if q is None:
                    q = angular_map(p)
                gone = {d for d in range(n) if p.face_of[p.sigma[d]] == f}
                if 0 in gone:
                    continue
                keep = [x for x in range(2 * n) if x not in gone and x - n not in gone]
                d, idx = sub_map(q, keep)
                d = d.with_root(idx[n])
                if marked_d_violation(d) is None:
                    out.append(d)
    return out


def _faces_vertex_simple(sigma, alpha):
    """Whether no face of ``(sigma, alpha)`` visits a vertex twice.  A
    planar map failing this yields fillings with a multiple edge."""
    n = len(sigma)
    vert = [-1] * n
    k = 0
    for d in range(n):
        if vert[d] < 0:
            x = d
            while vert[x] < 0:
                vert[x] = k
                x = sigma[x]
            k += 1
    seen = [False] * n
    for d in range(n):
        if not seen[d]:
            vs = set()
            x = d
            while not seen[x]:
                seen[x] = True
                if vert[x] in vs:
                    return False
                vs.add(vert[x])
                x = sigma[alpha[x]]
    return True


def d_prime_table(max_edges=11):
    return dict(sorted(Counter(interior_counts(d) for d in enumerate_D_prime(max_edges)).items()))


# -- cross-checks -----------------------------------------------------------------

@dataclass
class Check:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    def fail(self, what, *maps):
        self.failures.append((what, [tmap.dumps(m) for m in maps]))

    @property
    def ok(self):
        return not self.failures


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def lines(self):
        for c in self.checks:
            status = "ok" if c.ok else f"{len(c.failures)} FAILED"
            yield f"{c.name}\t{c.checked}\t{status}"


def _kernel_rooted_counts(us):
    cnt = Counter()
    for u in us:
        cnt[u.node_colors()] += len(kernel_rootings(u))
    return cnt


def cross_check_bijections(max_leaves=3, max_h_edges=9, max_q_edges=8):
    """Run every round trip over exhaustive small inputs."""
    report = Report()
    us = enumerate_Ubal(max_leaves)

    c = Check("phi(psi(U)) = U")
    for u in us:
        c.checked += 1
        h = close_all(u)[0]
        back = open_map(h)
        if not iso(back.carrier, u.carrier, rooted=False):
            c.fail("round trip differs", u.carrier, h)
    report.checks.append(c)

    hs = enumerate_H(max_h_edges)
    c = Check("psi(phi(H)) = H")
    for h in hs:
        c.checked += 1
        u = open_map(h)
        h2 = close_all(u)[0]
        if not iso(h2, h, rooted=False) or h2.color_counts() != h.color_counts():
            c.fail("round trip differs", h)
    report.checks.append(c)

    c = Check("closure induces the canonical biorientation")
    for u in us:
        c.checked += 1
        h, x, _ = close_all(u)
        if canonical_biorientation(h).out != x.out:
            c.fail("orientations differ", h)
    report.checks.append(c)

    c = Check("6H = 3N")
    lhs = Counter()
    for h in hs:
        nb, nw = h.color_counts()
        lhs[(nb, nw)] += 2 * len(white_corner_rootings(h))
    rhs = _kernel_rooted_counts(us)
    for key in sorted(set(lhs) | set(rhs)):
        c.checked += 1
        if lhs[key] != rhs[key]:
            c.failures.append((f"size {key}: {lhs[key]} vs {rhs[key]}", []))
    report.checks.append(c)

    c = Check("patch(split(Q')) = Q'")
    for e in range(4, max_q_edges + 1, 2):
        for s, a in rooted_maps(e, 1, {4}):
            q = _colored(CombMap(a, s, 0, check=False))
            if q is None or not is_in_Q(q):
                continue
            c.checked += 1
            try:
                parts = split(q)
                ok = iso(patch(parts.h, parts.d), q) and bookkeeping(q, parts)[0]
            except (MapError, RuntimeError) as exc:
                c.fail(f"{type(exc).__name__}: {exc}", q)
                continue
            if not ok:
                c.fail("split and patch do not invert", q)
    report.checks.append(c)

    c = Check("iota round trip")
    for e in (3, 6):
        for s, a in rooted_maps(e, 1, {3}):
            t = CombMap(a, s, 0, check=False)
            if not is_in_T3(t):
                continue
            c.checked += 1
            if not iso(iota_inverse(iota(t)), t):
                c.fail("iota does not invert", t)
    report.checks.append(c)
    return report


def ubal_rooted_counts(max_leaves):
    """Rooted counts of the balanced unicellular family per number of
    leaves, from the leaf-insertion construction (for comparison with the
    rooted enumeration)."""
    out = Counter()
    for u in enumerate_Ubal(max_leaves):
        m = u.carrier
        out[u.n_leaves] += len({m.code(root=r) for r in range(m.n_darts)})
    return dict(out)


__all__ = [
    "CLASSES",
    "DEFAULT_CAP",
    "EnumSpec",
    "Report",
    "coefficient_table",
    "cross_check_bijections",
    "d_prime_table",
    "enumerate_D_prime",
    "enumerate_H",
    "enumerate_rooted",
    "naive_rooted",
    "ubal_rooted_counts",
    "white_corner_rootings",
]
