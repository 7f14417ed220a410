"""Marked quadrangulations and their splitting along the maximal enclosing
hexagon, plus the triangulation specialization ``iota``.

Conventions: a marked edge is stored as the root of the map, always on the
dart at the black endpoint.  A marked white corner of the hexagonal face is
stored as the root of the map, on the hexagon dart leaving that corner.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bijection import add_dummy
from .core.homology import homology
from .core.maps import BLACK, WHITE, CombMap, angular_map, bipartition, primal_from_angular, sub_map
from .core.regions import (
    closed_walks,
    hex_face,
    is_essentially_3connected,
    is_facial,
    is_in_H,
    q_violation,
    right_region,
    short_contractible_walks,
)
from .errors import MapError, NotBipartite, NotInClass, NotInT, NotInT3, NotPatchable


def _black_end(m, d):
    return d if m.colors[d] == BLACK else m.alpha[d]


def mark_edge(q, d):
    """``q`` with the edge of dart ``d`` marked."""
    if q.colors is None:
        col = bipartition(q)
        if col is None:
            raise NotBipartite("map has an odd closed walk")
        q = q.with_colors(col)
    return q.with_root(_black_end(q, d))


# -- corners of toroidal maps <-> edges of quadrangulations -----------------

def corner_edge_correspondence(m, corner):
    """Angular map of ``m`` with the edge across ``corner`` marked.

    ``corner`` is a dart ``d`` of ``m`` standing for the corner
    ``(d, sigma[d])``.  White vertices of the result are the vertices of
    ``m``, black ones its faces.
    """
    if m.genus != 1 or not is_essentially_3connected(m):
        raise NotInT("map is not an essentially 3-connected toroidal map")
    q = angular_map(m)
    return q.with_root(m.n_darts + corner)


def edge_corner_correspondence(q):
    """Inverse of :func:`corner_edge_correspondence`: ``(m, corner)``."""
    if q.colors is None:
        raise MapError("quadrangulation carries no coloring")
    white = q.root if q.colors[q.root] == WHITE else q.alpha[q.root]
    whites = [d for d in range(q.n_darts) if q.colors[d] == WHITE]
    m = primal_from_angular(q)
    corner = whites.index(white)
    return m.with_root(corner), corner


# -- maximal enclosing hexagon ----------------------------------------------

def enclosing_hexagons(q, e0=None, labeling=None):
    """All length-6 closed walks whose disk region has the edge of ``e0``
    in its interior, as ``(walk, region)`` pairs, one per region."""
    if e0 is None:
        e0 = q.root
    edge = min(e0, q.alpha[e0])
    if labeling is None:
        labeling = homology(q)
    found = {}
    for w in closed_walks(q, 6):
        if len(w) != 6 or not labeling.is_contractible(w):
            continue
        reg = right_region(q, w)
        if reg is None or reg.euler != 1 or edge not in reg.edges:
            continue
        found.setdefault(reg.faces, (w, reg))
    return list(found.values())


def maximal_enclosing_hexagon(q, e0=None, labeling=None):
    """The enclosing hexagon whose region contains every other one.

    Raises :class:`MapError` when there is no enclosing hexagon or no
    unique maximal one.
    """
    hexes = enclosing_hexagons(q, e0, labeling)
    if not hexes:
        raise MapError("no enclosing hexagon")
    best = max(hexes, key=lambda p: len(p[1].faces))
    for _, reg in hexes:
        if not reg.faces <= best[1].faces:
            raise MapError("enclosing hexagons have no unique maximal element")
    return best


# -- the family of planar hexagon fillings ----------------------------------

def d_violation(d):
    """Reason why ``d`` is not a planar bipartite irreducible map with one
    hexagonal face and quadrangles elsewhere, or ``None``."""
    if d.genus != 0:
        return "WrongGenus"
    if bipartition(d) is None:
        return "NotBipartite"
    degs = d.face_degrees()
    if degs.count(6) != 1 or any(x not in (4, 6) for x in degs):
        return "faces must be quadrangles plus one hexagon"
    hexa = d.faces[hex_face(d)]
    if len({d.vertex_of[x] for x in hexa}) != 6:
        return "hexagon vertices are not distinct"
    for w in closed_walks(d, 4):
        if len({d.vertex_of[x] for x in w}) != len(w):
            continue
        if len(w) == 2 and w[1] != d.alpha[w[0]]:
            return "multiple edge"
        if len(w) == 4:
            back = tuple(d.alpha[x] for x in reversed(w))
            if not is_facial(d, w) and not is_facial(d, back):
                return "separating 4-cycle"
    if d.n_edges == 6:
        return "no edge off the hexagon"
    return None


def is_in_D(d):
    return d_violation(d) is None


def marked_d_violation(d):
    reason = d_violation(d)
    if reason is not None:
        return reason
    f = hex_face(d)
    if f in (d.face_of[d.root], d.face_of[d.alpha[d.root]]):
        return "marked edge lies on the hexagon"
    return None


def v_of_D(d):
    """First white hexagon vertex reached by a depth-first traversal from
    the black end of the marked edge.

    At the start vertex darts are tried counterclockwise from the root dart;
    at a vertex entered through dart ``y`` they are tried counterclockwise
    starting after ``y``.
    """
    hverts = {d.vertex_of[x] for x in d.faces[hex_face(d)]}
    r = _black_end(d, d.root)
    seen = {d.vertex_of[r]}

    def darts_from(first):
        x = first
        while True:
            yield x
            x = d.sigma[x]
            if x == first:
                return

    stack = [darts_from(r)]
    while stack:
        x = next(stack[-1], None)
        if x is None:
            stack.pop()
            continue
        y = d.alpha[x]
        w = d.vertex_of[y]
        if w in seen:
            continue
        seen.add(w)
        if w in hverts and d.colors[y] == WHITE:
            return w
        stack.append(darts_from(d.sigma[y]))
    raise MapError("hexagon has no white vertex reachable from the root")


# -- split and patch ----------------------------------------------------------

@dataclass(frozen=True)
class HexagonSplit:
    """``h`` rooted at its marked white hexagon corner and ``d`` rooted at
    its marked edge."""

    h: CombMap
    d: CombMap


def _hexagon_sides(d):
    """Inner hexagon darts ``a_0..a_5`` of ``d`` (region on the right),
    starting at the side leaving ``v_of_D(d)``."""
    outer = d.faces[hex_face(d)]
    v = v_of_D(d)
    a0 = next(d.alpha[b] for b in outer if d.vertex_of[d.alpha[b]] == v)
    sides = [a0]
    for _ in range(5):
        sides.append(d.sigma_inv[d.alpha[sides[-1]]])
    return sides


def split(q):
    """Split the marked quadrangulation ``q`` into ``(h', d')``."""
    if q.colors is None:
        q = q.with_colors(bipartition(q))
    e0 = _black_end(q, q.root)
    walk, reg = maximal_enclosing_hexagon(q, e0)
    inner = set()
    for e in reg.edges:
        inner.add(e)
        inner.add(q.alpha[e])
    keep = [x for x in range(q.n_darts) if x not in inner]
    h, hidx = sub_map(q, keep)

    # the filling: interior darts, then inner sides a_i, then outer sides b_i
    interior = sorted(inner)
    k = len(interior)
    idx = {x: i for i, x in enumerate(interior)}
    n = k + 12
    alpha = [0] * n
    sigma = [0] * n
    colors = [0] * n
    for x in interior:
        alpha[idx[x]] = idx[q.alpha[x]]
        colors[idx[x]] = q.colors[x]
        y = q.sigma[x]
        if y in idx:
            sigma[idx[x]] = idx[y]
    for i in range(6):
        a, b = k + i, k + 6 + i
        alpha[a], alpha[b] = b, a
        colors[a] = q.colors[walk[i]]
        colors[b] = q.colors[q.alpha[walk[i]]]
        # rotation at the visit where walk[i] leaves: b_{i-1}, interior..., a_i
        prev_b = k + 6 + (i - 1) % 6
        x = q.sigma[q.alpha[walk[i - 1]]]
        last = prev_b
        while x != walk[i]:
            sigma[last] = idx[x]
            last = idx[x]
            x = q.sigma[x]
        sigma[last] = a
        sigma[a] = prev_b
    d = CombMap(alpha, sigma, idx[e0], colors)
    sides = _hexagon_sides(d)
    pos = sides[0] - k
    return HexagonSplit(h.with_root(hidx[walk[pos]]), d)


def patch(h, d):
    """Glue the filling ``d`` into the hexagonal face of ``h``, merging
    ``v_of_D(d)`` with the marked corner of ``h``."""
    if h.colors is None or d.colors is None:
        raise MapError("both maps must be colored")
    hf = hex_face(h)
    if hf is None or h.face_of[h.root] != hf or h.colors[h.root] != WHITE:
        raise NotInClass("H'", "root is not a white corner of the hexagon")
    w = [h.root]
    for _ in range(5):
        w.append(h.phi[w[-1]])
    sides = _hexagon_sides(d)
    side_set = set(sides) | {d.alpha[a] for a in sides}
    interior = [x for x in range(d.n_darts) if x not in side_set]
    nh = h.n_darts
    idx = {x: nh + i for i, x in enumerate(interior)}
    side_pos = {a: j for j, a in enumerate(sides)}
    alpha = list(h.alpha) + [0] * len(interior)
    sigma = list(h.sigma) + [0] * len(interior)
    colors = list(h.colors) + [0] * len(interior)
    for x in interior:
        alpha[idx[x]] = idx[d.alpha[x]]
        colors[idx[x]] = d.colors[x]
        y = d.sigma[x]
        sigma[idx[x]] = w[side_pos[y]] if y in side_pos else idx[y]
    for j, a in enumerate(sides):
        first = d.sigma[d.alpha[sides[j - 1]]]
        if first != a:
            sigma[h.alpha[w[j - 1]]] = idx[first]
    for j, a in enumerate(sides):
        if colors[w[j]] != d.colors[a]:
            raise NotPatchable("hexagon colors do not match")
    q = CombMap(alpha, sigma, idx[_black_end(d, d.root)], colors)
    reason = q_violation(q)
    if reason is not None:
        raise NotPatchable(f"patched map is not in Q: {reason}")
    return q


def bookkeeping(q, parts):
    """Check the color totals of a split: the two parts together have three
    more vertices of each color than ``q``.  Returns the tuple of counts."""
    qb, qw = q.color_counts()
    hb, hw = parts.h.color_counts()
    db, dw = parts.d.color_counts()
    ok = hb + db == qb + 3 and hw + dw == qw + 3
    return ok, (qb, qw), (hb, hw), (db, dw)


def interior_counts(d):
    """Black and white vertices of ``d`` off the hexagon."""
    hverts = {d.vertex_of[x] for x in d.faces[hex_face(d)]}
    b = w = 0
    for v in range(d.n_vertices):
        if v in hverts:
            continue
        if d.vertex_color(v) == BLACK:
            b += 1
        else:
            w += 1
    return b, w


def single_black_filling():
    """The filling with one interior black vertex joined to the three white
    hexagon corners, marked on one of those edges."""
    # hexagon sides a_0..a_5 (darts 0..5) leaving w0 b0 w1 b1 w2 b2,
    # outer sides 6..11, spokes: white ends 12..14, black ends 15..17
    alpha = [6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 15, 16, 17, 12, 13, 14]
    sigma = [0] * 18
    for i in range(6):
        sigma[i] = 6 + (i - 1) % 6
    for j in range(3):
        wv = 2 * j  # a_{2j} leaves the white corner j
        sigma[6 + (wv - 1) % 6] = 12 + j
        sigma[12 + j] = wv
        sigma[6 + wv] = 2 * j + 1  # black corner: b_{2j} then a_{2j+1}
    for j in range(3):
        sigma[15 + j] = 15 + (j - 1) % 3
    colors = [WHITE, BLACK] * 3 + [BLACK, WHITE] * 3 + [WHITE] * 3 + [BLACK] * 3
    return CombMap(alpha, sigma, 15, colors)


# -- triangulations -------------------------------------------------------------

def t3_violation(t):
    """Reason why face-rooted ``t`` is not an essentially simple toroidal
    triangulation without separating triangles around its root face."""
    if t.genus != 1:
        return "WrongGenus"
    if any(len(f) != 3 for f in t.faces):
        return "not a triangulation"
    root = t.face_of[t.root]
    for w, reg in short_contractible_walks(t, 3):
        if len(w) < 3:
            return f"contractible closed walk of length {len(w)} encloses a disk"
        if root in reg.faces and len(reg.faces) > 1:
            return "a non-facial triangle encloses the root face"
    return None


def is_in_T3(t):
    return t3_violation(t) is None


def face_rooted_code(m):
    """Code of ``m`` up to moving the root within its face."""
    f = m.faces[m.face_of[m.root]]
    return min(m.code(root=d) for d in f)


def iota(t):
    """Hexagon-rooted map obtained from the angular map of ``t`` by deleting
    the black vertex of the root face; rooted at the white hexagon corner
    left by the root corner."""
    reason = t3_violation(t)
    if reason is not None:
        raise NotInT3(reason)
    n = t.n_darts
    q = angular_map(t)
    f = t.face_of[t.root]
    gone = {d for d in range(n) if t.face_of[t.sigma[d]] == f}
    keep = [x for x in range(2 * n) if x not in gone and x - n not in gone]
    h, idx = sub_map(q, keep)
    y = t.root
    while y in gone:
        y = t.sigma[y]
    return h.with_root(idx[y])


def iota_inverse(h):
    """Inverse of :func:`iota`."""
    if not is_in_H(h):
        raise NotInClass("H", "not a hexagon-rooted map")
    if any(len(h.vertices[v]) != 3 for v in range(h.n_vertices) if h.vertex_color(v) == BLACK):
        raise NotInClass("H3", "a black vertex has degree other than 3")
    q, _ = add_dummy(h)
    t = primal_from_angular(q)
    whites = [x for x in range(q.n_darts) if q.colors[x] == WHITE]
    return t.with_root(whites.index(h.root))
