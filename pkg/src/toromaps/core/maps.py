"""Dart-based combinatorial maps.

A map on ``n`` darts ``0 .. n-1`` is a pair of permutations: ``alpha`` pairs
the two darts of every edge and ``sigma`` lists the darts around each vertex in
counterclockwise order.  Faces are the orbits of ``phi[d] = sigma[alpha[d]]``;
following ``phi`` walks along a face with the face on the right.

Orientation vocabulary used throughout the package:

* at a vertex entered by dart ``din`` and left by dart ``dout`` (both darts of
  that vertex), the darts met strictly after ``din`` and strictly before
  ``dout`` in counterclockwise order lie on the *right* of the walk;
* the corner ``(d, sigma[d])`` lies in the face of ``sigma[d]``.
"""

from __future__ import annotations

from ..errors import (
    BadColoring,
    NotBipartite,
    NotConnected,
    NotInvolution,
    NotPermutation,
    NotQuadrangulation,
    WrongGenus,
)
from ..kernels import canonical_code

BLACK = 0
WHITE = 1
COLOR_NAMES = {BLACK: "black", WHITE: "white"}


def _cycles(perm):
    n = len(perm)
    owner = [-1] * n
    cycles = []
    for s in range(n):
        if owner[s] < 0:
            cyc = []
            x = s
            while owner[x] < 0:
                owner[x] = len(cycles)
                cyc.append(x)
                x = perm[x]
            cycles.append(tuple(cyc))
    return tuple(cycles), tuple(owner)


def invert(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


class CombMap:
    """Immutable connected map with optional root dart and vertex 2-coloring.

    ``colors`` is given per dart (the color of the dart's vertex) as a
    sequence of :data:`BLACK` / :data:`WHITE`, or ``None``.
    """

    __slots__ = (
        "alpha", "sigma", "sigma_inv", "phi", "root", "colors",
        "vertices", "vertex_of", "faces", "face_of", "genus",
    )

    def __init__(self, alpha, sigma, root=None, colors=None, *, check=True):
        alpha = tuple(int(a) for a in alpha)
        sigma = tuple(int(s) for s in sigma)
        n = len(alpha)
        if check:
            if n == 0 or n % 2:
                raise NotInvolution("need a positive even number of darts")
            if len(sigma) != n or sorted(sigma) != list(range(n)):
                raise NotPermutation("sigma is not a permutation of the darts")
            for d in range(n):
                a = alpha[d]
                if not 0 <= a < n or a == d or alpha[a] != d:
                    raise NotInvolution(f"alpha is not a fixed-point-free involution at dart {d}")
        self.alpha = alpha
        self.sigma = sigma
        self.sigma_inv = invert(sigma)
        self.phi = tuple(sigma[alpha[d]] for d in range(n))
        self.vertices, self.vertex_of = _cycles(sigma)
        self.faces, self.face_of = _cycles(self.phi)
        if check and canonical_code(sigma, alpha, 0) is None:
            raise NotConnected("sigma and alpha do not act transitively")
        chi = len(self.vertices) - n // 2 + len(self.faces)
        self.genus = (2 - chi) // 2
        if root is not None:
            root = int(root)
            if not 0 <= root < n:
                raise ValueError(f"root dart {root} out of range")
        self.root = root
        if colors is not None:
            colors = tuple(int(c) for c in colors)
            if check:
                if len(colors) != n:
                    raise BadColoring("one color per dart expected")
                for cyc in self.vertices:
                    if len({colors[d] for d in cyc}) != 1:
                        raise BadColoring("darts of one vertex carry different colors")
                for d in range(n):
                    if colors[d] == colors[alpha[d]]:
                        raise BadColoring(f"edge at dart {d} is monochromatic")
        self.colors = colors

    # -- sizes -----------------------------------------------------------
    @property
    def n_darts(self):
        return len(self.alpha)

    @property
    def n_edges(self):
        return len(self.alpha) // 2

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_faces(self):
        return len(self.faces)

    def vertex_degree(self, v):
        return len(self.vertices[v])

    def face_degree(self, f):
        return len(self.faces[f])

    def face_degrees(self):
        return sorted(len(f) for f in self.faces)

    def edges(self):
        """Edges as ``(d, alpha[d])`` with ``d`` the smaller dart."""
        return [(d, a) for d, a in enumerate(self.alpha) if d < a]

    def edge_id(self, d):
        return min(d, self.alpha[d])

    def vertex_color(self, v):
        if self.colors is None:
            return None
        return self.colors[self.vertices[v][0]]

    def color_counts(self):
        """``(black, white)`` vertex counts; requires colors."""
        black = sum(1 for v in self.vertices if self.colors[v[0]] == BLACK)
        return black, len(self.vertices) - black

    # -- derived copies --------------------------------------------------
    def with_root(self, root):
        return CombMap(self.alpha, self.sigma, root, self.colors, check=False)

    def with_colors(self, colors):
        return CombMap(self.alpha, self.sigma, self.root, colors)

    def relabel(self, perm):
        """Conjugate by the dart bijection ``d -> perm[d]``."""
        n = self.n_darts
        alpha = [0] * n
        sigma = [0] * n
        colors = None if self.colors is None else [0] * n
        for d in range(n):
            alpha[perm[d]] = perm[self.alpha[d]]
            sigma[perm[d]] = perm[self.sigma[d]]
            if colors is not None:
                colors[perm[d]] = self.colors[d]
        root = None if self.root is None else perm[self.root]
        return CombMap(alpha, sigma, root, colors, check=False)

    def swap_colors(self):
        if self.colors is None:
            return self
        return CombMap(self.alpha, self.sigma, self.root, [1 - c for c in self.colors], check=False)

    # -- canonical forms -------------------------------------------------
    def code(self, root=None, data=None):
        """Canonical code of the map rooted at ``root`` (default: own root).

        Colors are folded into the code when present; ``data`` adds any other
        per-dart decoration.
        """
        if root is None:
            root = self.root if self.root is not None else 0
        extra = _merge_data(self.colors, data)
        return canonical_code(self.sigma, self.alpha, root, extra)

    def unrooted_code(self, data=None, roots=None):
        extra = _merge_data(self.colors, data)
        if roots is None:
            roots = range(self.n_darts)
        return min(canonical_code(self.sigma, self.alpha, r, extra) for r in roots)

    def __eq__(self, other):
        return (
            isinstance(other, CombMap)
            and self.alpha == other.alpha
            and self.sigma == other.sigma
            and self.root == other.root
            and self.colors == other.colors
        )

    def __hash__(self):
        return hash((self.alpha, self.sigma, self.root, self.colors))

    def __repr__(self):
        return (
            f"CombMap(darts={self.n_darts}, v={self.n_vertices}, e={self.n_edges}, "
            f"f={self.n_faces}, genus={self.genus})"
        )


def _merge_data(colors, data):
    if data is None:
        return colors
    if colors is None:
        return data
    return [(c, x) for c, x in zip(colors, data)]


def build_map(n_darts, alpha, sigma, root=None, colors=None, genus=None):
    """Validate and build a :class:`CombMap`.

    ``colors`` may be per-dart or a mapping ``vertex-representative dart ->
    color``.  If ``genus`` is given the map must have exactly that genus.
    """
    if len(alpha) != n_darts or len(sigma) != n_darts:
        raise NotInvolution("alpha and sigma must have n_darts entries")
    if isinstance(colors, dict):
        tmp = CombMap(alpha, sigma, root)
        per_dart = [None] * n_darts
        for rep, c in colors.items():
            for d in tmp.vertices[tmp.vertex_of[rep]]:
                per_dart[d] = c
        if any(c is None for c in per_dart):
            raise BadColoring("some vertex has no color")
        colors = per_dart
    m = CombMap(alpha, sigma, root, colors)
    if genus is not None and m.genus != genus:
        raise WrongGenus(f"expected genus {genus}, got {m.genus}")
    return m


def iso(m1, m2, rooted=True, data1=None, data2=None):
    """Isomorphism test by canonical relabeling.

    Colors take part in the comparison only when both maps carry them.
    """
    if m1.n_darts != m2.n_darts:
        return False
    c1, c2 = m1.colors, m2.colors
    if (c1 is None) != (c2 is None):
        m1 = CombMap(m1.alpha, m1.sigma, m1.root, None, check=False)
        m2 = CombMap(m2.alpha, m2.sigma, m2.root, None, check=False)
    if (data1 is None) != (data2 is None):
        return False
    if rooted:
        return m1.code(data=data1) == m2.code(data=data2)
    target = m1.code(root=0, data=data1)
    extra = _merge_data(m2.colors, data2)
    return any(
        canonical_code(m2.sigma, m2.alpha, r, extra) == target for r in range(m2.n_darts)
    )


def automorphism_roots(m, data=None):
    """Darts ``r`` such that the map rooted at ``r`` equals the map rooted at dart 0."""
    target = m.code(root=0, data=data)
    return [r for r in range(m.n_darts) if m.code(root=r, data=data) == target]


# -- duality and angular constructions ----------------------------------

def dual(m):
    """Dual map on the same darts: vertices become faces and vice versa."""
    sigma = tuple(m.alpha[m.sigma_inv[d]] for d in range(m.n_darts))
    return CombMap(m.alpha, sigma, m.root, check=False)


def angular_map(m):
    """Angular map: bipartite quadrangulation, white = vertices of ``m``.

    Dart ``d`` of the result is the white end of the edge drawn across the
    corner ``(d, sigma[d])`` of ``m``; dart ``n + d`` is its black end, sitting
    at the face of ``m`` that contains the corner.
    """
    n = m.n_darts
    alpha = [0] * (2 * n)
    sigma = [0] * (2 * n)
    colors = [WHITE] * n + [BLACK] * n
    for d in range(n):
        alpha[d] = n + d
        alpha[n + d] = d
        sigma[d] = m.sigma[d]
        sigma[n + d] = n + m.sigma_inv[m.alpha[d]]
    return CombMap(alpha, sigma, m.root, colors, check=False)


def primal_from_angular(q, white=WHITE):
    """Inverse of :func:`angular_map`; vertices of the result are the ``white`` vertices of ``q``.

    Exact inverse on labels: ``primal_from_angular(angular_map(m)) == m``
    (colors dropped).
    """
    if any(len(f) != 4 for f in q.faces):
        raise NotQuadrangulation("every face must have degree 4")
    colors = q.colors
    if colors is None:
        colors = bipartition(q)
        if colors is None:
            raise NotBipartite("quadrangulation is not bipartite")
    whites = [d for d in range(q.n_darts) if colors[d] == white]
    index = {d: i for i, d in enumerate(whites)}
    alpha = [0] * len(whites)
    sigma = [0] * len(whites)
    phi = q.phi
    for d in whites:
        sigma[index[d]] = index[q.sigma[d]]
        alpha[index[d]] = index[phi[phi[d]]]
    root = index.get(q.root) if q.root is not None else None
    return CombMap(alpha, sigma, root)


PRIMAL, DUAL, EDGE = "primal", "dual", "edge"


def derived_map(m):
    """Derived map as the angular map of the angular map.

    Returns ``(mhat, roles)`` where ``roles[d]`` is ``"primal"``, ``"dual"``
    or ``"edge"`` for the vertex of dart ``d``.  Darts ``< 2 n`` of ``mhat``
    sit at vertices of the angular map ``Q`` (dart ``x`` at the corner
    ``(x, sigma_Q[x])`` of ``Q``); darts ``>= 2 n`` sit at edge-vertices.
    """
    q = angular_map(m)
    return derived_of_quadrangulation(q)


def derived_of_quadrangulation(q):
    mhat = angular_map(q)
    n = q.n_darts
    roles = []
    for d in range(2 * n):
        if d < n:
            roles.append(PRIMAL if q.colors[d] == WHITE else DUAL)
        else:
            roles.append(EDGE)
    return mhat, tuple(roles)


# -- bipartition --------------------------------------------------------

def bipartition(m, root_color=BLACK):
    """Per-dart 2-coloring with dart 0's vertex colored ``root_color``, or ``None``."""
    n = m.n_darts
    vcol = [-1] * m.n_vertices
    vcol[m.vertex_of[0]] = root_color
    stack = [m.vertex_of[0]]
    while stack:
        v = stack.pop()
        for d in m.vertices[v]:
            w = m.vertex_of[m.alpha[d]]
            if vcol[w] < 0:
                vcol[w] = 1 - vcol[v]
                stack.append(w)
            elif vcol[w] == vcol[v]:
                return None
    return tuple(vcol[m.vertex_of[d]] for d in range(n))


def ensure_colors(m):
    """Return ``m`` if colored, else ``m`` with its bipartition (dart 0 black)."""
    if m.colors is not None:
        return m
    c = bipartition(m)
    if c is None:
        raise NotBipartite("map has an odd closed walk")
    return m.with_colors(c)


# -- small fixtures -----------------------------------------------------

def single_edge():
    return CombMap((1, 0), (0, 1), root=0)


def planar_loop():
    return CombMap((1, 0), (1, 0), root=0)


def theta(colors=True):
    """Toroidal theta: two vertices of degree 3, three edges, one hexagonal face."""
    alpha = (3, 4, 5, 0, 1, 2)
    sigma = (1, 2, 0, 4, 5, 3)
    col = (BLACK,) * 3 + (WHITE,) * 3 if colors else None
    return CombMap(alpha, sigma, root=0, colors=col)


# -- editing helpers ----------------------------------------------------

def sub_map(m, keep, sigma_override=None):
    """Restrict ``m`` to the dart set ``keep`` (closed under alpha).

    Rotation skips removed darts.  Darts are renumbered in increasing order;
    returns ``(submap, old_to_new)``.
    """
    keep = sorted(set(keep))
    index = {d: i for i, d in enumerate(keep)}
    kset = set(keep)
    alpha = [index[m.alpha[d]] for d in keep]
    sigma = []
    for d in keep:
        x = m.sigma[d]
        while x not in kset:
            x = m.sigma[x]
        sigma.append(index[x])
    colors = None if m.colors is None else [m.colors[d] for d in keep]
    root = index.get(m.root) if m.root is not None else None
    return CombMap(alpha, sigma, root, colors), index
