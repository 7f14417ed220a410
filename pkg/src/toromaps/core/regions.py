"""Regions enclosed by contractible closed walks, and the class predicates
built on them (essential irreducibility, essential 3-connectivity, and the
families of quadrangulations and hexagon-rooted maps)."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MapError, NotNullHomologous, WrongGenus
from .homology import check_closed_walk, homology
from .maps import angular_map, bipartition


@dataclass(frozen=True)
class Region:
    """A disk region: interior vertices, edges (by smallest dart) and faces,
    plus the boundary walk with the region on its right."""

    vertices: frozenset
    edges: frozenset
    faces: frozenset
    boundary_walk: tuple

    @property
    def euler(self):
        return len(self.vertices) - len(self.edges) + len(self.faces)


def right_region(m, walk):
    """Flood-fill the faces on the right of ``walk`` without crossing its
    edge-sides.  Returns the :class:`Region` (not necessarily a disk) or
    ``None`` when the fill leaks onto the left side of the walk."""
    walk = tuple(walk)
    wset = set(walk)
    if len(wset) != len(walk):
        return None
    alpha = m.alpha
    sigma = m.sigma
    face_of = m.face_of
    # locally the walk must turn into its next edge with nothing of the walk
    # strictly between (counterclockwise) the in-dart and the out-dart
    k = len(walk)
    for i in range(k):
        din, dout = alpha[walk[i]], walk[(i + 1) % k]
        x = sigma[din]
        while x != dout:
            if x in wset or alpha[x] in wset:
                return None
            x = sigma[x]
    start = face_of[walk[0]]
    faces = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for d in m.faces[f]:
            if d in wset or alpha[d] in wset:
                continue
            g = face_of[alpha[d]]
            if g not in faces:
                faces.add(g)
                stack.append(g)
    for w in walk:
        if face_of[w] not in faces:
            return None
        if alpha[w] not in wset and face_of[alpha[w]] in faces:
            return None
    walk_vertices = {m.vertex_of[d] for d in walk}
    edges = set()
    verts = set()
    for f in faces:
        for d in m.faces[f]:
            if d not in wset and alpha[d] not in wset:
                edges.add(min(d, alpha[d]))
            v = m.vertex_of[d]
            if v not in walk_vertices:
                verts.add(v)
    return Region(frozenset(verts), frozenset(edges), frozenset(faces), walk)


def enclosed_region(m, walk, labeling=None):
    """Disk region on the right of a null-homologous closed walk, or ``None``."""
    check_closed_walk(m, walk)
    if labeling is None:
        labeling = homology(m)
    if not labeling.is_contractible(walk):
        raise NotNullHomologous("walk has non-zero homology")
    reg = right_region(m, walk)
    if reg is None or reg.euler != 1:
        return None
    return reg


def boundary_length(m, faces):
    """Number of face/edge incidences between ``faces`` and its complement."""
    faces = set(faces)
    return sum(
        1 for f in faces for d in m.faces[f] if m.face_of[m.alpha[d]] not in faces
    )


def closed_walks(m, max_len):
    """All closed walks of pairwise distinct darts with length <= ``max_len``,
    one per cyclic rotation (the smallest dart comes first)."""
    alpha = m.alpha
    vertex_of = m.vertex_of
    vertices = m.vertices
    out = []
    for s in range(m.n_darts):
        target = vertex_of[s]
        path = [s]
        used = {s}

        def dfs():
            last = path[-1]
            v = vertex_of[alpha[last]]
            if v == target:
                out.append(tuple(path))
            if len(path) >= max_len:
                return
            for d in vertices[v]:
                if d > s and d not in used:
                    path.append(d)
                    used.add(d)
                    dfs()
                    used.discard(d)
                    path.pop()

        dfs()
    return out


def short_contractible_walks(m, max_len, labeling=None):
    """Closed walks of length <= ``max_len`` enclosing a disk on their right,
    with the enclosed region."""
    if m.genus != 1:
        raise WrongGenus("expected a toroidal map")
    if labeling is None:
        labeling = homology(m)
    out = []
    for w in closed_walks(m, max_len):
        if labeling.is_contractible(w):
            reg = right_region(m, w)
            if reg is not None and reg.euler == 1:
                out.append((w, reg))
    return out


def is_facial(m, walk):
    f = m.face_of[walk[0]]
    return len(walk) == len(m.faces[f]) and all(m.face_of[d] == f for d in walk)


def irreducibility_violation(m, d, labeling=None):
    """Reason why ``m`` is not essentially ``d``-irreducible, or ``None``."""
    for w, reg in short_contractible_walks(m, d, labeling):
        if len(w) < d:
            return f"contractible closed walk of length {len(w)} encloses a disk"
        if len(reg.faces) != 1:
            return f"length-{d} walk encloses {len(reg.faces)} faces"
    return None


def is_essentially_irreducible(m, d):
    if m.genus != 1:
        raise WrongGenus("expected a toroidal map")
    return irreducibility_violation(m, d) is None


def is_essentially_3connected(m):
    if m.genus != 1:
        raise WrongGenus("expected a toroidal map")
    return is_essentially_irreducible(angular_map(m), 4)


def is_in_T(m):
    return m.genus == 1 and is_essentially_3connected(m)


def q_violation(q):
    """Reason why ``q`` is not an essentially irreducible toroidal
    bipartite quadrangulation, or ``None``."""
    if q.genus != 1:
        return "WrongGenus"
    if any(len(f) != 4 for f in q.faces):
        return "NotQuadrangulation"
    if bipartition(q) is None:
        return "NotBipartite"
    return irreducibility_violation(q, 4)


def is_in_Q(q):
    return q_violation(q) is None


def hex_face(h):
    """Index of the unique face of degree 6, or ``None``."""
    six = [i for i, f in enumerate(h.faces) if len(f) == 6]
    return six[0] if len(six) == 1 else None


def h_violation(h):
    """Reason why ``h`` is not in the hexagon-rooted family, or ``None``."""
    if h.genus != 1:
        return "WrongGenus"
    if bipartition(h) is None:
        return "NotBipartite"
    degs = h.face_degrees()
    if degs.count(6) != 1 or any(x not in (4, 6) for x in degs):
        return "faces must be quadrangles plus one hexagon"
    lab = homology(h)
    root = hex_face(h)
    for w, reg in short_contractible_walks(h, 6, lab):
        if len(w) < 4:
            return f"contractible closed walk of length {len(w)} encloses a disk"
        if len(w) == 4 and len(reg.faces) != 1:
            return "length-4 walk encloses more than one face"
        if len(w) == 6 and root in reg.faces and len(reg.faces) > 1:
            return "a non-facial hexagon encloses the root face"
    return None


def is_in_H(h):
    return h_violation(h) is None


def check_genus1(m):
    if m.genus != 1:
        raise WrongGenus(f"expected genus 1, got {m.genus}")


__all__ = [
    "Region", "MapError", "right_region", "enclosed_region", "boundary_length",
    "closed_walks", "short_contractible_walks", "is_facial",
    "is_essentially_irreducible", "is_essentially_3connected", "is_in_T",
    "is_in_Q", "is_in_H", "q_violation", "h_violation", "hex_face",
]
