"""Integer homology of closed walks on the torus via a tree-cotree split."""

from __future__ import annotations

from collections import deque

from ..errors import MapError, WrongGenus


class HomologyLabeling:
    """Per-dart labels in Z^2 with ``label[alpha[d]] == -label[d]``.

    Spanning-tree edges carry zero.  The two edges left outside both the
    spanning tree and a dual spanning tree (the cotree) carry the basis
    vectors; cotree edges get whatever makes every face sum vanish.  The sum
    over a closed walk then depends only on its homology class, and on the
    torus a closed walk is contractible iff that sum is ``(0, 0)``.
    """

    __slots__ = ("owner", "label", "generators")

    def __init__(self, owner, label, generators):
        self.owner = owner
        self.label = label
        self.generators = generators

    def walk_sum(self, walk):
        x = y = 0
        lab = self.label
        for d in walk:
            a, b = lab[d]
            x += a
            y += b
        return (x, y)

    def is_contractible(self, walk):
        return self.walk_sum(walk) == (0, 0)


def check_closed_walk(m, walk):
    if not walk:
        raise MapError("empty walk")
    k = len(walk)
    for i in range(k):
        d, e = walk[i], walk[(i + 1) % k]
        if m.vertex_of[m.alpha[d]] != m.vertex_of[e]:
            raise MapError(f"walk is not closed at position {i}")


def homology(m):
    if m.genus != 1:
        raise WrongGenus(f"homology labels need genus 1, got {m.genus}")
    n = m.n_darts
    alpha = m.alpha
    in_tree = [False] * n
    seen = [False] * m.n_vertices
    v0 = m.vertex_of[0]
    seen[v0] = True
    queue = deque([v0])
    while queue:
        v = queue.popleft()
        for d in m.vertices[v]:
            w = m.vertex_of[alpha[d]]
            if not seen[w]:
                seen[w] = True
                in_tree[d] = in_tree[alpha[d]] = True
                queue.append(w)

    # dual spanning tree over the remaining edges; parent_dart[f] is the dart
    # of the cotree edge lying in face f that leads towards the dual root
    in_cotree = [False] * n
    fseen = [False] * m.n_faces
    parent_dart = [-1] * m.n_faces
    order = [m.face_of[0]]
    fseen[order[0]] = True
    k = 0
    while k < len(order):
        f = order[k]
        k += 1
        for d in m.faces[f]:
            if in_tree[d]:
                continue
            g = m.face_of[alpha[d]]
            if not fseen[g]:
                fseen[g] = True
                in_cotree[d] = in_cotree[alpha[d]] = True
                parent_dart[g] = alpha[d]
                order.append(g)

    label = [(0, 0)] * n
    generators = [d for d in range(n) if d < alpha[d] and not in_tree[d] and not in_cotree[d]]
    if len(generators) != 2:
        raise WrongGenus("tree-cotree split left an unexpected number of edges")
    label[generators[0]] = (1, 0)
    label[alpha[generators[0]]] = (-1, 0)
    label[generators[1]] = (0, 1)
    label[alpha[generators[1]]] = (0, -1)

    # solve cotree labels from the leaves of the dual tree upwards
    for f in reversed(order[1:]):
        pd = parent_dart[f]
        sx = sy = 0
        for d in m.faces[f]:
            if d != pd:
                sx += label[d][0]
                sy += label[d][1]
        label[pd] = (-sx, -sy)
        label[alpha[pd]] = (sx, sy)
    return HomologyLabeling(m, tuple(label), tuple(generators))


def fundamental_cycles(m, allowed_vertices=None):
    """Vertex-simple cycles closed by the non-tree edges of a BFS tree of
    the subgraph induced on ``allowed_vertices`` (default: all)."""
    if allowed_vertices is None:
        allowed = [True] * m.n_vertices
    else:
        allowed = [False] * m.n_vertices
        for v in allowed_vertices:
            allowed[v] = True
    root = next(v for v in range(m.n_vertices) if allowed[v])
    parent = {root: None}  # vertex -> dart arriving from the parent
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for d in m.vertices[v]:
            w = m.vertex_of[m.alpha[d]]
            if allowed[w] and w not in parent:
                parent[w] = d
                depth[w] = depth[v] + 1
                queue.append(w)
    tree = {d for d in parent.values() if d is not None}
    tree |= {m.alpha[d] for d in tree}

    def up(v):
        path = []
        while parent[v] is not None:
            path.append(parent[v])
            v = m.vertex_of[parent[v]]
        return path[::-1]  # darts from the root down to v

    out = []
    for d in range(m.n_darts):
        a = m.alpha[d]
        if d > a or d in tree:
            continue
        u, w = m.vertex_of[d], m.vertex_of[a]
        if u not in parent or w not in parent:
            continue
        pu, pw = up(u), up(w)
        k = 0
        while k < min(len(pu), len(pw)) and pu[k] == pw[k]:
            k += 1
        # lca -> u, then d, then w -> lca
        cyc = pu[k:] + [d] + [m.alpha[x] for x in reversed(pw[k:])]
        out.append(tuple(cyc))
    return out


def homology_basis(m, labeling=None, allowed_vertices=None):
    """Two vertex-simple cycles whose homology classes are independent."""
    if labeling is None:
        labeling = homology(m)
    cycles = fundamental_cycles(m, allowed_vertices)
    sums = [labeling.walk_sum(c) for c in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            (a, b), (c, d) = sums[i], sums[j]
            if a * d - b * c != 0:
                return cycles[i], cycles[j]
    raise MapError("subgraph carries no pair of independent cycles")
