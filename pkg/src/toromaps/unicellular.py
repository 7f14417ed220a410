"""Precubic bipartite unicellular toroidal maps.

Such a map has one face, vertices of degree 1 (leaves) or 3 (nodes), and a
proper black/white coloring.  Deleting leaves repeatedly leaves the *core*;
contracting its degree-2 chains leaves the *kernel*, which is always two
nodes joined by three parallel edges.  The map is *balanced* when each of the
three cycles of the core has as many incident edges on its left as on its
right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core.maps import BLACK, WHITE, CombMap, bipartition, theta
from .errors import (
    BadColoring,
    MapError,
    NotACycle,
    NotBipartite,
    NotPrecubic,
    NotUnicellular,
    WrongGenus,
)

LEFT, RIGHT = -1, 1


@dataclass(frozen=True)
class UnicellularMap:
    carrier: CombMap
    leaves: tuple
    nodes: tuple
    pending: tuple
    plain: tuple

    @property
    def n_leaves(self):
        return len(self.leaves)

    def node_colors(self):
        """``(black nodes, white nodes)``."""
        m = self.carrier
        black = sum(1 for v in self.nodes if m.vertex_color(v) == BLACK)
        return black, len(self.nodes) - black


def classify(u):
    """Validate ``u`` as a precubic bipartite unicellular toroidal map.

    Uncolored input gets the bipartition with dart 0 black.
    """
    if isinstance(u, UnicellularMap):
        return u
    if u.genus != 1:
        raise WrongGenus(f"expected genus 1, got {u.genus}")
    if u.n_faces != 1:
        raise NotUnicellular(f"map has {u.n_faces} faces")
    degs = [len(v) for v in u.vertices]
    if any(d not in (1, 3) for d in degs):
        raise NotPrecubic("vertex degrees must be 1 or 3")
    if u.colors is None:
        col = bipartition(u)
        if col is None:
            raise NotBipartite("map has an odd cycle")
        u = u.with_colors(col)
    leaves = tuple(i for i, d in enumerate(degs) if d == 1)
    nodes = tuple(i for i, d in enumerate(degs) if d == 3)
    pending = []
    plain = []
    for d, a in u.edges():
        if degs[u.vertex_of[d]] == 1 or degs[u.vertex_of[a]] == 1:
            pending.append(d)
        else:
            plain.append(d)
    return UnicellularMap(u, leaves, nodes, tuple(pending), tuple(plain))


@dataclass(frozen=True)
class Caterpillar:
    """Bi-rooted caterpillar: the side (``LEFT``/``RIGHT``) of the extra leaf
    of each node met along the path from the primary to the secondary root."""

    sides: tuple
    color1: int = BLACK

    @property
    def color2(self):
        return self.color1 if len(self.sides) % 2 else 1 - self.color1

    def mirror(self):
        return Caterpillar(tuple(-s for s in self.sides), self.color1)


def caterpillar_gamma(cat):
    """Right-minus-left count of non-root leaves."""
    return sum(cat.sides)


@dataclass(frozen=True)
class KernelDecomposition:
    core_darts: frozenset
    kernel_vertices: tuple
    chains: tuple
    caterpillars: tuple
    attached: dict
    alpha: tuple

    def cycles(self):
        """The three core cycles as dart walks: chain i then chain j reversed."""
        out = []
        for i, j in ((0, 1), (1, 2), (2, 0)):
            out.append(self.chains[i] + _reverse_chain(self.alpha, self.chains[j]))
        return out


def _reverse_chain(alpha, chain):
    return tuple(alpha[d] for d in reversed(chain))


def core_kernel(u):
    """Core, kernel, the three chains (each a dart path from the first kernel
    vertex to the second, ordered by that vertex's rotation starting from
    the root dart when it lies there), their caterpillars, and the trees
    hanging off the core (core vertex -> dart leaving the core)."""
    u = classify(u)
    m = u.carrier
    deg = [len(v) for v in m.vertices]
    alive = [True] * m.n_darts
    cur = list(deg)
    stack = [v for v in range(m.n_vertices) if cur[v] == 1]
    removed_v = [False] * m.n_vertices
    while stack:
        v = stack.pop()
        if removed_v[v] or cur[v] != 1:
            continue
        removed_v[v] = True
        (d,) = [x for x in m.vertices[v] if alive[x]]
        a = m.alpha[d]
        alive[d] = alive[a] = False
        w = m.vertex_of[a]
        cur[w] -= 1
        if cur[w] == 1:
            stack.append(w)
    core = frozenset(d for d in range(m.n_darts) if alive[d])
    kv = [v for v in range(m.n_vertices) if cur[v] == 3 and not removed_v[v]]
    if len(kv) != 2:
        raise MapError("kernel is not a triple edge")
    a_v, b_v = kv
    if m.root is not None and m.vertex_of[m.root] == b_v and m.root in core:
        a_v, b_v = b_v, a_v
    first = m.root if (m.root is not None and m.root in core and m.vertex_of[m.root] == a_v) else None
    if first is None:
        first = min(d for d in m.vertices[a_v])
    starts = [first, m.sigma[first], m.sigma[m.sigma[first]]]
    chains = []
    cats = []
    for s in starts:
        path = [s]
        sides = []
        while True:
            din = m.alpha[path[-1]]
            v = m.vertex_of[din]
            if v == b_v:
                break
            if v == a_v:
                raise MapError("chain returns to its start")
            nxt = [x for x in m.vertices[v] if alive[x] and x != din]
            out = nxt[0]
            third = [x for x in m.vertices[v] if x != din and x != out][0]
            sides.append(RIGHT if m.sigma[din] == third else LEFT)
            path.append(out)
        chains.append(tuple(path))
        cats.append(Caterpillar(tuple(sides), m.vertex_color(a_v)))
    attached = {}
    for d in range(m.n_darts):
        if not alive[d] and not removed_v[m.vertex_of[d]]:
            attached[m.vertex_of[d]] = d
    return KernelDecomposition(core, (a_v, b_v), tuple(chains), tuple(cats), attached, m.alpha)


def side_counts(u, cycle):
    """``(left, right)`` incidences of non-cycle edges along the directed cycle."""
    m = u.carrier if isinstance(u, UnicellularMap) else u
    k = len(cycle)
    cset = set(cycle) | {m.alpha[d] for d in cycle}
    visited = set()
    for i in range(k):
        d, e = cycle[i], cycle[(i + 1) % k]
        if m.vertex_of[m.alpha[d]] != m.vertex_of[e]:
            raise NotACycle("consecutive darts do not meet")
        v = m.vertex_of[e]
        if v in visited:
            raise NotACycle("cycle repeats a vertex")
        visited.add(v)
    left = right = 0
    for i in range(k):
        din, dout = m.alpha[cycle[i]], cycle[(i + 1) % k]
        x = m.sigma[din]
        while x != dout:
            if x not in cset:
                right += 1
            x = m.sigma[x]
        x = m.sigma[dout]
        while x != din:
            if x not in cset:
                left += 1
            x = m.sigma[x]
    return left, right


def is_balanced(u):
    u = classify(u)
    kd = core_kernel(u)
    return all(left == right for left, right in (side_counts(u, c) for c in kd.cycles()))


# -- construction ------------------------------------------------------

def assemble_skeleton(cats, color1=None):
    """Skeleton from three caterpillars hung between two kernel nodes.

    Chain ``i`` leaves the first kernel node at dart ``i`` (rotation 0, 1, 2)
    and reaches the second one at its dart ``i`` (rotation 3, 4, 5), as in
    the toroidal theta.  Root dart 0; colors follow ``color1`` (default: the
    first caterpillar's).
    """
    if color1 is None:
        color1 = cats[0].color1
    parities = {len(c.sides) % 2 for c in cats}
    if len(parities) != 1:
        raise BadColoring("chains of different parities cannot be 2-colored")
    alpha = [-1] * 6
    sigma = [1, 2, 0, 4, 5, 3]
    nxt = 6

    def new(count):
        nonlocal nxt
        out = list(range(nxt, nxt + count))
        alpha.extend([-1] * count)
        sigma.extend([-1] * count)
        nxt += count
        return out

    for i, cat in enumerate(cats):
        prev = i
        for side in cat.sides:
            p, q, lf, leaf = new(4)
            alpha[prev], alpha[p] = p, prev
            alpha[lf], alpha[leaf] = leaf, lf
            sigma[leaf] = leaf
            if side == RIGHT:
                sigma[p], sigma[lf], sigma[q] = lf, q, p
            else:
                sigma[p], sigma[q], sigma[lf] = q, lf, p
            prev = q
        alpha[prev], alpha[3 + i] = 3 + i, prev
    m = CombMap(alpha, sigma, root=0)
    col = bipartition(m, root_color=color1)
    return m.with_colors(col)


def insert_leaf(m, d, right):
    """Subdivide the edge of dart ``d`` and hang a new leaf on its right
    (``right=True``) or left, as seen when following ``d``."""
    n = m.n_darts
    a = m.alpha[d]
    alpha = list(m.alpha) + [0] * 4
    sigma = list(m.sigma) + [0] * 4
    x1, x2, x3, leaf = n, n + 1, n + 2, n + 3
    alpha[d], alpha[x1] = x1, d
    alpha[a], alpha[x2] = x2, a
    alpha[x3], alpha[leaf] = leaf, x3
    sigma[leaf] = leaf
    # at the new node, x1 is the in-dart and x2 the out-dart along d
    if right:
        sigma[x1], sigma[x3], sigma[x2] = x3, x2, x1
    else:
        sigma[x1], sigma[x2], sigma[x3] = x2, x3, x1
    return CombMap(alpha, sigma, root=m.root)


def split_leaf(m, leaf_dart):
    """Turn the leaf at ``leaf_dart`` into a node carrying two new leaves."""
    if m.sigma[leaf_dart] != leaf_dart:
        raise MapError("not a leaf dart")
    n = m.n_darts
    alpha = list(m.alpha) + [0] * 4
    sigma = list(m.sigma) + [0] * 4
    y1, y2, z1, z2 = n, n + 1, n + 2, n + 3
    sigma[leaf_dart], sigma[y1], sigma[y2] = y1, y2, leaf_dart
    alpha[y1], alpha[z1] = z1, y1
    alpha[y2], alpha[z2] = z2, y2
    sigma[z1], sigma[z2] = z1, z2
    col = None
    if m.colors is not None:
        c = m.colors[leaf_dart]
        col = list(m.colors) + [c, c, 1 - c, 1 - c]
    return CombMap(alpha, sigma, root=m.root, colors=col)


def precubic_unicellular(max_leaves):
    """All uncolored precubic unicellular toroidal maps by number of leaves,
    up to unrooted isomorphism: ``{leaves: [maps]}``."""
    level = {theta(colors=False).unrooted_code(): theta(colors=False)}
    out = {0: list(level.values())}
    for k in range(1, max_leaves + 1):
        nxt = {}
        for m in level.values():
            for d, _ in m.edges():
                for right in (True, False):
                    c = insert_leaf(m, d, right)
                    code = c.unrooted_code()
                    if code not in nxt:
                        nxt[code] = CombMap(c.alpha, c.sigma, 0)
        level = nxt
        out[k] = list(level.values())
    return out


def enumerate_Ubal(max_leaves):
    """Balanced precubic bipartite unicellular toroidal maps with at most
    ``max_leaves`` leaves, colored, pairwise non-isomorphic as unrooted
    colored maps."""
    out = []
    for k, maps in precubic_unicellular(max_leaves).items():
        seen = set()
        for m in maps:
            col = bipartition(m)
            if col is None:
                continue
            for colored in (m.with_colors(col), m.with_colors(col).swap_colors()):
                code = colored.unrooted_code()
                if code in seen:
                    continue
                seen.add(code)
                if is_balanced(colored):
                    out.append(classify(colored))
    return out


def kernel_rootings(u):
    """Distinct rooted versions of ``u`` with the root on a kernel half-edge."""
    u = classify(u)
    kd = core_kernel(u)
    m = u.carrier
    darts = list(m.vertices[kd.kernel_vertices[0]]) + list(m.vertices[kd.kernel_vertices[1]])
    codes = {}
    for d in darts:
        codes.setdefault(m.code(root=d), d)
    return [m.with_root(d) for d in codes.values()]


def random_ubal(leaves, seed=None, max_tries=100000):
    """A balanced member with ``leaves`` leaves, built from a random
    caterpillar triple of equal gamma-score plus random leaf splits.

    Not uniform over the family.
    """
    if leaves < 0:
        raise ValueError("leaves must be non-negative")
    if leaves == 1:
        # the three caterpillars share a parity, so a lone leaf has nowhere to go
        raise ValueError("no balanced map has exactly one leaf")
    rng = random.Random(seed)
    for _ in range(max_tries):
        parity = rng.randrange(2)
        sizes = []
        budget = leaves
        for _ in range(3):
            choices = [s for s in range(parity, budget + 1, 2)]
            if not choices:
                break
            s = rng.choice(choices)
            sizes.append(s)
            budget -= s
        if len(sizes) != 3:
            continue
        color1 = rng.choice((BLACK, WHITE))
        cats = [
            Caterpillar(tuple(rng.choice((LEFT, RIGHT)) for _ in range(s)), color1)
            for s in sizes
        ]
        if len({caterpillar_gamma(c) for c in cats}) != 1:
            continue
        m = assemble_skeleton(cats, color1)
        if budget and not any(sizes):
            continue  # no leaf to split
        for _ in range(budget):
            leaf_darts = [d for d in range(m.n_darts) if m.sigma[d] == d]
            m = split_leaf(m, rng.choice(leaf_darts))
        u = classify(m)
        if is_balanced(u):
            return u
    raise MapError("sampler gave up")
