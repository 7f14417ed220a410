"""Biorientations and orientations of toroidal maps.

A biorientation marks every dart as outgoing or ingoing, with at least one
outgoing dart per edge; an orientation is the special case where every edge
has exactly one outgoing dart.  Darts of a face orbit have the face on their
right, so a face's ccw-degree is the number of ingoing darts in its orbit.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .core.homology import homology, homology_basis
from .core.maps import CombMap
from .errors import (
    ClockwiseFace,
    DemandMismatch,
    MapError,
    NoProgress,
    NotACycle,
    NotRightBiorientation,
    NotSQuad,
    StepBoundExceeded,
)


class Biorientation:
    __slots__ = ("carrier", "out")

    def __init__(self, carrier, out, *, check=True):
        out = tuple(bool(x) for x in out)
        if check:
            if len(out) != carrier.n_darts:
                raise MapError("one flag per dart expected")
            for d, a in carrier.edges():
                if not (out[d] or out[a]):
                    raise MapError(f"edge at dart {d} has no outgoing half-edge")
        self.carrier = carrier
        self.out = out

    def outdeg(self, v):
        return sum(1 for d in self.carrier.vertices[v] if self.out[d])

    def outdegrees(self):
        return [self.outdeg(v) for v in range(self.carrier.n_vertices)]

    def ccw_degree(self, f):
        return sum(1 for d in self.carrier.faces[f] if not self.out[d])

    def is_orientation(self):
        a = self.carrier.alpha
        return all(self.out[d] != self.out[a[d]] for d in range(len(a)))

    def bidirected(self, d):
        return self.out[d] and self.out[self.carrier.alpha[d]]

    def with_flipped(self, darts):
        """Reverse the edges of ``darts`` (both flags of each edge flip)."""
        out = list(self.out)
        a = self.carrier.alpha
        for d in darts:
            out[d] = not out[d]
            out[a[d]] = not out[a[d]]
        return Biorientation(self.carrier, out, check=False)

    def __eq__(self, other):
        return isinstance(other, Biorientation) and self.out == other.out and (
            self.carrier.alpha == other.carrier.alpha and self.carrier.sigma == other.carrier.sigma
        )

    def __hash__(self):
        return hash(self.out)

    def __repr__(self):
        return f"Biorientation(out={''.join('o' if x else 'i' for x in self.out)})"


def s_quad_violation(b, root_face=None):
    """Reason why ``b`` is not an S-quad 3-biorientation, or ``None``.

    Every vertex must have outdegree 3, every quadrangular face ccw-degree
    1, and ``root_face`` (if given) ccw-degree 0.
    """
    m = b.carrier
    for v in range(m.n_vertices):
        if b.outdeg(v) != 3:
            return f"vertex {v} has outdegree {b.outdeg(v)}"
    for f, cyc in enumerate(m.faces):
        want = 0 if f == root_face else (1 if len(cyc) == 4 else None)
        if want is None:
            return f"face {f} has degree {len(cyc)}"
        if b.ccw_degree(f) != want:
            return f"face {f} has ccw-degree {b.ccw_degree(f)}"
    return None


def is_s_quad(b, root_face=None):
    return s_quad_violation(b, root_face) is None


# -- alpha-orientations -------------------------------------------------

def alpha_orientation(m, demand, seed=None):
    """An orientation with outdegree ``demand[v]`` at every vertex ``v``,
    or ``None`` if there is none.

    Starts from a random orientation (``seed``) and reverses directed paths
    from surplus to deficit vertices until all demands are met.
    """
    if sum(demand) != m.n_edges:
        raise DemandMismatch(f"demands sum to {sum(demand)}, map has {m.n_edges} edges")
    rng = random.Random(seed)
    out = [False] * m.n_darts
    for d, a in m.edges():
        if rng.random() < 0.5:
            out[d] = True
        else:
            out[a] = True
    excess = [
        sum(1 for d in m.vertices[v] if out[d]) - demand[v] for v in range(m.n_vertices)
    ]
    order = list(range(m.n_vertices))
    rng.shuffle(order)
    for s in order:
        while excess[s] > 0:
            prev = {s: None}
            queue = deque([s])
            found = None
            while queue and found is None:
                v = queue.popleft()
                darts = list(m.vertices[v])
                rng.shuffle(darts)
                for d in darts:
                    if out[d]:
                        w = m.vertex_of[m.alpha[d]]
                        if w not in prev:
                            prev[w] = d
                            if excess[w] < 0:
                                found = w
                                break
                            queue.append(w)
            if found is None:
                return None
            w = found
            while prev[w] is not None:
                d = prev[w]
                out[d] = False
                out[m.alpha[d]] = True
                w = m.vertex_of[d]
            excess[s] -= 1
            excess[found] += 1
    return Biorientation(m, out, check=False)


# -- gamma-scores -------------------------------------------------------

def _check_cycle(m, cycle):
    k = len(cycle)
    seen = set()
    for i in range(k):
        if m.vertex_of[m.alpha[cycle[i]]] != m.vertex_of[cycle[(i + 1) % k]]:
            raise NotACycle("consecutive darts do not meet")
        v = m.vertex_of[cycle[i]]
        if v in seen:
            raise NotACycle("cycle repeats a vertex")
        seen.add(v)


def side_outdarts(b, cycle):
    """``(left, right)``: outgoing non-cycle darts at cycle vertices by side."""
    m = b.carrier
    _check_cycle(m, cycle)
    k = len(cycle)
    left = right = 0
    for i in range(k):
        din, dout = m.alpha[cycle[i]], cycle[(i + 1) % k]
        x = m.sigma[din]
        while x != dout:
            right += b.out[x]
            x = m.sigma[x]
        x = m.sigma[dout]
        while x != din:
            left += b.out[x]
            x = m.sigma[x]
    return left, right


def gamma(b, cycle):
    """Right-minus-left count of outgoing darts hanging off a directed cycle."""
    left, right = side_outdarts(b, cycle)
    return right - left


def gamma_bar(b, cycle):
    """``gamma`` plus forward-minus-backward outgoing darts of the cycle itself."""
    left, right = side_outdarts(b, cycle)
    fwd = sum(1 for d in cycle if b.out[d])
    bwd = sum(1 for d in cycle if b.out[b.carrier.alpha[d]])
    return (right + fwd) - (left + bwd)


# -- rebalancing ---------------------------------------------------------

def _lifted_cycles(y, labeling, start, box):
    """Directed closed walks from ``start`` in the homology cover: maps each
    reachable non-zero class ``c`` to a walk (list of darts) of class ``c``."""
    m = y.carrier
    lab = labeling.label
    s0 = (start, 0, 0)
    prev = {s0: None}
    queue = deque([s0])
    found = {}
    while queue:
        state = queue.popleft()
        v, hx, hy = state
        for d in m.vertices[v]:
            if not y.out[d]:
                continue
            w = m.vertex_of[m.alpha[d]]
            nx, ny = hx + lab[d][0], hy + lab[d][1]
            if abs(nx) > box or abs(ny) > box:
                continue
            nxt = (w, nx, ny)
            if nxt in prev:
                continue
            prev[nxt] = (state, d)
            if w == start and (nx, ny) != (0, 0):
                walk = []
                st = nxt
                while prev[st] is not None:
                    st, dd = prev[st]
                    walk.append(dd)
                found[(nx, ny)] = walk[::-1]
            queue.append(nxt)
    return found


def _split_simple(m, walk):
    """Split a closed walk into vertex-simple closed walks."""
    out = []
    stack = []
    pos = {}
    for d in walk:
        v = m.vertex_of[d]
        if v in pos:
            i = pos[v]
            cyc = stack[i:]
            del stack[i:]
            for x in cyc:
                pos.pop(m.vertex_of[x], None)
            out.append(cyc)
        pos[v] = len(stack)
        stack.append(d)
    if stack:
        out.append(stack)
    return out


def rebalance(y, basis=None, labeling=None, allowed_vertices=None, max_steps=10000):
    """Reverse directed non-contractible cycles of the orientation ``y`` until
    ``gamma`` vanishes on both cycles of ``basis``.

    Each reversal must strictly decrease ``|gamma(C1)| + |gamma(C2)|``;
    :class:`NoProgress` is raised when no such cycle exists.
    """
    m = y.carrier
    if labeling is None:
        labeling = homology(m)
    if basis is None:
        basis = homology_basis(m, labeling, allowed_vertices)
    c1, c2 = basis

    def score(o):
        return abs(gamma(o, c1)) + abs(gamma(o, c2))

    cur = score(y)
    steps = 0
    while cur:
        steps += 1
        if steps > max_steps:
            raise StepBoundExceeded("rebalance did not converge")
        best = None
        box = 2
        for start in range(m.n_vertices):
            walks = _lifted_cycles(y, labeling, start, box)
            for walk in walks.values():
                for cyc in _split_simple(m, walk):
                    if labeling.walk_sum(cyc) == (0, 0):
                        continue
                    cand = y.with_flipped(cyc)
                    sc = score(cand)
                    if sc < cur and (best is None or sc < best[0]):
                        best = (sc, cand)
            if best is not None:
                break
        if best is None:
            raise NoProgress(f"no improving cycle (score {cur})")
        cur, y = best
    return y


# -- minimality ------------------------------------------------------------

def _stuck_faces(y, f0):
    """Faces that cannot reach ``f0`` in the arc graph left(d) -> right(d)."""
    m = y.carrier
    # reverse search from f0: g reaches f0 iff some arc g -> h with h reaching f0
    preds = [[] for _ in range(m.n_faces)]
    for d in range(m.n_darts):
        if y.out[d] and not y.out[m.alpha[d]]:
            left, right = m.face_of[m.alpha[d]], m.face_of[d]
            preds[right].append(left)
    reach = {f0}
    stack = [f0]
    while stack:
        f = stack.pop()
        for g in preds[f]:
            if g not in reach:
                reach.add(g)
                stack.append(g)
    return [f for f in range(m.n_faces) if f not in reach]


def minimalize(y, f0, max_steps=None):
    """The minimal orientation obtained from ``y`` by reversing face sets
    whose whole boundary has the set on its right, never using ``f0``."""
    m = y.carrier
    if max_steps is None:
        max_steps = m.n_faces ** 2
    steps = 0
    while True:
        stuck = set(_stuck_faces(y, f0))
        if not stuck:
            return y
        steps += 1
        if steps > max_steps:
            raise StepBoundExceeded(f"minimalize exceeded {max_steps} steps")
        flip = [
            d for d in range(m.n_darts)
            if y.out[d] and m.face_of[d] in stuck and m.face_of[m.alpha[d]] not in stuck
        ]
        y = y.with_flipped(flip)


def minimalize_stepwise(y, f0, pick=min, max_steps=None):
    """Variant reversing one closed face set at a time (the out-closure of a
    single face chosen by ``pick``); used to test order independence."""
    m = y.carrier
    if max_steps is None:
        max_steps = m.n_faces ** 3
    steps = 0
    while True:
        stuck = _stuck_faces(y, f0)
        if not stuck:
            return y
        steps += 1
        if steps > max_steps:
            raise StepBoundExceeded("stepwise minimalize did not converge")
        g = pick(stuck)
        succ = [[] for _ in range(m.n_faces)]
        for d in range(m.n_darts):
            if y.out[d] and not y.out[m.alpha[d]]:
                succ[m.face_of[m.alpha[d]]].append(m.face_of[d])
        closure = {g}
        stack = [g]
        while stack:
            f = stack.pop()
            for h in succ[f]:
                if h not in closure:
                    closure.add(h)
                    stack.append(h)
        flip = [
            d for d in range(m.n_darts)
            if y.out[d] and m.face_of[d] in closure and m.face_of[m.alpha[d]] not in closure
        ]
        y = y.with_flipped(flip)


def is_minimal(y, f0):
    return not _stuck_faces(y, f0)


# -- transfer between a quadrangulation and its angular map ----------------

def schnyder_demands(mhat, n_q_darts):
    """Outdegree 3 at vertices coming from the quadrangulation (darts below
    ``n_q_darts``), 1 at the face-vertices."""
    return [3 if mhat.vertices[v][0] < n_q_darts else 1 for v in range(mhat.n_vertices)]


def is_schnyder(y, n_q_darts):
    demand = schnyder_demands(y.carrier, n_q_darts)
    return y.is_orientation() and y.outdegrees() == demand


def sigma_transfer(x, check=True):
    """Orientation of the angular map of ``x.carrier`` induced by ``x``.

    The edge across the corner ``(d, sigma[d])`` leaves the vertex iff
    ``sigma[d]`` is outgoing.
    """
    from .core.maps import angular_map

    q = x.carrier
    if check:
        reason = s_quad_violation(x)
        if reason is not None:
            raise NotSQuad(reason)
    n = q.n_darts
    mhat = angular_map(q)
    out = [False] * (2 * n)
    for d in range(n):
        o = x.out[q.sigma[d]]
        out[d] = o
        out[n + d] = not o
    return Biorientation(mhat, out, check=False)


def sigma_inverse(y, q):
    """Inverse of :func:`sigma_transfer` for the quadrangulation ``q``."""
    n = q.n_darts
    out = [y.out[q.sigma_inv[a]] for a in range(n)]
    for d, a in q.edges():
        if not (out[d] or out[a]):
            raise ClockwiseFace(f"face of the angular map at edge {d} is clockwise")
    return Biorientation(q, out, check=False)


# -- rightmost walks -------------------------------------------------------

def rightmost_next(b, h):
    m = b.carrier
    x = m.alpha[h]
    for _ in range(len(m.vertices[m.vertex_of[x]])):
        x = m.sigma[x]
        if b.out[x]:
            return x
    raise NotRightBiorientation("vertex without outgoing half-edge")


@dataclass(frozen=True)
class RightmostWalk:
    prefix: tuple
    loop: tuple


def rightmost_walk(b, h):
    """Outgoing darts visited from ``h`` until the walk repeats itself."""
    if not b.out[h]:
        raise MapError("rightmost walks start on an outgoing dart")
    seen = {}
    seq = []
    while h not in seen:
        seen[h] = len(seq)
        seq.append(h)
        h = rightmost_next(b, h)
    i = seen[h]
    return RightmostWalk(tuple(seq[:i]), tuple(seq[i:]))


def _same_cycle(loop, cyc):
    if len(loop) != len(cyc):
        return False
    if loop[0] not in cyc:
        return False
    i = cyc.index(loop[0])
    return tuple(cyc[i:] + cyc[:i]) == tuple(loop)


def is_in_Od(b, root_face):
    """Every rightmost walk ends looping on the root-face contour."""
    m = b.carrier
    contour = list(m.faces[root_face])
    for h in range(m.n_darts):
        if b.out[h]:
            try:
                loop = rightmost_walk(b, h).loop
            except NotRightBiorientation:
                return False
            if not _same_cycle(loop, contour):
                return False
    return True


def walk_counts(b, walk):
    """``(cw, o)`` for a closed walk enclosing a disk on its right: outgoing
    walk darts, and outgoing darts strictly inside at walk vertices."""
    m = b.carrier
    k = len(walk)
    cw = sum(1 for d in walk if b.out[d])
    o = 0
    for i in range(k):
        din, dout = m.alpha[walk[i]], walk[(i + 1) % k]
        x = m.sigma[din]
        while x != dout:
            o += b.out[x]
            x = m.sigma[x]
    return cw, o


# -- bimobiles ------------------------------------------------------------

ROUND, SQUARE, BUD = "round", "square", "bud"


@dataclass(frozen=True)
class Bimobile:
    """Carrier whose vertices are round, square, or bud ends (dangling
    half-edges drawn as pending edges to a degree-1 ``bud`` vertex)."""

    carrier: CombMap
    kinds: tuple

    def counts(self):
        m = self.carrier
        rr = rs = buds = 0
        for d, a in m.edges():
            k1, k2 = self.kinds[m.vertex_of[d]], self.kinds[m.vertex_of[a]]
            pair = {k1, k2}
            if BUD in pair:
                buds += 1
            elif pair == {ROUND}:
                rr += 1
            elif pair == {ROUND, SQUARE}:
                rs += 1
            else:
                raise MapError("square-square edge")
        return rr, rs, buds

    @property
    def excess(self):
        rr, rs, buds = self.counts()
        return rs + 2 * rr - buds


def phi_plus(b, root_face):
    """Bimobile of a right biorientation.

    Outgoing darts stay at their round vertex.  A bidirected edge stays a
    round-round edge.  A simply directed edge becomes an edge from its tail to
    the square vertex of the face on its left, and leaves a bud at the square
    vertex of the face on its right.  The root square vertex is dropped.
    """
    if not is_in_Od(b, root_face):
        raise NotRightBiorientation("some rightmost walk misses the root face")
    m = b.carrier
    n = m.n_darts
    # new darts: for every dart x in a non-root face orbit, a square-side dart
    sq = {}
    nxt = n
    for f, cyc in enumerate(m.faces):
        if f == root_face:
            continue
        for x in cyc:
            sq[x] = nxt
            nxt += 1
    bud_tip = {}
    for x in sq:
        if b.out[x]:
            bud_tip[x] = nxt
            nxt += 1
    alpha = [-1] * nxt
    sigma = [-1] * nxt
    kinds_by_dart = [None] * nxt
    for d in range(n):
        kinds_by_dart[d] = ROUND
    # round rotation: outgoing darts in ccw order
    for cyc in m.vertices:
        outs = [d for d in cyc if b.out[d]]
        for i, d in enumerate(outs):
            sigma[d] = outs[(i + 1) % len(outs)]
    for d in range(n):
        if b.out[d] and b.out[m.alpha[d]]:
            alpha[d] = m.alpha[d]
    for d in range(n):
        if b.out[d] and not b.out[m.alpha[d]]:
            x = m.alpha[d]  # the ingoing dart, in the orbit of the left face
            if x not in sq:
                raise NotRightBiorientation("simply directed edge with the root face on its left")
            alpha[d], alpha[sq[x]] = sq[x], d
    for f, cyc in enumerate(m.faces):
        if f == root_face:
            continue
        ring = [sq[x] for x in reversed(cyc)]  # ccw around the square vertex
        for i, s in enumerate(ring):
            sigma[s] = ring[(i + 1) % len(ring)]
            kinds_by_dart[s] = SQUARE
    for x, t in bud_tip.items():
        alpha[sq[x]], alpha[t] = t, sq[x]
        sigma[t] = t
        kinds_by_dart[t] = BUD
    used = [d for d in range(nxt) if sigma[d] >= 0 and alpha[d] >= 0]
    if len(used) != nxt:
        # a dart of a round vertex whose edge went into the root face
        keep = set(used)
        index = {d: i for i, d in enumerate(used)}
        alpha2 = [index[alpha[d]] for d in used]
        sigma2 = []
        for d in used:
            y = sigma[d]
            while y not in keep:
                y = sigma[y]
            sigma2.append(index[y])
        kinds_by_dart = [kinds_by_dart[d] for d in used]
        alpha, sigma = alpha2, sigma2
    carrier = CombMap(alpha, sigma)
    kinds = tuple(kinds_by_dart[cyc[0]] for cyc in carrier.vertices)
    return Bimobile(carrier, kinds)


def delete_ingoing(b):
    """Turn every ingoing dart into a leaf: the map obtained by deleting the
    ingoing half-edges (simply directed edges become pending edges)."""
    m = b.carrier
    n = m.n_darts
    keep = [d for d in range(n) if b.out[d]]
    index = {d: i for i, d in enumerate(keep)}
    k = len(keep)
    alpha = [0] * k
    sigma = [0] * k
    colors = None if m.colors is None else [0] * k
    extra_alpha = []
    extra_colors = []
    for d in keep:
        i = index[d]
        x = m.sigma[d]
        while not b.out[x]:
            x = m.sigma[x]
        sigma[i] = index[x]
        if colors is not None:
            colors[i] = m.colors[d]
        a = m.alpha[d]
        if b.out[a]:
            alpha[i] = index[a]
        else:
            leaf = k + len(extra_alpha)
            alpha[i] = leaf
            extra_alpha.append(i)
            if colors is not None:
                extra_colors.append(m.colors[a])
    for j, i in enumerate(extra_alpha):
        alpha.append(i)
        sigma.append(k + j)
    if colors is not None:
        colors += extra_colors
    root = index.get(m.root) if m.root is not None else None
    return CombMap(alpha, sigma, root=root, colors=colors)
