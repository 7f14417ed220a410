"""The closure bijection from balanced unicellular maps to hexagon-rooted
6-quadrangular maps, and its inverse through the canonical biorientation."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core.homology import homology, homology_basis
from .core.maps import BLACK, WHITE, CombMap, angular_map
from .core.regions import h_violation, hex_face
from .errors import MapError, NoPattern, NotBalanced, NotInClass
from .orientations import (
    Biorientation,
    alpha_orientation,
    delete_ingoing,
    minimalize,
    minimalize_stepwise,
    rebalance,
    schnyder_demands,
    sigma_inverse,
)
from .unicellular import classify, is_balanced


@dataclass
class BoundaryWord:
    """Cyclic word read along the outer face: ``("a", d)`` for the side of
    a plain edge entered by dart ``d``, ``("b", p)`` for a leaf hanging on
    pending dart ``p``."""

    items: list

    def counts(self):
        a = sum(1 for k, _ in self.items if k == "a")
        return a, len(self.items) - a

    def letters(self):
        return "".join(k for k, _ in self.items)

    def patterns(self):
        """Start positions of the cyclic factor ``baaa``."""
        n = len(self.items)
        out = []
        for i in range(n):
            if self.items[i][0] == "b" and all(self.items[(i + j) % n][0] == "a" for j in (1, 2, 3)):
                out.append(i)
        return out


@dataclass
class _Work:
    alpha: list
    sigma: list
    colors: list
    out: list


@dataclass
class ClosureTrace:
    """Local closures in order, as ``(leaf dart, dart it was attached after)``."""

    steps: list = field(default_factory=list)
    words: list = field(default_factory=list)


def _is_leaf_dart(sigma, d):
    return sigma[d] == d


def boundary_word(u, start=None):
    """Word of the unique face of ``u`` (face on the right), starting at
    ``start`` or at the smallest plain dart."""
    u = classify(u)
    m = u.carrier
    return _word_from(m.alpha, m.sigma, start)


def _word_from(alpha, sigma, start=None):
    n = len(alpha)
    if start is None:
        start = next(
            d for d in range(n)
            if not _is_leaf_dart(sigma, d) and not _is_leaf_dart(sigma, alpha[d])
        )
    items = []
    d = start
    while True:
        if _is_leaf_dart(sigma, alpha[d]):
            items.append(("b", d))
            d = alpha[d]  # skip the leaf dart
        elif not _is_leaf_dart(sigma, d):
            items.append(("a", d))
        d = sigma[alpha[d]]
        if d == start:
            break
    return BoundaryWord(items)


def local_closure(word, at, work=None, alpha=None, sigma=None):
    """Close the pattern ``baaa`` starting at position ``at``.

    The leaf of ``b`` is merged at the end of the third side: its dart is
    inserted right after ``alpha[d3]`` in the rotation there, closing the
    quadrangle ``d1, d2, d3, leaf``.  Mutates ``sigma`` (and the work
    buffer); returns the new word and the ``(leaf, alpha[d3])`` step.
    """
    if work is not None:
        alpha, sigma = work.alpha, work.sigma
    items = word.items
    n = len(items)
    idx = [(at + j) % n for j in range(4)]
    kinds = [items[i][0] for i in idx]
    if kinds != ["b", "a", "a", "a"]:
        raise NoPattern(f"no baaa at position {at}")
    p = items[idx[0]][1]
    d3 = items[idx[3]][1]
    leaf = alpha[p]
    t = alpha[d3]
    sigma[leaf] = sigma[t]
    sigma[t] = leaf
    if work is not None:
        work.out[leaf] = False
    skip = set(idx[1:])
    new = []
    for i in range(n):
        if i == idx[0]:
            new.append(("a", p))
        elif i not in skip:
            new.append(items[i])
    return BoundaryWord(new), (leaf, t)


def close_all(u, order="first", seed=None, require_balanced=True):
    """Apply local closures until no leaf is left.

    Returns ``(h, x, trace)``: the closed map rooted on its hexagonal face,
    the induced biorientation (every dart outgoing except the merged leaf
    darts), and the closure trace.  ``order`` chooses among available
    patterns: ``"first"`` or ``"last"`` in reading order, or ``"random"``.
    """
    u = classify(u)
    if require_balanced and not is_balanced(u):
        raise NotBalanced("unicellular map is not balanced")
    m = u.carrier
    work = _Work(list(m.alpha), list(m.sigma), list(m.colors), [True] * m.n_darts)
    word = _word_from(work.alpha, work.sigma)
    trace = ClosureTrace(words=[word.letters()])
    rng = random.Random(seed)
    while True:
        a, b = word.counts()
        if a != 2 * b + 6:
            raise MapError("word invariant |a| = 2|b| + 6 broken")
        if b == 0:
            break
        pats = word.patterns()
        if not pats:
            raise NoPattern("leaves remain but no baaa pattern")
        if order == "first":
            at = pats[0]
        elif order == "last":
            at = pats[-1]
        else:
            at = rng.choice(pats)
        word, step = local_closure(word, at, work)
        trace.steps.append(step)
        trace.words.append(word.letters())
    root = word.items[0][1]
    h = CombMap(work.alpha, work.sigma, root=root, colors=work.colors)
    x = Biorientation(h, work.out)
    return h, x, trace


def psi(u, **kw):
    return close_all(u, **kw)[0]


# -- inverse direction -------------------------------------------------------

def add_dummy(h):
    """Insert a black vertex in the hexagonal face joined to its three white
    corners.  Returns ``(q, spokes)`` where ``spokes`` lists the three darts
    at the new vertex; darts of ``h`` keep their numbers."""
    f = hex_face(h)
    if f is None:
        raise NotInClass("H", "no unique hexagonal face")
    if h.colors is None:
        raise NotInClass("H", "map carries no coloring")
    hexa = h.faces[f]
    whites = [x for x in hexa if h.colors[x] == WHITE]
    if len(whites) != 3:
        raise NotInClass("H", "hexagon does not alternate colors")
    n = h.n_darts
    alpha = list(h.alpha) + [0] * 6
    sigma = list(h.sigma) + [0] * 6
    colors = list(h.colors) + [WHITE] * 3 + [BLACK] * 3
    # spoke i: dart n+i at the white corner before whites[i], dart n+3+i at v0
    for i, x in enumerate(whites):
        ni, pi = n + i, n + 3 + i
        before = h.sigma_inv[x]
        sigma[before] = ni
        sigma[ni] = x
        alpha[ni], alpha[pi] = pi, ni
    for i in range(3):
        sigma[n + 3 + i] = n + 3 + (i - 1) % 3
    q = CombMap(alpha, sigma, root=h.root, colors=colors)
    return q, (n + 3, n + 4, n + 5)


def canonical_biorientation(h, root_choice=0, seed=None, stepwise=None, check=True, details=False):
    """Canonical S-quad 3-biorientation of ``h``.

    ``root_choice`` picks which of the three faces of the angular map around
    the dummy vertex serves as root for minimality; ``seed`` randomizes the
    starting orientation; ``stepwise`` switches to single-set reversals with
    the given selection function.
    """
    if check:
        reason = h_violation(h)
        if reason is not None:
            raise NotInClass("H", reason)
    q, spokes = add_dummy(h)
    n_q = q.n_darts
    mhat = angular_map(q)
    demand = schnyder_demands(mhat, n_q)
    y = alpha_orientation(mhat, demand, seed=seed)
    if y is None:
        raise MapError("no Schnyder orientation")
    lab = homology(mhat)
    allowed = [
        v for v in range(mhat.n_vertices)
        if mhat.vertices[v][0] >= n_q or q.colors[mhat.vertices[v][0]] == WHITE
    ]
    basis = homology_basis(mhat, lab, allowed)
    y = rebalance(y, basis, lab)
    f0 = mhat.face_of[spokes[root_choice]]
    if stepwise is None:
        y = minimalize(y, f0)
    else:
        y = minimalize_stepwise(y, f0, pick=stepwise)
    xq = sigma_inverse(y, q)
    for p in spokes:
        if not xq.out[p] or xq.out[q.alpha[p]]:
            raise MapError("dummy edges are not directed out of the dummy vertex")
    x = Biorientation(h, xq.out[: h.n_darts])
    if details:
        return x, {"q": q, "xq": xq, "mhat": mhat, "y": y, "basis": basis, "spokes": spokes}
    return x


def open_map(h, **kw):
    """The balanced unicellular map obtained by deleting the ingoing
    half-edges of the canonical biorientation."""
    x = canonical_biorientation(h, **kw)
    return classify(delete_ingoing(x))


phi = open_map
