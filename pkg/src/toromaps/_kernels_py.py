"""Pure-Python reference implementation of the hot kernels.

Every function here has a drop-in twin in ``_kernels.pyx``; ``toromaps.kernels``
picks the compiled one when it is importable.  Darts are ``0 .. n-1``; a map is
the pair ``(sigma, alpha)`` of integer sequences.
"""

from __future__ import annotations


def canonical_code(sigma, alpha, root, data=None):
    """Relabel darts in breadth-first discovery order from ``root``.

    Discovery visits ``sigma[d]`` then ``alpha[d]`` for each dart ``d`` in label
    order.  The returned tuple lists, for each dart in label order, the labels of
    its sigma- and alpha-images followed by ``data[d]`` when given.  Two rooted
    maps are isomorphic iff their codes are equal.  Returns ``None`` if the
    darts reachable from ``root`` do not cover the map.
    """
    n = len(sigma)
    label = [-1] * n
    order = [root]
    label[root] = 0
    k = 0
    while k < len(order):
        d = order[k]
        x = sigma[d]
        if label[x] < 0:
            label[x] = len(order)
            order.append(x)
        x = alpha[d]
        if label[x] < 0:
            label[x] = len(order)
            order.append(x)
        k += 1
    if len(order) != n:
        return None
    out = []
    if data is None:
        for d in order:
            out.append(label[sigma[d]])
            out.append(label[alpha[d]])
    else:
        for d in order:
            out.append(label[sigma[d]])
            out.append(label[alpha[d]])
            out.append(data[d])
    return tuple(out)


def count_cycles(perm):
    n = len(perm)
    seen = [False] * n
    c = 0
    for s in range(n):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return c


def _face_lengths(sigma, alpha):
    n = len(sigma)
    seen = [False] * n
    out = []
    for s in range(n):
        if not seen[s]:
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                length += 1
                x = sigma[alpha[x]]
            out.append(length)
    return out


def rooted_maps(n_edges, genus=-1, face_degrees=None):
    """All rooted maps with ``n_edges`` edges, each exactly once.

    Maps are produced directly in canonical form: darts are created in the
    order in which the breadth-first relabelling of :func:`canonical_code`
    discovers them, so no isomorphism rejection is needed.  ``genus < 0``
    keeps every genus.  ``face_degrees`` (a set of ints) both filters the
    output and prunes partial maps whose open face chains already exceed the
    largest allowed degree.
    """
    n = 2 * n_edges
    if n == 0:
        return []
    sigma = [-1] * n
    alpha = [-1] * n
    has_pre = [False] * n
    maxdeg = max(face_degrees) if face_degrees else n + 1
    allowed = frozenset(face_degrees) if face_degrees else None
    out = []

    def face_ok(d):
        # length of the partial face chain through d (forward only)
        length = 1
        x = d
        while True:
            a = alpha[x]
            if a < 0:
                return True
            y = sigma[a]
            if y < 0:
                return True
            if y == d:
                return allowed is None or length in allowed
            length += 1
            if length > maxdeg:
                return False
            x = y

    def emit():
        v = count_cycles(sigma)
        f = 0
        lengths = _face_lengths(sigma, alpha)
        f = len(lengths)
        if genus >= 0 and 2 - v + n_edges - f != 2 * genus:
            return
        if allowed is not None and any(L not in allowed for L in lengths):
            return
        out.append((tuple(sigma), tuple(alpha)))

    def rec(i, nlab):
        if i == nlab:
            if nlab == n:
                emit()
            return
        # choose sigma[i]
        for j in range(nlab + 1):
            if j == nlab:
                if nlab >= n:
                    break
                nl = nlab + 1
            else:
                if has_pre[j]:
                    continue
                nl = nlab
            sigma[i] = j
            has_pre[j] = True
            if allowed is None or face_ok_sigma(i):
                rec_alpha(i, nl)
            has_pre[j] = False
            sigma[i] = -1

    def face_ok_sigma(i):
        # setting sigma[i] closes chains through any x with alpha[x] == i
        a = alpha[i]
        if a >= 0:
            return face_ok(a)
        return True

    def rec_alpha(i, nlab):
        if alpha[i] >= 0:
            rec(i + 1, nlab)
            return
        for j in range(i + 1, nlab + 1):
            if j == nlab:
                if nlab >= n:
                    break
                nl = nlab + 1
            else:
                if alpha[j] >= 0:
                    continue
                nl = nlab
            alpha[i] = j
            alpha[j] = i
            if allowed is None or (face_ok(i) and face_ok(j)):
                rec(i + 1, nl)
            alpha[i] = -1
            alpha[j] = -1

    rec(0, 1)
    return out
