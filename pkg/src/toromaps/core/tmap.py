"""Reader and writer for the line-oriented ``.tmap`` text format.

Darts are 1-based in files and 0-based in memory.  Layout::

    tmap 1
    darts <2e>
    alpha
    <d1> <d2>          (e lines)
    sigma
    <d> <d> ...        (one ccw cycle per vertex)
    root <d>           (optional)
    colors             (optional)
    <rep-dart> black|white
    orient             (optional)
    <d> out|in
"""

from __future__ import annotations

from ..errors import TmapFormatError
from .maps import BLACK, WHITE, CombMap, build_map

_COLOR = {"black": BLACK, "white": WHITE}


def loads(text):
    """Parse ``.tmap`` text; returns ``(map, orient)`` where ``orient`` is a
    per-dart tuple of booleans (True = out) or ``None``."""
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise TmapFormatError("unexpected end of file")
        pos += 1
        return lines[pos - 1]

    def dart(tok, n):
        try:
            d = int(tok)
        except ValueError:
            raise TmapFormatError(f"bad dart {tok!r}") from None
        if not 1 <= d <= n:
            raise TmapFormatError(f"dart {d} out of range 1..{n}")
        return d - 1

    if take() != ["tmap", "1"]:
        raise TmapFormatError("first line must be 'tmap 1'")
    head = take()
    if len(head) != 2 or head[0] != "darts" or not head[1].isdigit():
        raise TmapFormatError("second line must be 'darts <n>'")
    n = int(head[1])
    if n <= 0 or n % 2:
        raise TmapFormatError("dart count must be positive and even")
    if take() != ["alpha"]:
        raise TmapFormatError("expected 'alpha'")
    alpha = [-1] * n
    for _ in range(n // 2):
        ln = take()
        if len(ln) != 2:
            raise TmapFormatError("alpha lines hold two darts")
        a, b = dart(ln[0], n), dart(ln[1], n)
        if alpha[a] >= 0 or alpha[b] >= 0 or a == b:
            raise TmapFormatError("alpha pairs overlap")
        alpha[a], alpha[b] = b, a
    if take() != ["sigma"]:
        raise TmapFormatError("expected 'sigma'")
    sigma = [-1] * n
    while pos < len(lines) and lines[pos][0] not in ("root", "colors", "orient"):
        cyc = [dart(t, n) for t in take()]
        for i, d in enumerate(cyc):
            if sigma[d] >= 0:
                raise TmapFormatError(f"dart {d + 1} appears twice in sigma")
            sigma[d] = cyc[(i + 1) % len(cyc)]
    if any(s < 0 for s in sigma):
        raise TmapFormatError("sigma does not cover every dart")
    root = None
    colors = None
    orient = None
    while pos < len(lines):
        ln = take()
        if ln[0] == "root" and len(ln) == 2:
            root = dart(ln[1], n)
        elif ln == ["colors"]:
            colors = {}
            while pos < len(lines) and len(lines[pos]) == 2 and lines[pos][1] in _COLOR:
                c = take()
                colors[dart(c[0], n)] = _COLOR[c[1]]
        elif ln == ["orient"]:
            orient = [None] * n
            while pos < len(lines) and len(lines[pos]) == 2 and lines[pos][1] in ("out", "in"):
                o = take()
                orient[dart(o[0], n)] = o[1] == "out"
            if any(o is None for o in orient):
                raise TmapFormatError("orient block must list every dart")
            orient = tuple(orient)
        else:
            raise TmapFormatError(f"unexpected line {' '.join(ln)!r}")
    return build_map(n, alpha, sigma, root=root, colors=colors), orient


def dumps(m, orient=None):
    out = ["tmap 1", f"darts {m.n_darts}", "alpha"]
    for d, a in m.edges():
        out.append(f"{d + 1} {a + 1}")
    out.append("sigma")
    for cyc in sorted(m.vertices, key=min):
        start = cyc.index(min(cyc))
        cyc = cyc[start:] + cyc[:start]
        out.append(" ".join(str(d + 1) for d in cyc))
    if m.root is not None:
        out.append(f"root {m.root + 1}")
    if m.colors is not None:
        out.append("colors")
        for cyc in sorted(m.vertices, key=min):
            rep = min(cyc)
            out.append(f"{rep + 1} {'black' if m.colors[rep] == BLACK else 'white'}")
    if orient is not None:
        out.append("orient")
        for d in range(m.n_darts):
            out.append(f"{d + 1} {'out' if orient[d] else 'in'}")
    return "\n".join(out) + "\n"


def read(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(path, m, orient=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(m, orient))


__all__ = ["loads", "dumps", "read", "write", "CombMap"]
