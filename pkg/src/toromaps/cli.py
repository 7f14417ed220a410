"""Command-line front end.

Exit status: 0 on success, 1 when an input fails a class predicate or a
construction, 2 on usage errors (bad flags, unreadable files).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import series as ser
from .bijection import close_all, open_map
from .core import tmap
from .core.maps import BLACK, bipartition
from .core.regions import h_violation, is_in_T, q_violation
from .decomposition import interior_counts, marked_d_violation, mark_edge, split, t3_violation
from .errors import CapExceeded, MapError
from .oracle import CLASSES, DEFAULT_CAP, EnumSpec, coefficient_table, enumerate_rooted
from .unicellular import classify, is_balanced, random_ubal

log = logging.getLogger("toromaps")


class UsageError(Exception):
    pass


def _read(path):
    try:
        return tmap.read(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


# -- subcommands -----------------------------------------------------------------

def cmd_series(args):
    fam, order = args.family, args.order
    if fam in ("T", "N"):
        s = ser.T_series(order) if fam == "T" else ser.N_closed(order)
        rows, cols = ("faces", "vertices") if fam == "T" else ("black", "white")
        print(f"{rows}\\{cols}\t" + "\t".join(str(j) for j in range(order + 1)))
        for i in range(order + 1):
            row = (s.coeff(i, j) for j in range(order + 1))
            print(f"{i}\t" + "\t".join("" if x is None else str(x) for x in row))
        return 0
    s = {"Te": ser.T_e, "Tv": ser.T_v, "Tt": ser.T_t}[fam](order)
    label = {"Te": "edges", "Tv": "vertices", "Tt": "vertices"}[fam]
    print(f"{label}\tcoefficient")
    for n, x in enumerate(s.c):
        if x:
            print(f"{n}\t{x}")
    return 0


def cmd_enum(args):
    spec = EnumSpec(args.edges, args.cls, genus=args.genus, rooted=not args.unrooted, cap=args.cap)
    if args.group_by == "vf":
        table = coefficient_table(spec, jobs=args.jobs)
        print("faces\tvertices\tcount")
        for (f, v), c in table.items():
            print(f"{f}\t{v}\t{c}")
        maps = None
    else:
        count, maps = enumerate_rooted(spec, jobs=args.jobs, emit=args.emit is not None)
        print("edges\tclass\tcount")
        print(f"{args.edges}\t{args.cls}\t{count}")
    if args.emit is not None:
        if maps is None:
            _, maps = enumerate_rooted(spec, jobs=args.jobs)
        os.makedirs(args.emit, exist_ok=True)
        for k, m in enumerate(maps):
            tmap.write(os.path.join(args.emit, f"map_{k:06d}.tmap"), m)
        log.info("wrote %d maps to %s", len(maps), args.emit)
    return 0


def cmd_psi(args):
    u, _ = _read(args.inp)
    h, x, trace = close_all(u, order=args.order, seed=args.seed)
    _write_text(args.out, tmap.dumps(h, x.out))
    if args.trace:
        out = sys.stderr if args.out in (None, "-") else sys.stdout
        print("step\tleaf\tafter\tword", file=out)
        print(f"0\t\t\t{trace.words[0]}", file=out)
        for k, ((leaf, t), w) in enumerate(zip(trace.steps, trace.words[1:]), 1):
            print(f"{k}\t{leaf + 1}\t{t + 1}\t{w}", file=out)
    return 0


def cmd_phi(args):
    h, _ = _read(args.inp)
    u = open_map(h, seed=args.seed)
    _write_text(args.out, tmap.dumps(u.carrier))
    return 0


def _violation(cls, m):
    if cls == "H":
        return h_violation(m)
    if cls == "Q":
        return q_violation(m)
    if cls == "T":
        if m.genus != 1:
            return "WrongGenus"
        return None if is_in_T(m) else "not essentially 3-connected"
    if cls == "T3":
        return t3_violation(m)
    if cls == "D":
        return marked_d_violation(m)
    try:
        u = classify(m)
    except MapError as exc:
        return type(exc).__name__
    return None if is_balanced(u) else "NotBalanced"


def cmd_check(args):
    m, _ = _read(args.inp)
    if m.root is None:
        m = m.with_root(0)
    if args.cls in ("Q", "D") and m.colors is None and bipartition(m) is not None:
        m = mark_edge(m, m.root)
    reason = _violation(args.cls, m)
    if reason is not None:
        print(f"not in {args.cls}: {reason}")
        return 1
    print(f"ok: in {args.cls}")
    return 0


def cmd_decompose(args):
    q, _ = _read(args.inp)
    if not 1 <= args.edge <= q.n_darts:
        raise UsageError(f"--edge must be a dart between 1 and {q.n_darts}")
    q = mark_edge(q, args.edge - 1)
    reason = q_violation(q)
    if reason is not None:
        raise MapError(f"not in Q: {reason}")
    parts = split(q)
    os.makedirs(args.out_dir, exist_ok=True)
    tmap.write(os.path.join(args.out_dir, "h.tmap"), parts.h)
    tmap.write(os.path.join(args.out_dir, "d.tmap"), parts.d)
    db, dw = interior_counts(parts.d)
    manifest = {
        "input": os.path.basename(args.inp),
        "marked_edge": args.edge,
        "h": {"file": "h.tmap", "marked_corner": parts.h.root + 1},
        "d": {"file": "d.tmap", "marked_edge": parts.d.root + 1,
              "interior_black": db, "interior_white": dw},
    }
    with open(os.path.join(args.out_dir, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"h\t{parts.h.n_edges} edges\t{os.path.join(args.out_dir, 'h.tmap')}")
    print(f"d\t{parts.d.n_edges} edges\t{os.path.join(args.out_dir, 'd.tmap')}")
    return 0


def cmd_sample(args):
    u = random_ubal(args.leaves, seed=args.seed)
    _write_text(args.out, tmap.dumps(u.carrier))
    return 0


def _to_json(m, orient):
    one = lambda seq: [d + 1 for d in seq]  # noqa: E731
    out = {
        "darts": m.n_darts,
        "genus": m.genus,
        "alpha": one(m.alpha),
        "sigma": one(m.sigma),
        "root": None if m.root is None else m.root + 1,
        "vertices": [one(v) for v in m.vertices],
        "faces": [one(f) for f in m.faces],
    }
    if m.colors is not None:
        out["colors"] = ["black" if m.colors[v[0]] == BLACK else "white" for v in m.vertices]
    if orient is not None:
        out["orient"] = ["out" if o else "in" for o in orient]
    return json.dumps(out, indent=2) + "\n"


_DOT_DIR = {(True, True): "both", (True, False): "forward", (False, True): "back", (False, False): "none"}


def _to_dot(m, orient):
    lines = ["graph map {", f"  // genus {m.genus}, darts numbered from 1"]
    for v, darts in enumerate(m.vertices):
        attrs = [f'rotation="{" ".join(str(d + 1) for d in darts)}"']
        if m.colors is not None:
            black = m.colors[darts[0]] == BLACK
            attrs.append('style=filled fillcolor=black fontcolor=white' if black else 'fillcolor=white')
        lines.append(f"  v{v} [{' '.join(attrs)}];")
    for d, a in m.edges():
        u, w = m.vertex_of[d], m.vertex_of[a]
        attrs = [f'darts="{d + 1} {a + 1}"', f'taillabel="{d + 1}"', f'headlabel="{a + 1}"']
        if orient is not None:
            attrs.append(f"dir={_DOT_DIR[(orient[d], orient[a])]}")
        if m.root is not None and m.root in (d, a):
            attrs.append("penwidth=2")
        lines.append(f"  v{u} -- v{w} [{' '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args):
    m, orient = _read(args.inp)
    text = _to_json(m, orient) if args.format == "json" else _to_dot(m, orient)
    _write_text(args.out, text)
    return 0


# -- parser -------------------------------------------------------------------------

SAMPLE_HELP = (
    "Generate a balanced unicellular map: a random caterpillar triple with equal "
    "scores plus random attached leaves, repeated until balanced. The output is a "
    "valid member but is NOT uniformly distributed over the family."
)


def build_parser():
    p = argparse.ArgumentParser(prog="toromaps", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", help="print series coefficients as TSV")
    s.add_argument("--family", choices=ser.FAMILIES, required=True)
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("enum", help="exhaustive rooted enumeration")
    s.add_argument("--edges", type=int, required=True)
    s.add_argument("--class", dest="cls", choices=CLASSES, default="all")
    s.add_argument("--genus", type=int, default=None, help="genus filter for class 'all'")
    s.add_argument("--group-by", choices=("vf",), default=None)
    s.add_argument("--emit", metavar="DIR", default=None, help="write every map to DIR")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest allowed edge count")
    s.add_argument("--unrooted", action="store_true", help="count unrooted classes")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("psi", help="close a balanced unicellular map")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", default=None)
    s.add_argument("--trace", action="store_true", help="print the closure steps")
    s.add_argument("--order", choices=("first", "last", "random"), default="first")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("phi", help="open a hexagon-rooted map")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", default=None)
    s.add_argument("--seed", type=int, default=None, help="seed for the starting orientation")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("check", help="test class membership")
    s.add_argument("--class", dest="cls", choices=("H", "Q", "T", "Ubal", "T3", "D"), required=True)
    s.add_argument("--in", dest="inp", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("decompose", help="split a marked quadrangulation at its maximal hexagon")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--edge", type=int, required=True, help="a dart (1-based) of the marked edge")
    s.add_argument("--out-dir", default=".")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("sample", help="random balanced unicellular map (not uniform)", description=SAMPLE_HELP)
    s.add_argument("--leaves", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("export", help="export a map as dot or json")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--format", choices=("dot", "json"), required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, CapExceeded) as exc:
        print(f"toromaps: {exc}", file=sys.stderr)
        return 2
    except MapError as exc:
        print(f"toromaps: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
