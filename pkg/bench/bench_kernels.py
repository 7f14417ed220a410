"""Compare the compiled kernels with the pure-Python fallback.

    python3 bench/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from toromaps import _kernels_py as pure

try:
    from toromaps import _kernels as compiled
except ImportError:  # extension not built
    compiled = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def random_map(n_edges, rng):
    n = 2 * n_edges
    darts = list(range(n))
    rng.shuffle(darts)
    alpha = [0] * n
    for i in range(0, n, 2):
        a, b = darts[i], darts[i + 1]
        alpha[a], alpha[b] = b, a
    sigma = list(range(n))
    rng.shuffle(sigma)
    return tuple(sigma), tuple(alpha)


def cases(rng):
    maps = [random_map(40, rng) for _ in range(200)]
    yield "rooted_maps(6 edges, all genera)", lambda k: lambda: len(k.rooted_maps(6))
    yield "rooted_maps(7 edges, genus 1, faces 4/6)", lambda k: lambda: len(k.rooted_maps(7, 1, {4, 6}))
    yield "rooted_maps(7 edges, planar)", lambda k: lambda: len(k.rooted_maps(7, 0))
    yield "canonical_code x 16000 (80 darts)", lambda k: lambda: sum(
        1 for s, a in maps for r in range(80) if k.canonical_code(s, a, r) is not None
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    print("kernel\tpython_s\tcompiled_s\tspeedup")
    for name, make in cases(rng):
        tp, rp = best_of(make(pure), args.repeat)
        if compiled is None:
            print(f"{name}\t{tp:.4f}\t-\t-")
            continue
        tc, rc = best_of(make(compiled), args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}: {rp} vs {rc}")
        print(f"{name}\t{tp:.4f}\t{tc:.4f}\t{tp / tc:.1f}x")


if __name__ == "__main__":
    main()
