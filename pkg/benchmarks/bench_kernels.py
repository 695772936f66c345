#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python reference.

Runs the same workloads through grundytd._kernels_c and grundytd._kernels_py
and prints per-kernel wall times plus the speedup ratio.  Inputs are sized so
the pure side finishes in seconds; pass --heavy for larger instances.
"""

import argparse
import random
import statistics
import time

from grundytd import _kernels_py as kpy
from grundytd import build_family

try:
    from grundytd import _kernels_c as kc
except ImportError:
    kc = None


def _graph_masks(g):
    return list(g.adj), (1 << g.n) - 1


def _random_masks(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    # pin down stray isolated vertices so the universe stays coverable
    for u in range(n):
        if adj[u] == 0:
            v = (u + 1) % n
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj, (1 << n) - 1


def _workloads(heavy, seed):
    rng = random.Random(seed)
    path_n = 18 if heavy else 15
    cyc_n = 16 if heavy else 14
    rnd_n = 16 if heavy else 13
    game_n = 14 if heavy else 12
    jobs = []

    masks, uni = _graph_masks(build_family(f"path:{path_n}"))
    jobs.append((f"longest_sequence path n={path_n}", "max_cover_sequence", (masks, uni)))
    masks, uni = _graph_masks(build_family(f"cycle:{cyc_n}"))
    jobs.append((f"longest_sequence cycle n={cyc_n}", "max_cover_sequence", (masks, uni)))
    masks, uni = _random_masks(rng, rnd_n, 0.25)
    jobs.append((f"longest_sequence random n={rnd_n}", "max_cover_sequence", (masks, uni)))
    masks, uni = _graph_masks(build_family(f"path:{game_n}"))
    jobs.append((f"game_value path n={game_n}", "game_cover_value", (masks, uni)))
    masks, uni = _random_masks(rng, rnd_n, 0.3)
    val = kpy.max_cover_sequence(masks, uni)[0]
    jobs.append((f"fixed_length random n={rnd_n} L={val - 1}", "sequence_of_length", (masks, uni, val - 1)))
    masks, uni = _random_masks(rng, 20 if heavy else 17, 0.2)
    jobs.append(("min_cover random", "min_cover", (masks, uni)))
    jobs.append(("max_minimal_cover random", "max_minimal_cover", (masks, uni)))
    adj, _ = _random_masks(rng, 18 if heavy else 15, 0.3)
    jobs.append(("max_matching random", "max_matching", (adj, len(adj), False)))
    jobs.append(("max_induced_matching random", "max_matching", (adj, len(adj), True)))
    return jobs


def _time(fn, args, repeats):
    best = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best.append(time.perf_counter() - t0)
    return min(best), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3, help="timing repeats per kernel (min is reported)")
    ap.add_argument("--seed", type=int, default=11, help="seed for the random instances")
    ap.add_argument("--heavy", action="store_true", help="larger instances (tens of seconds on the pure side)")
    args = ap.parse_args(argv)

    if kc is None:
        print("compiled kernels are not built; run pip install -e . first")
        return 1

    rows = []
    for label, kernel, kargs in _workloads(args.heavy, args.seed):
        t_py, r_py = _time(getattr(kpy, kernel), kargs, args.repeats)
        t_c, r_c = _time(getattr(kc, kernel), kargs, args.repeats)
        if r_py != r_c:
            print(f"MISMATCH on {label}: {r_py!r} != {r_c!r}")
            return 1
        rows.append((label, t_py, t_c))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for label, t_py, t_c in rows:
        ratio = t_py / t_c if t_c > 0 else float("inf")
        print(f"{label:<{width}}  {t_py * 1e3:>8.1f}ms  {t_c * 1e3:>8.1f}ms  {ratio:>7.1f}x")
    geo = statistics.geometric_mean([t_py / t_c for _, t_py, t_c in rows if t_c > 0])
    print(f"geometric mean speedup: {geo:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
