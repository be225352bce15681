#!/usr/bin/env python3
"""Wall-clock scaling of the hull solver on sparse random graphs.

Times the full pipeline (decomposition, primality, selection) on connected
gnp graphs at a fixed edge probability across a grid of sizes and prints
the growth ratio between consecutive sizes.  The solver is quartic in the
worst case; on sparse random inputs the prime fast path dominates.

  python scripts/timing_scaling.py --sizes 50,100,200,400 --p 0.1
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tollhull.graph import generate  # noqa: E402
from tollhull.solver import solve  # noqa: E402


def connected_gnp(n: int, p: float):
    seed = 0
    while True:
        g = generate("gnp", n, p, seed=seed)
        if g.is_connected():
            return g, seed
        seed += 1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--p", type=float, default=0.1)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",")]
    previous = None
    for n in sizes:
        g, seed = connected_gnp(n, args.p)
        best = None
        result = None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            result = solve(g)
            elapsed = time.perf_counter() - t0
            best = elapsed if best is None else min(best, elapsed)
        ratio = "" if previous is None else f" x{best / previous:.1f}"
        print(
            f"n={n:5d} m={g.m:6d} seed={seed} prime={result.prime} "
            f"hull={result.hull_number} time={best * 1000:9.2f}ms{ratio}"
        )
        previous = best
    return 0


if __name__ == "__main__":
    sys.exit(main())
