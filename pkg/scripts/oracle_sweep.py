#!/usr/bin/env python3
"""Sweep the solver against the brute-force oracles and report.

Two modes, combinable:

  --corpus FILE      every graph of a graph6 corpus (hull number, closure,
                     all-pairs interval agreement, enumeration census)
  --random N         N seeded random connected graphs on up to --max-n
                     vertices (hull number and closure agreement)

Exits non-zero on any discrepancy.  Typical use:

  python scripts/oracle_sweep.py --corpus tests/data/connected_le7.g6
  python scripts/oracle_sweep.py --random 10000 --max-n 9
"""
import argparse
import itertools
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tollhull.convexity import toll_hull, toll_interval  # noqa: E402
from tollhull.enumeration import compare_with_bruteforce  # noqa: E402
from tollhull.graph import Graph, parse_graph6_file  # noqa: E402
from tollhull.oracles import (  # noqa: E402
    MAX_ENUM_N,
    bf_hull_number,
    bf_toll_interval,
)
from tollhull.solver import solve  # noqa: E402


def sweep_corpus(path: str) -> int:
    graphs = parse_graph6_file(Path(path).read_text())
    bad = 0
    census = {"complete": 0, "incomplete": 0}
    started = time.perf_counter()
    for g in graphs:
        full = frozenset(range(g.n))
        for x, y in itertools.combinations(range(g.n), 2):
            if toll_interval(g, x, y) != bf_toll_interval(g, x, y):
                print(f"interval mismatch on {sorted(g.edges())} at ({x},{y})")
                bad += 1
        r = solve(g)
        want = bf_hull_number(g)
        if r.hull_number != want or toll_hull(g, r.hull_set) != full:
            print(f"hull mismatch on {sorted(g.edges())}: {r.hull_number} vs {want}")
            bad += 1
        if g.n <= MAX_ENUM_N:
            report = compare_with_bruteforce(g)
            census["complete" if report.complete else "incomplete"] += 1
    elapsed = time.perf_counter() - started
    print(
        f"corpus: {len(graphs)} graphs, {bad} discrepancies, "
        f"enumeration {census['complete']} complete / "
        f"{census['incomplete']} incomplete, {elapsed:.1f}s"
    )
    return bad


def sweep_random(count: int, max_n: int, seed: int) -> int:
    rng = random.Random(seed)
    bad = checked = 0
    started = time.perf_counter()
    while checked < count:
        n = rng.randint(2, max_n)
        p = rng.choice([0.15, 0.25, 0.4, 0.6, 0.8])
        edges = [
            e for e in itertools.combinations(range(n), 2) if rng.random() < p
        ]
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        checked += 1
        r = solve(g)
        want = bf_hull_number(g)
        if r.hull_number != want or toll_hull(g, r.hull_set) != frozenset(range(n)):
            print(f"hull mismatch on {sorted(g.edges())}: {r.hull_number} vs {want}")
            bad += 1
    elapsed = time.perf_counter() - started
    print(f"random: {checked} graphs, {bad} discrepancies, {elapsed:.1f}s")
    return bad


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", default=None)
    ap.add_argument("--random", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=31337)
    args = ap.parse_args()
    bad = 0
    if args.corpus:
        bad += sweep_corpus(args.corpus)
    if args.random:
        bad += sweep_random(args.random, args.max_n, args.seed)
    if not args.corpus and not args.random:
        ap.error("nothing to do: pass --corpus and/or --random")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
