"""Command-line front end.

Every subcommand reads one graph (edge-list or graph6, file or "-" for
stdin), computes, and prints either stable line-oriented text or a single
JSON document.  Vertex names are echoed exactly as they appeared in the
input; internal ids never leak.  Identical inputs produce byte-identical
outputs unless --timing is given.

Exit status: 0 success, 1 bad input or flags, 2 internal invariant
violation (a bug, never a user error), 3 oracle disagreement in verify.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .atoms import atoms
from .convexity import extreme_vertices, toll_hull, toll_interval
from .enumeration import (
    EnumerationError,
    compare_with_bruteforce,
    enumerate_min_hull_sets,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    SizeLimitError,
    generate,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
)
from .oracles import MAX_ENUM_N, MAX_INTERVAL_N, bf_atoms, bf_hull_number
from .solver import SolverInvariantError, solve

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2
EXIT_MISMATCH = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.exists():
        raise GraphError(f"no such file: {path}")
    return p.read_text()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 input")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _digest(g: Graph) -> dict:
    canon = "\n".join(f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges())
    return {
        "n": g.n,
        "m": g.m,
        "sha256": hashlib.sha256(canon.encode()).hexdigest(),
    }


def _labels(g: Graph, vs) -> list[str]:
    return [g.labels[v] for v in sorted(vs)]


def _relabel_trace(g: Graph, trace) -> list:
    def conv(value):
        if isinstance(value, list):
            return [conv(v) for v in value]
        if isinstance(value, int) and not isinstance(value, bool):
            return g.labels[value]
        return value

    out = []
    keys = {"member", "f_circ", "f_bullet", "chosen", "pair", "f_prime", "m_prime"}
    for entry in trace:
        out.append({k: (conv(v) if k in keys else v) for k, v in entry.items()})
    return out


class _Emitter:
    """Collects the result payload and prints it in the chosen format."""

    def __init__(self, command: str, g: Graph | None, args):
        self.command = command
        self.graph = g
        self.fmt = args.format
        self.timing = args.timing
        self.started = time.perf_counter()
        self.text_lines: list[str] = []
        self.payload: dict = {}
        self.trace = None

    def emit(self) -> None:
        if self.fmt == "json":
            doc = {"command": self.command}
            if self.graph is not None:
                doc["input"] = _digest(self.graph)
            doc["result"] = self.payload
            if self.trace is not None:
                doc["trace"] = self.trace
            if self.timing:
                doc["elapsed_ms"] = round(
                    (time.perf_counter() - self.started) * 1000, 3
                )
            print(json.dumps(doc, indent=2))
        else:
            for line in self.text_lines:
                print(line)
            if self.trace is not None:
                for entry in self.trace:
                    print(f"trace: {json.dumps(entry)}")
            if self.timing:
                print(
                    f"elapsed_ms: "
                    f"{(time.perf_counter() - self.started) * 1000:.3f}"
                )


def _cmd_hull(args) -> int:
    g = _load_graph(args.file, args.input_format)
    out = _Emitter("hull", g, args)
    result = solve(g)
    family = [
        {
            "vertices": _labels(g, b.vertices),
            "type": b.ctype,
            "granularity": b.granularity,
            "chosen": _labels(g, b.chosen),
            "options": [_labels(g, o) for o in b.options],
        }
        for b in result.family
    ]
    out.payload = {
        "hull_number": result.hull_number,
        "hull_set": _labels(g, result.hull_set),
        "prime": result.prime,
        "complete": result.complete,
        "family": family,
        "extreme_vertices": _labels(g, result.extreme_vertices),
    }
    out.text_lines.append(f"hull_number: {result.hull_number}")
    out.text_lines.append("hull_set: " + " ".join(_labels(g, result.hull_set)))
    for b in family:
        out.text_lines.append(
            f"family: {{{' '.join(b['vertices'])}}} type={b['type']}"
            f" granularity={b['granularity']} chosen={{{' '.join(b['chosen'])}}}"
        )
    out.text_lines.append(
        "extreme_vertices: " + " ".join(_labels(g, result.extreme_vertices))
    )
    if args.trace:
        out.trace = _relabel_trace(g, result.trace)
    out.emit()
    return EXIT_OK


def _cmd_atoms(args) -> int:
    g = _load_graph(args.file, args.input_format)
    out = _Emitter("atoms", g, args)
    dec = atoms(g)
    out.payload = {
        "atoms": [_labels(g, a) for a in dec.atoms],
        "extremal": list(dec.extremal_flags),
    }
    for a, flag in zip(dec.atoms, dec.extremal_flags):
        mark = "extremal" if flag else "-"
        out.text_lines.append(f"atom: {{{' '.join(_labels(g, a))}}} {mark}")
    out.emit()
    return EXIT_OK


def _cmd_interval(args) -> int:
    g = _load_graph(args.file, args.input_format)
    out = _Emitter("interval", g, args)
    x, y = g.id_of(args.x), g.id_of(args.y)
    iv = toll_interval(g, x, y)
    out.payload = {"x": args.x, "y": args.y, "interval": _labels(g, iv)}
    out.text_lines.append("interval: " + " ".join(_labels(g, iv)))
    out.emit()
    return EXIT_OK


def _cmd_closure(args) -> int:
    g = _load_graph(args.file, args.input_format)
    out = _Emitter("closure", g, args)
    seed = [g.id_of(tok) for tok in args.set.split(",") if tok]
    if not seed:
        raise GraphError("--set needs at least one vertex label")
    hull = toll_hull(g, seed)
    out.payload = {
        "set": [g.labels[v] for v in sorted(set(seed))],
        "hull": _labels(g, hull),
        "is_hull_set": len(hull) == g.n,
    }
    out.text_lines.append("hull: " + " ".join(_labels(g, hull)))
    out.text_lines.append(f"is_hull_set: {str(len(hull) == g.n).lower()}")
    out.emit()
    return EXIT_OK


def _cmd_extreme(args) -> int:
    g = _load_graph(args.file, args.input_format)
    out = _Emitter("extreme", g, args)
    ext = extreme_vertices(g)
    out.payload = {"extreme_vertices": _labels(g, ext)}
    out.text_lines.append("extreme_vertices: " + " ".join(_labels(g, ext)))
    out.emit()
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    g = _load_graph(args.file, args.input_format)
    sets = []
    for s in enumerate_min_hull_sets(g, limit=args.limit):
        if args.format == "text":
            print(json.dumps(_labels(g, s)))
        else:
            sets.append(_labels(g, s))
    if args.format == "json":
        out = _Emitter("enumerate", g, args)
        out.payload = {"sets": sets, "count": len(sets)}
        out.emit()
    return EXIT_OK


def _verify_one(g: Graph) -> dict:
    result = solve(g)
    closure_ok = toll_hull(g, result.hull_set) == frozenset(range(g.n))
    report: dict = {
        "n": g.n,
        "solver_hull_number": result.hull_number,
        "closure_ok": closure_ok,
    }
    agree = closure_ok
    if g.n <= MAX_INTERVAL_N:
        oracle = bf_hull_number(g)
        report["oracle_hull_number"] = oracle
        agree = agree and oracle == result.hull_number
    else:
        report["oracle_hull_number"] = None
        report["skipped"] = f"oracle hull check skipped above n={MAX_INTERVAL_N}"
    if g.n <= MAX_ENUM_N:
        got = [set(a) for a in atoms(g).atoms]
        want = [set(a) for a in bf_atoms(g)]
        report["atoms_match"] = got == want
        agree = agree and got == want
        enum_report = compare_with_bruteforce(g)
        report["enumeration_complete"] = enum_report.complete
        report["enumeration_count"] = len(enum_report.emitted)
    else:
        report["atoms_match"] = None
        report["enumeration_complete"] = None
    report["agreement"] = agree
    return report


def _cmd_verify(args) -> int:
    path = Path(args.file) if args.file != "-" else None
    out = _Emitter("verify", None, args)
    reports = []
    if path is not None and path.is_dir():
        files = sorted(
            p for p in path.iterdir() if p.suffix in (".txt", ".g6", ".el")
        )
        jobs = []
        for p in files:
            fmt = "graph6" if p.suffix == ".g6" else "edge-list"
            text = p.read_text()
            if fmt == "graph6":
                jobs.extend(
                    (f"{p.name}:{i}", parse_graph6(ln))
                    for i, ln in enumerate(text.splitlines())
                    if ln.strip()
                )
            else:
                jobs.append((p.name, parse_edge_list(text)))
        reports = _run_verify_jobs(jobs, args.jobs)
    else:
        text = _read_text(args.file)
        if args.input_format == "graph6":
            jobs = [
                (f"line:{i}", parse_graph6(ln))
                for i, ln in enumerate(text.splitlines())
                if ln.strip()
            ]
        else:
            jobs = [("input", parse_edge_list(text))]
        reports = _run_verify_jobs(jobs, args.jobs)
    ok = all(r["agreement"] for _, r in reports)
    out.payload = {
        "graphs": len(reports),
        "agreement": ok,
        "reports": [dict(r, name=name) for name, r in reports],
    }
    for name, r in reports:
        status = "ok" if r["agreement"] else "MISMATCH"
        oracle = r.get("oracle_hull_number")
        out.text_lines.append(
            f"{name}: solver={r['solver_hull_number']}"
            f" oracle={oracle if oracle is not None else 'skipped'}"
            f" closure={'ok' if r['closure_ok'] else 'FAIL'} {status}"
        )
    out.text_lines.append(f"agreement: {str(ok).lower()}")
    out.emit()
    return EXIT_OK if ok else EXIT_MISMATCH


def _run_verify_jobs(jobs, workers):
    if workers and workers > 1 and len(jobs) > 1:
        import multiprocessing as mp

        with mp.Pool(workers) as pool:
            results = pool.map(_verify_payload, [g for _, g in jobs])
        return [(name, rep) for (name, _), rep in zip(jobs, results)]
    return [(name, _verify_one(g)) for name, g in jobs]


def _verify_payload(g: Graph) -> dict:
    return _verify_one(g)


def _cmd_gen(args) -> int:
    parameter = args.p
    model = args.model
    g = generate(model, args.n, parameter, args.seed)
    text = to_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
        dest = args.out
    else:
        sys.stdout.write(text)
        dest = "-"
    if args.format == "json":
        out = _Emitter("gen", g, args)
        out.payload = {"model": model, "n": g.n, "m": g.m, "out": dest}
        out.emit()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tollhull",
        description="Toll convexity toolkit: hull numbers, intervals, "
        "clique-separator decomposition, minimum-hull-set enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default text)",
    )
    common.add_argument(
        "--input-format", choices=("edge-list", "graph6"), default="edge-list",
        help="input graph encoding (default edge-list)",
    )
    common.add_argument("--trace", action="store_true", help="include the solver trace")
    common.add_argument("--timing", action="store_true", help="append elapsed time")

    p = sub.add_parser("hull", parents=[common], help="minimum toll hull set")
    p.add_argument("file")
    p.set_defaults(func=_cmd_hull)

    p = sub.add_parser("atoms", parents=[common], help="maximal prime subgraphs")
    p.add_argument("file")
    p.set_defaults(func=_cmd_atoms)

    p = sub.add_parser("interval", parents=[common], help="toll interval of two vertices")
    p.add_argument("file")
    p.add_argument("--x", required=True, help="first endpoint label")
    p.add_argument("--y", required=True, help="second endpoint label")
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("closure", parents=[common], help="toll convex hull of a set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated vertex labels")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("extreme", parents=[common], help="toll extreme vertices")
    p.add_argument("file")
    p.set_defaults(func=_cmd_extreme)

    p = sub.add_parser("enumerate", parents=[common], help="stream minimum hull sets")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=None, help="stop after N sets")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "verify", parents=[common],
        help="cross-check the solver against brute force (file or directory)",
    )
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for sweeps")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate a test graph")
    p.add_argument("--model", required=True, choices=("gnp", "tree", "complete", "cycle"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None, help="edge probability for gnp")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write edge list here instead of stdout")
    p.set_defaults(func=_cmd_gen)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USER if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (SizeLimitError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except (SolverInvariantError, EnumerationError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
