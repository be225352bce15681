"""Clique-separator decomposition into maximal prime subgraphs.

A connected graph either has no clique separator (it is prime) or splits
along clique minimal separators into a unique family of maximal prime
induced subgraphs, the atoms of the decomposition.  Atoms cover every
vertex and every edge, and two atoms meet in a clique.

The decomposition below runs a lexicographic minimal-ordering search to
build a minimal triangulation, then scans the elimination order: whenever
the later-numbered fill neighborhood of a vertex is a clique of the
original graph that still separates the not-yet-removed part, the
component of the scanned vertex is cut off together with the separator.
"""
from __future__ import annotations

from dataclasses import dataclass
from .convexity import Block, make_block
from .graph import Graph, GraphError


@dataclass(frozen=True)
class AtomDecomposition:
    """Atoms in deterministic order (smallest member, then size), with a
    per-atom extremal flag."""

    atoms: tuple[frozenset[int], ...]
    extremal_flags: tuple[bool, ...]

    def extremal(self) -> list[frozenset[int]]:
        return [a for a, f in zip(self.atoms, self.extremal_flags) if f]


def _lex_m(g: Graph):
    """Minimal elimination ordering and the fill neighborhoods it induces.

    Returns (order, madj): order[i] is the vertex numbered i (elimination
    runs from 1 to n), and madj[v] the higher-numbered neighbors of v in
    the triangulated graph.

    Labels are kept as dense ranks; at each step the reach search admits a
    path to u when all interior vertices carry ranks strictly below u's.
    """
    n = g.n
    adj = g.adj
    rank = [0] * n
    numbered = [False] * n
    order = [0] * (n + 1)
    madj: list[set[int]] = [set() for _ in range(n)]

    for i in range(n, 0, -1):
        v = -1
        best = -1
        for u in range(n):
            if not numbered[u] and rank[u] > best:
                best = rank[u]
                v = u
        numbered[v] = True
        order[i] = v

        reached = [False] * n
        buckets: list[list[int]] = [[] for _ in range(n + 1)]
        updated: list[int] = []
        for w in adj[v]:
            if not numbered[w]:
                reached[w] = True
                updated.append(w)
                buckets[rank[w]].append(w)
        for k in range(n + 1):
            bucket = buckets[k]
            while bucket:
                w = bucket.pop()
                for z in adj[w]:
                    if numbered[z] or reached[z]:
                        continue
                    reached[z] = True
                    if rank[z] > k:
                        updated.append(z)
                        buckets[rank[z]].append(z)
                    else:
                        bucket.append(z)
        for z in updated:
            madj[z].add(v)
        # re-rank: an updated label sorts just above its old value
        upd = set(updated)
        pool = sorted(
            (rank[u], 1 if u in upd else 0, u)
            for u in range(n)
            if not numbered[u]
        )
        new_rank = -1
        prev = None
        for r, flag, u in pool:
            if (r, flag) != prev:
                new_rank += 1
                prev = (r, flag)
            rank[u] = new_rank
    return order, madj


def atoms(g: Graph) -> AtomDecomposition:
    """The unique family of maximal prime induced subgraphs."""
    if g.n == 0:
        raise GraphError("decomposition of the empty graph is undefined")
    if not g.is_connected():
        raise GraphError("decomposition requires a connected graph")
    order, madj = _lex_m(g)
    alive = set(range(g.n))
    found: list[frozenset[int]] = []
    for i in range(1, g.n + 1):
        x = order[i]
        if x not in alive:
            continue
        sep = {w for w in madj[x] if w in alive}
        if not sep or not g.is_clique(sep):
            continue
        if not _is_minimal_separator(g, alive, sep):
            continue
        comp = _component(g, alive - sep, x)
        found.append(frozenset(comp | sep))
        alive -= comp
    found.append(frozenset(alive))
    found.sort(key=sorted)
    flags = _extremal_flags(found)
    return AtomDecomposition(atoms=tuple(found), extremal_flags=flags)


def _is_minimal_separator(g: Graph, alive: set[int], sep: set[int]) -> bool:
    """sep is a minimal separator of g[alive]: at least two components of
    alive - sep see every separator vertex."""
    remaining = alive - sep
    seen: set[int] = set()
    full = 0
    for root in sorted(remaining):
        if root in seen:
            continue
        comp = _component(g, remaining, root)
        seen |= comp
        if all(g.adj[s] & comp for s in sep):
            full += 1
            if full >= 2:
                return True
    return False


def _component(g: Graph, inside: set[int], root: int) -> set[int]:
    comp = {root}
    stack = [root]
    while stack:
        w = stack.pop()
        for z in g.adj[w]:
            if z in inside and z not in comp:
                comp.add(z)
                stack.append(z)
    return comp


def _extremal_flags(found: list[frozenset[int]]) -> tuple[bool, ...]:
    """An atom F is extremal when a single other atom F' swallows the union
    of F's intersections with everything else."""
    if len(found) < 2:
        return tuple(False for _ in found)
    flags = []
    for idx, a in enumerate(found):
        shared: set[int] = set()
        for jdx, b in enumerate(found):
            if jdx != idx:
                shared |= a & b
        flags.append(
            any(shared <= b for jdx, b in enumerate(found) if jdx != idx)
        )
    return tuple(flags)


def is_prime(g: Graph) -> bool:
    """True when no clique separates the graph."""
    return len(atoms(g).atoms) == 1


def extremal_atoms(d: AtomDecomposition) -> list[frozenset[int]]:
    if len(d.atoms) < 2:
        raise GraphError("extremal atoms are defined only for reducible graphs")
    return d.extremal()


def block_of(g: Graph, f) -> Block:
    """Border/interior split of an arbitrary vertex set."""
    f = frozenset(f)
    for v in f:
        g._check_vertex(v)
    return make_block(g, f)
