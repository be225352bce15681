"""Toll-convexity operators.

A tolled walk between distinct vertices x and y is a walk in which every
vertex adjacent to x appears only at the second position and every vertex
adjacent to y only at the second-to-last.  The toll interval [x,y] collects
the vertices lying on such walks; iterating the interval operator over a
set yields its toll convex hull.

Membership of v in [x,y] for non-adjacent x, y is decided without touching
walks at all: v qualifies exactly when deleting N[x] - {v} leaves v and y
connected and deleting N[y] - {v} leaves v and x connected.  All operators
below run on that characterization, backed by a per-graph cache of the
component structures of G - N[u].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from weakref import WeakKeyDictionary

from .graph import Graph, GraphError


@dataclass(frozen=True)
class Block:
    """A vertex set F split into its border (members with a neighbor
    outside F) and interior (the rest)."""

    vertices: frozenset[int]
    border: frozenset[int]
    interior: frozenset[int]

    def validate(self, g: Graph) -> None:
        assert self.border | self.interior == self.vertices
        assert not (self.border & self.interior)
        for v in self.border:
            assert g.adj[v] - self.vertices
        for v in self.interior:
            assert not (g.adj[v] - self.vertices)


class _Engine:
    """Per-graph memo of the component labelings of G - N[u].

    Entries are computed on first use and never change, so concurrent
    lookups are benign.
    """

    __slots__ = ("g", "_comp")

    def __init__(self, g: Graph):
        self.g = g
        self._comp: dict[int, list[int]] = {}

    def comps_without_closed(self, u: int) -> list[int]:
        """Component id per vertex in G - N[u]; -1 marks deleted vertices."""
        got = self._comp.get(u)
        if got is not None:
            return got
        g = self.g
        lab = [-1] * g.n
        closed = g.adj[u] | {u}
        cid = 0
        for root in range(g.n):
            if root in closed or lab[root] >= 0:
                continue
            lab[root] = cid
            stack = [root]
            while stack:
                w = stack.pop()
                for z in g.adj[w]:
                    if z not in closed and lab[z] < 0:
                        lab[z] = cid
                        stack.append(z)
            cid += 1
        self._comp[u] = lab
        return lab


_ENGINES: "WeakKeyDictionary[Graph, _Engine]" = WeakKeyDictionary()


def _engine(g: Graph) -> _Engine:
    eng = _ENGINES.get(g)
    if eng is None:
        eng = _Engine(g)
        _ENGINES[g] = eng
    return eng


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("operation requires a connected graph")


def toll_interval(g: Graph, x: int, y: int) -> frozenset[int]:
    """All vertices on some tolled (x,y)-walk.

    Adjacent endpoints admit only the edge walk, so the interval is {x,y};
    otherwise each candidate v is tested by the two component conditions.
    """
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y:
        raise GraphError("toll interval endpoints must differ")
    _require_connected(g)
    if y in g.adj[x]:
        return frozenset({x, y})
    eng = _engine(g)
    cx = eng.comps_without_closed(x)
    cy = eng.comps_without_closed(y)
    target_x = cx[y]  # y survives G - N[x] since xy is not an edge
    target_y = cy[x]
    out = {x, y}
    adj = g.adj
    for v in range(g.n):
        if v == x or v == y:
            continue
        if cx[v] >= 0:
            ok = cx[v] == target_x
        else:
            # v in N[x] gets re-added: it reaches y's side through a
            # surviving neighbor
            ok = any(cx[w] == target_x for w in adj[v] if cx[w] >= 0)
        if not ok:
            continue
        if cy[v] >= 0:
            ok = cy[v] == target_y
        else:
            ok = any(cy[w] == target_y for w in adj[v] if cy[w] >= 0)
        if ok:
            out.add(v)
    return frozenset(out)


def interval_of_set(g: Graph, s) -> frozenset[int]:
    """Union of toll intervals over all pairs of s; singletons map to
    themselves."""
    s = frozenset(s)
    if not s:
        raise GraphError("interval of the empty set is undefined")
    if len(s) == 1:
        return s
    out = set(s)
    for a, b in combinations(sorted(s), 2):
        out |= toll_interval(g, a, b)
    return frozenset(out)


def toll_hull(g: Graph, s) -> frozenset[int]:
    """Least t-convex superset of s: the fixpoint of the interval operator.

    Each unordered pair is expanded once; the loop stabilizes after at most
    n rounds because the working set only grows.
    """
    s = frozenset(s)
    if not s:
        raise GraphError("hull of the empty set is undefined")
    _require_connected(g)
    if len(s) == 1:
        return s
    cur = set(s)
    done: set[tuple[int, int]] = set()
    while True:
        grew = set()
        for a, b in combinations(sorted(cur), 2):
            if (a, b) in done:
                continue
            done.add((a, b))
            grew |= toll_interval(g, a, b)
        if grew <= cur:
            return frozenset(cur)
        cur |= grew


def is_t_convex(g: Graph, s) -> bool:
    """s is closed under toll intervals of its pairs.  The empty set and
    V are convex by convention."""
    _require_connected(g)
    s = frozenset(s)
    if len(s) <= 1 or len(s) == g.n:
        return True
    return interval_of_set(g, s) == s


def is_t_concave(g: Graph, s) -> bool:
    """The complement of s is t-convex."""
    return is_t_convex(g, frozenset(range(g.n)) - frozenset(s))


def is_toll_extreme(g: Graph, v: int) -> bool:
    """{v} is t-concave: v lies in no toll interval of two other vertices."""
    g._check_vertex(v)
    _require_connected(g)
    for x, y in combinations(range(g.n), 2):
        if v in (x, y) or y in g.adj[x]:
            continue
        if v in toll_interval(g, x, y):
            return False
    return True


def extreme_vertices(g: Graph) -> frozenset[int]:
    """All toll extreme vertices.

    Collected as the complement of the union of interval interiors, so the
    interval of each non-adjacent pair is computed exactly once.
    """
    _require_connected(g)
    hit: set[int] = set()
    for x, y in combinations(range(g.n), 2):
        if y in g.adj[x]:
            continue
        hit |= toll_interval(g, x, y) - {x, y}
    return frozenset(range(g.n)) - hit


def block_border(g: Graph, f) -> frozenset[int]:
    f = frozenset(f)
    return frozenset(v for v in f if g.adj[v] - f)


def make_block(g: Graph, f) -> Block:
    f = frozenset(f)
    border = block_border(g, f)
    return Block(vertices=f, border=border, interior=f - border)


def fast_concavity_test(g: Graph, b: Block) -> bool:
    """Concavity of a block interior in O(n^3), for blocks whose border is
    a clique and whose interior induces a connected graph.

    Under those preconditions any tolled walk entering the interior has
    both endpoints outside the block and sweeps the whole interior, so a
    single interior vertex decides for all: the interior fails to be
    t-concave exactly when some non-adjacent u, z outside the block satisfy
    v in T_u(z) and v in T_z(u), where T_u is the family of components of
    G - N[u].
    """
    _require_connected(g)
    if not b.interior:
        raise GraphError("fast concavity test needs a non-empty interior")
    if not g.is_clique(b.border):
        raise GraphError("fast concavity test needs a clique border")
    sub, _ = g.subgraph(b.interior)
    if not sub.is_connected():
        raise GraphError("fast concavity test needs a connected interior")
    outside = [u for u in range(g.n) if u not in b.vertices]
    if len(outside) < 2:
        return True
    eng = _engine(g)
    v0 = min(b.interior)
    comp = {u: eng.comps_without_closed(u) for u in outside}
    for u, z in combinations(outside, 2):
        if z in g.adj[u]:
            continue
        cu = comp[u]
        cz = comp[z]
        if cu[v0] >= 0 and cu[v0] == cu[z] and cz[v0] >= 0 and cz[v0] == cz[u]:
            return False
    return True
