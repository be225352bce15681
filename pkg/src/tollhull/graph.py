"""Immutable simple-graph core.

Vertices are dense 0-based integers; external labels are kept only for
I/O.  Graphs are frozen after construction, so every operation here is a
pure read and safe to call concurrently.
"""
from __future__ import annotations

import random
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph input or operation argument."""


class ParseError(GraphError):
    """Malformed graph text."""


class SizeLimitError(GraphError):
    """A brute-force guard was exceeded."""


class Graph:
    """Finite simple undirected graph with adjacency sets.

    Invariants: adjacency is symmetric, there are no self-loops, and vertex
    identifiers are exactly 0..n-1.
    """

    __slots__ = ("n", "adj", "labels", "m", "_connected", "__weakref__")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v not in adj[u]:
                m += 1
                adj[u].add(v)
                adj[v].add(u)
        self.n = n
        self.m = m
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        if labels is None:
            self.labels: tuple[str, ...] = tuple(str(i) for i in range(n))
        else:
            if len(labels) != n:
                raise GraphError("label table size mismatch")
            self.labels = tuple(str(x) for x in labels)
        self._connected: bool | None = None

    # -- basic accessors ------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood N(v)."""
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        """Closed neighborhood N[v] = N(v) plus v itself."""
        self._check_vertex(v)
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def label_of(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v]

    def id_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- connectivity primitives ----------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        """Partition of V minus `removed` into maximal connected sets.

        Output is ordered ascending by smallest member.
        """
        cut = set(removed)
        seen = set(cut)
        out: list[frozenset[int]] = []
        for root in range(self.n):
            if root in seen:
                continue
            comp = {root}
            queue = deque([root])
            seen.add(root)
            while queue:
                w = queue.popleft()
                for z in self.adj[w]:
                    if z not in seen:
                        seen.add(z)
                        comp.add(z)
                        queue.append(z)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        if self._connected is None:
            self._connected = self.n <= 1 or len(self.components()) == 1
        return self._connected

    def same_component(self, removed: Iterable[int], u: int, v: int) -> bool:
        """True when u and v are connected after deleting `removed`."""
        cut = set(removed)
        if u in cut or v in cut:
            raise GraphError("endpoint inside the removed set")
        if u == v:
            return True
        seen = {u} | cut
        queue = deque([u])
        while queue:
            w = queue.popleft()
            for z in self.adj[w]:
                if z == v:
                    return True
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return False

    def separates(self, s: Iterable[int], u: int, v: int) -> bool:
        """True when a (u,v)-path exists in G but none survives deleting s."""
        s = set(s)
        if u in s or v in s:
            raise GraphError("separation endpoints must lie outside the deleted set")
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.same_component((), u, v):
            return False
        return not self.same_component(s, u, v)

    # -- local structure -------------------------------------------------

    def is_clique(self, s: Iterable[int]) -> bool:
        """Every two members adjacent; the empty set and singletons qualify."""
        vs = sorted(set(s))
        for v in vs:
            self._check_vertex(v)
        return all(b in self.adj[a] for a, b in combinations(vs, 2))

    def is_simplicial(self, v: int) -> bool:
        return self.is_clique(self.adj[v])

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the new-id -> old-id table."""
        old = sorted(set(vertices))
        index = {o: i for i, o in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u in old
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph(len(old), edges, [self.labels[o] for o in old]), old

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- parsing and serialization -------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines; '#' starts a comment line.

    Labels are arbitrary non-whitespace tokens, mapped to dense ids in
    first-appearance order.  Duplicate edges merge silently; self-loops are
    errors.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two vertex tokens, got {len(tokens)}")
        a, b = tokens
        if a == b:
            raise ParseError(f"line {lineno}: self-loop on {a!r}")
        for t in (a, b):
            if t not in ids:
                ids[t] = len(ids)
        edges.append((ids[a], ids[b]))
    if not ids:
        raise ParseError("empty edge list")
    return Graph(len(ids), edges, list(ids))


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


_G6_HEADER = ">>graph6<<"


def _g6_decode_n(data: str) -> tuple[int, int]:
    """Return (n, chars consumed) from the size prefix."""
    if not data:
        raise ParseError("empty graph6 string")
    c0 = ord(data[0]) - 63
    if c0 < 0 or c0 > 63:
        raise ParseError("invalid graph6 byte")
    if data[0] != "~":
        return c0, 1
    if len(data) >= 2 and data[1] != "~":
        if len(data) < 4:
            raise ParseError("truncated graph6 size")
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 4
    if len(data) < 8:
        raise ParseError("truncated graph6 size")
    n = 0
    for ch in data[2:8]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 8


def parse_graph6(line: str) -> Graph:
    """Parse one graph in standard graph6 encoding (optional header allowed)."""
    data = line.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise ParseError("empty graph6 line")
    n, used = _g6_decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise ParseError(f"graph6 body length {len(body)}, expected {nbytes} for n={n}")
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise ParseError("invalid graph6 byte")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no header), bit-exact."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        prefix = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in g.adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return prefix + "".join(chars)


def parse_graph6_file(text: str) -> list[Graph]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            out.append(parse_graph6(line))
    return out


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse a single graph in the declared format."""
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 input")
        return parse_graph6(lines[0])
    raise GraphError(f"unknown format {fmt!r}")


# -- generators ------------------------------------------------------------


def generate(model: str, n: int, parameter: float | None = None, seed: int = 0) -> Graph:
    """Deterministic test-graph generator.

    Models: "gnp" (each pair an edge with probability p), "random-tree"
    (uniform labeled tree via a random code sequence; "tree" is accepted as
    an alias), "complete", "cycle".
    """
    if n < 0:
        raise GraphError("n must be non-negative")
    rng = random.Random(seed)
    if model == "gnp":
        if parameter is None or not (0.0 <= parameter <= 1.0):
            raise GraphError("gnp needs a probability parameter in [0,1]")
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < parameter
        ]
        return Graph(n, edges)
    if model in ("random-tree", "tree"):
        return _random_tree(n, rng)
    if model == "complete":
        return Graph(n, combinations(range(n), 2))
    if model == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    raise GraphError(f"unknown model {model!r}")


def _random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree from a random sequence (classic code decoding)."""
    if n == 0:
        return Graph(0)
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def is_tree(g: Graph) -> bool:
    return g.is_connected() and g.m == g.n - 1


def is_caterpillar(g: Graph) -> bool:
    """Tree test: does removing every leaf leave a (possibly empty) path?"""
    if not is_tree(g):
        raise GraphError("caterpillar test requires a tree")
    spine = [v for v in range(g.n) if g.degree(v) > 1]
    if not spine:
        return True
    spine_set = set(spine)
    # The leaf-stripped subtree is a path iff no spine vertex keeps degree > 2.
    return all(len(g.adj[v] & spine_set) <= 2 for v in spine)


# -- named fixtures ---------------------------------------------------------

_G12_EDGES = (
    "v1 v2", "v1 v3", "v2 v3", "v4 v1", "v4 v2", "v4 v3",
    "v5 v1", "v5 v2", "v5 v3", "v5 v4",
    "v6 v4", "v6 v5", "v7 v4", "v7 v5", "v7 v6",
    "v8 v6", "v8 v7", "v9 v6", "v9 v7", "v9 v8",
    "v10 v8", "v10 v9", "v10 v11", "v11 v12", "v12 v8", "v12 v9",
)

_THETA7_EDGES = (
    "s t", "s z1", "z1 z2", "z2 t", "s p", "p r", "r q", "q t",
)


def g12() -> Graph:
    """Twelve-vertex chain of two K5-ish end blocks and two K4 middles."""
    order = [f"v{i}" for i in range(1, 13)]
    return _from_labeled_edges(order, _G12_EDGES)


def theta7() -> Graph:
    """Two chordless (s,t)-paths of inner lengths 2 and 3 plus the edge st."""
    return _from_labeled_edges(["s", "t", "z1", "z2", "p", "r", "q"], _THETA7_EDGES)


def k4() -> Graph:
    g = generate("complete", 4)
    return Graph(4, g.edges(), [f"v{i + 1}" for i in range(4)])


def c5() -> Graph:
    return Graph(5, [(i, (i + 1) % 5) for i in range(5)], list("abcde"))


def star3() -> Graph:
    """K_{1,3}: center c with leaves x, y, z."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)], ["c", "x", "y", "z"])


_FIXTURES = {"G12": g12, "THETA7": theta7, "K4": k4, "C5": c5, "STAR3": star3}


def fixture(name: str) -> Graph:
    try:
        return _FIXTURES[name]()
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}") from None


def _from_labeled_edges(order: list[str], edge_lines: Iterable[str]) -> Graph:
    ids = {lab: i for i, lab in enumerate(order)}
    edges = []
    for line in edge_lines:
        a, b = line.split()
        edges.append((ids[a], ids[b]))
    return Graph(len(order), edges, order)
