"""Finite simple graphs on vertex set {1, ..., r}.

Vertices are 1-based integer labels.  Graphs are immutable; every vertex
must meet at least one edge (a variable that appears in no generator of the
edge ideal would silently change depth bookkeeping, so isolated vertices are
rejected up front).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    BadLabelError,
    DisconnectedError,
    IsolatedVertexError,
    LoopEdgeError,
    ParseError,
    TooLargeError,
)

MAX_VERTICES_DEFAULT = 16


@dataclass(frozen=True)
class Graph:
    r: int
    adj: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adj[v - 1])

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.r + 1))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(1, self.r + 1):
            for w in self.adj[v - 1]:
                if v < w:
                    out.append((v, w))
        return tuple(out)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def is_leaf(self, v: int) -> bool:
        return self.degree(v) == 1

    def leaf_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w in self.neighbors(v) if self.is_leaf(w))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u - 1]


def build_graph(edges: Iterable[tuple[int, int]], r: Optional[int] = None) -> Graph:
    """Build a graph from an edge list.  Duplicate edges are merged.

    If r is omitted it defaults to the largest label seen.
    """
    edge_list = [(int(u), int(v)) for u, v in edges]
    if not edge_list:
        raise ParseError("graph must have at least one edge")
    for u, v in edge_list:
        if u == v:
            raise LoopEdgeError(f"loop edge at vertex {u}")
    max_label = max(max(u, v) for u, v in edge_list)
    min_label = min(min(u, v) for u, v in edge_list)
    if min_label < 1:
        raise BadLabelError(f"vertex labels must be >= 1, got {min_label}")
    if r is None:
        r = max_label
    elif max_label > r:
        raise BadLabelError(f"edge label {max_label} exceeds declared r={r}")
    nbrs: list[set[int]] = [set() for _ in range(r)]
    for u, v in edge_list:
        nbrs[u - 1].add(v)
        nbrs[v - 1].add(u)
    isolated = [v for v in range(1, r + 1) if not nbrs[v - 1]]
    if isolated:
        raise IsolatedVertexError(f"isolated vertices not allowed: {isolated}")
    return Graph(r=r, adj=tuple(tuple(sorted(s)) for s in nbrs))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: one "u v" pair per line, '#' comments,
    optional "r=<n>" header line."""
    r: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").startswith("r="):
            if r is not None:
                raise ParseError(f"line {lineno}: duplicate r= header")
            try:
                r = int(line.replace(" ", "")[2:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad r= header {line!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer label in {line!r}") from None
        edges.append((u, v))
    if not edges:
        raise ParseError("no edges found")
    try:
        return build_graph(edges, r=r)
    except (LoopEdgeError, BadLabelError, IsolatedVertexError):
        raise


def read_graph_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components with their bipartition status.

    bipartitions[i] is (X, Y) for a bipartite component (X contains its
    smallest vertex) and None for a nonbipartite one.
    """

    components: tuple[tuple[int, ...], ...]
    bipartitions: tuple[Optional[tuple[tuple[int, ...], tuple[int, ...]]], ...]

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def s(self) -> int:
        return sum(1 for b in self.bipartitions if b is not None)

    @property
    def t(self) -> int:
        return self.p - self.s


def decompose(g: Graph) -> ComponentDecomposition:
    seen = [False] * (g.r + 1)
    comps = []
    biparts = []
    for start in range(1, g.r + 1):
        if seen[start]:
            continue
        color = {start: 0}
        seen[start] = True
        queue = deque([start])
        comp = [start]
        bipartite = True
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = color[v] ^ 1
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
                elif color[w] == color[v]:
                    bipartite = False
        comp.sort()
        comps.append(tuple(comp))
        if bipartite:
            x = tuple(v for v in comp if color[v] == 0)
            y = tuple(v for v in comp if color[v] == 1)
            biparts.append((x, y))
        else:
            biparts.append(None)
    return ComponentDecomposition(tuple(comps), tuple(biparts))


def is_connected(g: Graph) -> bool:
    return decompose(g).p == 1


def is_bipartite(g: Graph) -> bool:
    return decompose(g).t == 0


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bipartition (X, Y) of a connected bipartite graph, 1 in X."""
    dec = decompose(g)
    if dec.p != 1:
        raise DisconnectedError("bipartition requires a connected graph")
    if dec.bipartitions[0] is None:
        from .errors import NotBipartiteError

        raise NotBipartiteError("graph has an odd cycle")
    return dec.bipartitions[0]


def leaf_edges(g: Graph) -> int:
    """Number of edges with at least one endpoint of degree 1."""
    count = 0
    for u, v in g.edges:
        if g.degree(u) == 1 or g.degree(v) == 1:
            count += 1
    return count


def mu_vector(g: Graph) -> tuple[int, ...]:
    """mu[v] = number of non-leaf edges incident with v (1-based result
    tuple indexed by v-1).  An edge is a leaf edge when an endpoint has
    degree 1."""
    mu = [0] * g.r
    for u, v in g.edges:
        if g.degree(u) > 1 and g.degree(v) > 1:
            mu[u - 1] += 1
            mu[v - 1] += 1
    return tuple(mu)


def simple_cycles(g: Graph, cap: int = MAX_VERTICES_DEFAULT) -> tuple[tuple[int, ...], ...]:
    """All simple cycles, each listed once as a vertex tuple starting at its
    smallest vertex with the lexicographically smaller direction."""
    if g.r > cap:
        raise TooLargeError(f"cycle enumeration capped at {cap} vertices, got r={g.r}")
    cycles: list[tuple[int, ...]] = []

    def dfs(start: int, path: list[int], on_path: set[int]) -> None:
        v = path[-1]
        for w in g.neighbors(v):
            if w == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                dfs(start, path, on_path)
                on_path.remove(w)
                path.pop()

    for start in range(1, g.r + 1):
        dfs(start, [start], {start})
    cycles.sort(key=lambda c: (len(c), c))
    return tuple(cycles)


@dataclass(frozen=True)
class CycleProfile:
    kind: str  # "tree" (acyclic), "unicyclic", "general"
    unique_cycle: Optional[tuple[int, ...]]
    max_even_len: Optional[int]
    max_odd_len: Optional[int]
    cycle_count: int


def cycle_profile(g: Graph, cap: int = MAX_VERTICES_DEFAULT) -> CycleProfile:
    cycles = simple_cycles(g, cap=cap)
    evens = [len(c) for c in cycles if len(c) % 2 == 0]
    odds = [len(c) for c in cycles if len(c) % 2 == 1]
    if not cycles:
        kind = "tree"
    elif len(cycles) == 1:
        kind = "unicyclic"
    else:
        kind = "general"
    return CycleProfile(
        kind=kind,
        unique_cycle=cycles[0] if len(cycles) == 1 else None,
        max_even_len=max(evens) if evens else None,
        max_odd_len=max(odds) if odds else None,
        cycle_count=len(cycles),
    )


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.num_edges == g.r - 1


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.num_edges == g.r


def maximal_independent_sets(g: Graph, cap: int = MAX_VERTICES_DEFAULT) -> tuple[tuple[int, ...], ...]:
    """All maximal independent sets, sorted.  Bron-Kerbosch with pivoting on
    the complement graph."""
    if g.r > cap:
        raise TooLargeError(f"independent-set enumeration capped at {cap} vertices")
    r = g.r
    full = (1 << r) - 1
    nonadj = [0] * r  # bit i set in nonadj[v] when v+1 and i+1 are non-adjacent, v != i
    for v in range(1, r + 1):
        mask = full & ~(1 << (v - 1))
        for w in g.neighbors(v):
            mask &= ~(1 << (w - 1))
        nonadj[v - 1] = mask
    out: list[int] = []

    def bk(chosen: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(chosen)
            return
        pux = p | x
        pivot = max(
            (b for b in range(r) if pux >> b & 1),
            key=lambda b: bin(p & nonadj[b]).count("1"),
        )
        cand = p & ~nonadj[pivot]
        while cand:
            bit = cand & -cand
            b = bit.bit_length() - 1
            bk(chosen | bit, p & nonadj[b], x & nonadj[b])
            p &= ~bit
            x |= bit
            cand &= ~bit

    bk(0, full, 0)
    sets = [tuple(v + 1 for v in range(r) if m >> v & 1) for m in out]
    sets.sort()
    return tuple(sets)


def minimal_vertex_covers(g: Graph, cap: int = MAX_VERTICES_DEFAULT) -> tuple[tuple[int, ...], ...]:
    """Complements of the maximal independent sets."""
    all_v = set(range(1, g.r + 1))
    covers = [tuple(sorted(all_v - set(s))) for s in maximal_independent_sets(g, cap=cap)]
    covers.sort()
    return tuple(covers)


def distance(g: Graph, u: int, v: int) -> int:
    """BFS distance; raises DisconnectedError when v is unreachable from u."""
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b not in dist:
                dist[b] = dist[a] + 1
                if b == v:
                    return dist[b]
                queue.append(b)
    raise DisconnectedError(f"no path from {u} to {v}")


def distance_to_cycle(g: Graph, v: int, cycle: Iterable[int]) -> int:
    cyc = set(cycle)
    if v in cyc:
        return 0
    dist = {v: 0}
    queue = deque([v])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b not in dist:
                dist[b] = dist[a] + 1
                if b in cyc:
                    return dist[b]
                queue.append(b)
    raise DisconnectedError(f"vertex {v} cannot reach the cycle")


def diameter(g: Graph) -> int:
    best = 0
    for u in range(1, g.r + 1):
        dist = {u: 0}
        queue = deque([u])
        while queue:
            a = queue.popleft()
            for b in g.neighbors(a):
                if b not in dist:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if len(dist) != g.r:
            raise DisconnectedError("diameter requires a connected graph")
        best = max(best, max(dist.values()))
    return best


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph relabeled to 1..len(vertices).

    Returns (subgraph, labels) where labels[i] is the original label of the
    new vertex i+1.
    """
    verts = tuple(sorted(set(vertices)))
    pos = {v: i + 1 for i, v in enumerate(verts)}
    edges = [
        (pos[u], pos[v])
        for u, v in g.edges
        if u in pos and v in pos
    ]
    return build_graph(edges, r=len(verts)), verts
