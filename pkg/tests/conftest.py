"""Shared builders and small independent oracles used across the tests."""
from __future__ import annotations

import itertools
import random

from edgedepth.graphs import Graph, build_graph

# One line per acceptance criterion, echoed after the test summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line("  " + line)


def cycle_edges(n: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(i + offset, i % n + 1 + offset) for i in range(1, n + 1)]


def path_edges(n: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(i + offset, i + 1 + offset) for i in range(1, n)]


def star_edges(leaves: int) -> list[tuple[int, int]]:
    return [(1, i) for i in range(2, leaves + 2)]


def complete_edges(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def random_graph(rng: random.Random, v: int, extra: int = 2) -> Graph:
    """Random graph on v labeled vertices without isolated vertices: a
    random spanning structure per eventual component is not forced, only
    that each vertex meets an edge."""
    while True:
        possible = [(i, j) for i in range(1, v + 1) for j in range(i + 1, v + 1)]
        n_edges = rng.randint(v - 1, min(len(possible), v + extra))
        edges = rng.sample(possible, n_edges)
        touched = {u for e in edges for u in e}
        if touched == set(range(1, v + 1)):
            return build_graph(edges, r=v)


def random_connected_graph(rng: random.Random, v: int, max_extra: int = 4) -> Graph:
    """Random connected graph: random spanning tree plus extra edges."""
    labels = list(range(1, v + 1))
    rng.shuffle(labels)
    edges = set()
    for i in range(1, v):
        j = rng.randrange(i)
        a, b = labels[i], labels[j]
        edges.add((min(a, b), max(a, b)))
    possible = [
        (i, j)
        for i in range(1, v + 1)
        for j in range(i + 1, v + 1)
        if (i, j) not in edges
    ]
    extra = rng.randint(0, min(len(possible), max_extra))
    edges.update(rng.sample(possible, extra))
    return build_graph(sorted(edges), r=v)


def independent_sets_exhaustive(g: Graph) -> list[tuple[int, ...]]:
    """All maximal independent sets by testing every vertex subset."""
    verts = list(range(1, g.r + 1))
    indep = []
    for k in range(g.r + 1):
        for sub in itertools.combinations(verts, k):
            s = set(sub)
            if all(not (u in s and v in s) for u, v in g.edges):
                indep.append(s)
    maximal = [s for s in indep if not any(s < t for t in indep)]
    return sorted(tuple(sorted(s)) for s in maximal)


def power_membership_exhaustive(g: Graph, n: int, m: tuple[int, ...]) -> bool:
    """Is x^m in I(g)^n?  Direct search over multisets of n edges."""
    edges = g.edges

    def rec(remaining: list[int], n_left: int, start: int) -> bool:
        if n_left == 0:
            return True
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if remaining[u - 1] >= 1 and remaining[v - 1] >= 1:
                remaining[u - 1] -= 1
                remaining[v - 1] -= 1
                if rec(remaining, n_left - 1, idx):
                    remaining[u - 1] += 1
                    remaining[v - 1] += 1
                    return True
                remaining[u - 1] += 1
                remaining[v - 1] += 1
        return False

    return rec(list(m), n, 0)


def isomorphism_classes(graph_list: list[Graph]) -> list[Graph]:
    """One representative per isomorphism class, via networkx."""
    import networkx as nx

    reps: list[tuple[tuple, "nx.Graph", Graph]] = []
    out = []
    for g in graph_list:
        ng = nx.Graph()
        ng.add_nodes_from(range(1, g.r + 1))
        ng.add_edges_from(g.edges)
        degs = tuple(sorted(d for _, d in ng.degree()))
        invariant = (g.r, g.num_edges, degs, tuple(sorted(nx.triangles(ng).values())))
        found = False
        for inv, other_ng, _ in reps:
            if inv == invariant and nx.is_isomorphic(ng, other_ng):
                found = True
                break
        if not found:
            reps.append((invariant, ng, g))
            out.append(g)
    return out
